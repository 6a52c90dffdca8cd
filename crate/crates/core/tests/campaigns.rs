use num_bigint::BigInt;

use fpoly::decomposition::check_conjecture_second;
use fpoly::fvector::{check_kk, FVector};
use fpoly::harness::campaign::{run_campaign, run_on, Campaign};
use fpoly::harness::corpus::{generate_corpus, CorpusSpec, Generator};
use fpoly::poly::IntPolynomial;

fn spec(generator: Generator) -> CorpusSpec {
    CorpusSpec { max_degree: 4, max_coeff: 8, generator, seed: 3 }
}

#[test]
fn reruns_give_identical_records() {
    let s = spec(Generator::Both);
    let corpus = generate_corpus(&s).unwrap();
    for c in Campaign::ALL {
        let a = run_campaign(c, &corpus, &s, Some(1)).unwrap();
        let b = run_campaign(c, &corpus, &s, Some(3)).unwrap();
        assert_eq!(a.records, b.records, "{c}");
        assert_eq!(a.inputs, corpus.len());
    }
}

#[test]
fn jsonl_lines_are_ordered_and_summarised() {
    let s = spec(Generator::Grid);
    let corpus = generate_corpus(&s).unwrap();
    let r = run_campaign(Campaign::QueSecond, &corpus, &s, None).unwrap();
    let mut buf = Vec::new();
    r.write_jsonl(&mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), r.records.len() + 1);
    let keys = ["campaign", "input", "predicate", "detail"];
    for (line, rec) in lines.iter().zip(&r.records) {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v.as_object().unwrap().keys().count(), keys.len());
        assert_eq!(v["input"], rec.input.as_str());
        let positions: Vec<usize> = keys.iter().map(|k| line.find(&format!("\"{k}\"")).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]), "{line}");
    }
    let summary: serde_json::Value = serde_json::from_str(lines.last().unwrap()).unwrap();
    assert_eq!(summary["inputs"], corpus.len());
    assert_eq!(summary["findings"], r.findings().count());
}

#[test]
fn conjecture_implies_kk_on_arbitrary_vectors() {
    // no real-rootedness here, so the implication is exercised on many shapes
    let mut polys = Vec::new();
    for a in 1..=7i64 {
        for b in 1..=12 {
            for c in 1..=12 {
                polys.push(IntPolynomial::from_i64s(&[1, a, b, c]));
            }
        }
    }
    let r = run_on(Campaign::ConjSecond, &polys, None).unwrap();
    assert_eq!(r.failures().count(), 0);
    let mut expected = 0;
    for p in &polys {
        let holds = check_conjecture_second(p).unwrap();
        if holds {
            assert!(check_kk(&FVector::from_polynomial(p).unwrap()), "{p}");
        } else {
            expected += 1;
        }
    }
    assert_eq!(r.findings().count(), expected);
}

#[test]
fn theorem_campaigns_are_clean_on_root_products() {
    let s = CorpusSpec { max_degree: 5, max_coeff: 7, generator: Generator::RootProduct, seed: 0 };
    let corpus = generate_corpus(&s).unwrap();
    for c in Campaign::ALL.into_iter().filter(|c| c.is_theorem()) {
        let r = run_campaign(c, &corpus, &s, None).unwrap();
        assert!(r.is_clean(), "{c}: {:?}", r.records.first());
    }
}

#[test]
fn every_corpus_member_is_real_rooted_with_unit_constant() {
    let corpus = generate_corpus(&spec(Generator::Both)).unwrap();
    for p in corpus.polynomials() {
        assert_eq!(p.coeff(0), BigInt::from(1));
        assert!(p.coeffs().iter().all(|c| *c > BigInt::from(0)));
        assert!(p.is_real_rooted().unwrap(), "{p}");
    }
}
