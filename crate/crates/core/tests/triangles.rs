mod common;

use std::collections::HashMap;

use num_bigint::BigInt;

use fpoly::fvector::check_kk;
use fpoly::triangle::{check_rows_kk, parse_spec_file, rows, validate_spec, TriangleSpec};

fn as_big(v: Vec<u64>) -> Vec<BigInt> {
    v.into_iter().map(BigInt::from).collect()
}

/// The recurrence evaluated by memoised recursion in machine integers.
fn naive(spec: &TriangleSpec, d: i64, k: i64, memo: &mut HashMap<(i64, i64), i128>) -> i128 {
    if d < 1 || k < 0 || k >= d {
        return 0;
    }
    if d == 1 {
        return 1;
    }
    if let Some(&v) = memo.get(&(d, k)) {
        return v;
    }
    let v = spec.a(1, d, k) as i128 * naive(spec, d - 1, k, memo)
        + spec.a(2, d, k) as i128 * naive(spec, d - 1, k - 1, memo)
        + spec.a(3, d, k) as i128 * naive(spec, d - 2, k - 1, memo);
    memo.insert((d, k), v);
    v
}

#[test]
fn builtins_match_brute_force() {
    let e = rows(&TriangleSpec::eulerian(), 8).unwrap();
    let s = rows(&TriangleSpec::stirling(), 8).unwrap();
    let der = rows(&TriangleSpec::derangement(), 7).unwrap();
    for d in 1..=8 {
        assert_eq!(e.rows()[d - 1], as_big(common::eulerian_by_descents(d)), "eulerian {d}");
        assert_eq!(s.rows()[d - 1], as_big(common::stirling_by_blocks(d)), "stirling {d}");
    }
    for d in 1..=7 {
        // derangements of [d+1] have between 1 and d exceedances
        assert_eq!(der.rows()[d - 1], as_big(common::derangements_by_exceedances(d + 1)[1..].to_vec()), "derangement {d}");
    }
}

#[test]
fn builtin_rows_pass_kk() {
    for spec in TriangleSpec::builtins() {
        let t = rows(&spec, 14).unwrap();
        for d in 1..=14 {
            assert!(check_kk(&t.row_vector(d).unwrap()), "{} row {d}", spec.name);
        }
    }
}

#[test]
fn spec_file_round_trip() {
    let text = "# binomial rows\npascal 0 0 1 0 0 1 0 0 0\n\nshifted 0 1 1 1 -1 0 0 0 1  # extra term\n";
    let specs = parse_spec_file(text).unwrap();
    assert_eq!(specs.len(), 2);
    for spec in &specs {
        assert_eq!(spec.to_string().parse::<TriangleSpec>().unwrap(), *spec);
        assert!(validate_spec(spec, 20).holds(), "{spec}");
        let t = rows(spec, 12).unwrap();
        let mut memo = HashMap::new();
        for d in 1..=12 {
            for k in 0..d {
                assert_eq!(t.get(d, k), BigInt::from(naive(spec, d, k, &mut memo)), "{} ({d},{k})", spec.name);
            }
        }
        assert!(check_rows_kk(spec, 12).unwrap().rows_hold(), "{}", spec.name);
    }
    let pascal = rows(&specs[0], 6).unwrap();
    assert_eq!(pascal.rows()[5], as_big(vec![1, 5, 10, 10, 5, 1]));
}

#[test]
fn invalid_specs_are_rejected() {
    assert!(parse_spec_file("short 1 2 3").is_err());
    assert!(parse_spec_file("bad 0 0 1 0 0 x 0 0 0").is_err());
    for line in [
        "doubled 0 0 2 0 0 1 0 0 0",
        "steep 0 2 1 0 0 1 0 0 0",
        "sinking 0 0 1 -1 0 5 0 0 0",
        "leaning 0 0 1 1 -2 3 0 0 0",
    ] {
        let spec: TriangleSpec = line.parse().unwrap();
        assert!(!validate_spec(&spec, 10).holds(), "{line}");
        assert!(rows(&spec, 5).is_err(), "{line}");
    }
}

#[test]
fn claim_failures_carry_witnesses() {
    let r = check_rows_kk(&TriangleSpec::eulerian(), 6).unwrap();
    let f = r
        .claim_failures_for(2)
        .find(|f| f.d == 4 && f.k == 2)
        .expect("known failure at d=4, k=2");
    assert_eq!(f.to_string(), "claim (2) at d=4, k=2: mu_2(8) = 5 > 3");
    assert_eq!(r.claim_failures_for(1).count(), 0);
}
