//! Campaigns apply one predicate to every polynomial of a corpus.
//!
//! Theorem campaigns must never fail; a record there is a failure of the
//! implementation (or of the theorem). Question and conjecture campaigns
//! record counterexamples as findings.

use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::binrep::{binrep, ceiling_condition, check_monotone, Monotone};
use crate::decomposition::{check_conjecture_second_lex, recursive_decompose};
use crate::error::{Error, Result};
use crate::fvector::{kk_report, macaulay_report, ConditionReport, FVector};
use crate::harness::corpus::{Corpus, CorpusSpec};
use crate::poly::IntPolynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Campaign {
    QuestionBs,
    ConjSecond,
    QueSecond,
    ThmMonotone,
    ThmCeilingImpliesKk,
    CorHvector,
}

impl Campaign {
    pub const ALL: [Campaign; 6] = [
        Campaign::QuestionBs,
        Campaign::ConjSecond,
        Campaign::QueSecond,
        Campaign::ThmMonotone,
        Campaign::ThmCeilingImpliesKk,
        Campaign::CorHvector,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Campaign::QuestionBs => "question-bs",
            Campaign::ConjSecond => "conj-second",
            Campaign::QueSecond => "que-second",
            Campaign::ThmMonotone => "thm-monotone",
            Campaign::ThmCeilingImpliesKk => "thm-ceiling-implies-kk",
            Campaign::CorHvector => "cor-hvector",
        }
    }

    /// Whether a record is a hard failure rather than a finding.
    pub fn is_theorem(&self) -> bool {
        matches!(self, Campaign::ThmMonotone | Campaign::ThmCeilingImpliesKk | Campaign::CorHvector)
    }
}

impl fmt::Display for Campaign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Campaign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Campaign::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCampaign(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Finding,
    Failure,
}

/// One report line. Field order is the serialisation order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Record {
    pub campaign: String,
    pub input: String,
    pub predicate: String,
    pub detail: String,
    #[serde(skip)]
    pub severity: Severity,
    #[serde(skip)]
    coeffs: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CampaignReport {
    pub campaign: Campaign,
    pub corpus: Option<CorpusSpec>,
    pub inputs: usize,
    /// Sorted by input coefficients, then predicate.
    pub records: Vec<Record>,
    pub wall_time: Duration,
}

impl CampaignReport {
    pub fn findings(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| r.severity == Severity::Finding)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| r.severity == Severity::Failure)
    }

    pub fn is_clean(&self) -> bool {
        self.records.is_empty()
    }

    /// JSON lines: one per record, then a summary object.
    pub fn write_jsonl<W: Write>(&self, mut out: W) -> Result<()> {
        for r in &self.records {
            writeln!(out, "{}", serde_json::to_string(r).expect("plain strings serialise"))?;
        }
        let summary = Summary {
            campaign: self.campaign.name(),
            generator: self.corpus.map(|c| c.generator.to_string()),
            max_degree: self.corpus.map(|c| c.max_degree),
            max_coeff: self.corpus.map(|c| c.max_coeff),
            seed: self.corpus.map(|c| c.seed),
            inputs: self.inputs,
            findings: self.findings().count(),
            failures: self.failures().count(),
            wall_ms: self.wall_time.as_millis() as u64,
        };
        writeln!(out, "{}", serde_json::to_string(&summary).expect("plain fields serialise"))?;
        Ok(())
    }
}

#[derive(Serialize)]
struct Summary {
    campaign: &'static str,
    generator: Option<String>,
    max_degree: Option<usize>,
    max_coeff: Option<u64>,
    seed: Option<u64>,
    inputs: usize,
    findings: usize,
    failures: usize,
    wall_ms: u64,
}

fn describe(report: &ConditionReport, op: &str) -> String {
    report
        .failures
        .iter()
        .map(|f| format!("i={}: {op}_{}(f_{}) = {} > f_{} = {}", f.index, f.index + 1, f.index, f.lhs, f.index as i64 - 1, f.rhs))
        .collect::<Vec<_>>()
        .join("; ")
}

struct Checker<'a> {
    campaign: Campaign,
    p: &'a IntPolynomial,
    out: Vec<Record>,
}

impl Checker<'_> {
    fn push(&mut self, severity: Severity, predicate: &str, detail: String) {
        self.out.push(Record {
            campaign: self.campaign.name().to_string(),
            input: self.p.to_string(),
            predicate: predicate.to_string(),
            detail,
            severity,
            coeffs: self.p.coeffs().to_vec(),
        });
    }

    fn finding(&mut self, predicate: &str, detail: String) {
        self.push(Severity::Finding, predicate, detail);
    }

    fn failure(&mut self, predicate: &str, detail: String) {
        self.push(Severity::Failure, predicate, detail);
    }
}

fn kk_of(p: &IntPolynomial) -> Result<ConditionReport> {
    Ok(kk_report(&FVector::from_polynomial(p)?))
}

fn check_one(campaign: Campaign, p: &IntPolynomial, tol: &BigRational) -> Result<Vec<Record>> {
    let mut c = Checker { campaign, p, out: Vec::new() };
    match campaign {
        Campaign::QuestionBs => {
            let kk = kk_of(p)?;
            if !kk.holds() {
                c.finding("kruskal-katona", describe(&kk, "mu"));
            }
        }
        Campaign::ConjSecond => {
            let dec = recursive_decompose(p)?;
            let d = p.degree().unwrap_or(0);
            let bad: Vec<String> = (1..d)
                .filter(|&i| dec.h().coeff(i) > dec.g().coeff(i))
                .map(|i| format!("i={i}: h_i = {} > g_i = {}", dec.h().coeff(i), dec.g().coeff(i)))
                .collect();
            let holds = bad.is_empty();
            if !holds {
                c.finding("h_i<=g_i", bad.join("; "));
            }
            if check_conjecture_second_lex(p)? != holds {
                c.failure("lex-path-agreement", format!("coefficient path says {holds}, cascade-top path disagrees"));
            }
            if holds {
                let kk = kk_of(p)?;
                if !kk.holds() {
                    c.failure("conj-second=>kruskal-katona", describe(&kk, "mu"));
                }
            }
        }
        Campaign::QueSecond => {
            let dec = recursive_decompose(p)?;
            if !dec.g().is_real_rooted()? {
                c.finding("g-real-rooted", format!("g = {}", dec.g()));
            }
            if !dec.h().is_real_rooted()? {
                c.finding("h-real-rooted", format!("h = {}", dec.h()));
            }
        }
        Campaign::ThmMonotone => match check_monotone(&binrep(p, tol)?) {
            Monotone::Holds => {}
            Monotone::Violated { index } => {
                c.failure("x_i>=x_{i+1}", format!("x_{index} < x_{}", index + 1))
            }
            Monotone::Indeterminate { index } => c.failure(
                "x_i>=x_{i+1}",
                format!("x_{index} and x_{} not separated within the refinement budget", index + 1),
            ),
        },
        Campaign::ThmCeilingImpliesKk => {
            if ceiling_condition(p)?.holds {
                let kk = kk_of(p)?;
                if !kk.holds() {
                    c.failure("ceiling=>kruskal-katona", describe(&kk, "mu"));
                }
            }
        }
        Campaign::CorHvector => {
            let m = macaulay_report(&FVector::from_polynomial(p)?);
            if !m.holds() {
                c.failure("macaulay", describe(&m, "kappa"));
            }
        }
    }
    Ok(c.out)
}

fn evaluate(campaign: Campaign, p: &IntPolynomial) -> Vec<Record> {
    // coarse starting enclosures; comparisons refine on demand
    let tol = BigRational::new(1.into(), 4.into());
    check_one(campaign, p, &tol).unwrap_or_else(|e| {
        let mut c = Checker { campaign, p, out: Vec::new() };
        c.failure("evaluation", e.to_string());
        c.out
    })
}

/// Runs `campaign` over `polys`, on `jobs` threads (the global pool if `None`).
pub fn run_on(campaign: Campaign, polys: &[IntPolynomial], jobs: Option<usize>) -> Result<CampaignReport> {
    let start = Instant::now();
    let work = || -> Vec<Record> {
        polys.par_iter().flat_map_iter(|p| evaluate(campaign, p)).collect()
    };
    let mut records = match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Io(e.to_string()))?
            .install(work),
        None => work(),
    };
    records.sort_by(|a, b| a.coeffs.cmp(&b.coeffs).then_with(|| a.predicate.cmp(&b.predicate)));
    Ok(CampaignReport { campaign, corpus: None, inputs: polys.len(), records, wall_time: start.elapsed() })
}

pub fn run_campaign(campaign: Campaign, corpus: &Corpus, spec: &CorpusSpec, jobs: Option<usize>) -> Result<CampaignReport> {
    let mut report = run_on(campaign, corpus.polynomials(), jobs)?;
    report.corpus = Some(*spec);
    Ok(report)
}
