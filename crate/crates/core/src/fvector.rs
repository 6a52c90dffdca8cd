//! Face-number vectors and the numerical conditions on them.
//!
//! An [`FVector`] is written `(1, f_0, f_1, ..., f_{d-1})`; entry `i + 1`
//! counts the i-dimensional faces.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::combinatorics::{binomial, kappa, mu};
use crate::error::{Error, Result};
use crate::poly::{parse_int_list, IntPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FVector {
    entries: Vec<BigUint>,
}

fn unsigned_entries(raw: Vec<BigInt>) -> Result<Vec<BigUint>> {
    raw.into_iter()
        .enumerate()
        .map(|(index, c)| {
            c.to_biguint()
                .ok_or(Error::NegativeCoefficient { index, value: c.to_string() })
        })
        .collect()
}

impl FVector {
    pub fn new(entries: Vec<BigUint>) -> Result<Self> {
        match entries.first() {
            None => Err(Error::MalformedVector("empty vector".into())),
            Some(e) if !e.is_one() => Err(Error::ConstantTermNotOne(e.to_string())),
            _ => Ok(FVector { entries }),
        }
    }

    pub fn from_u64s(entries: &[u64]) -> Result<Self> {
        Self::new(entries.iter().map(|&e| BigUint::from(e)).collect())
    }

    /// Reads the coefficients of `p` as a vector; they must be non-negative.
    pub fn from_polynomial(p: &IntPolynomial) -> Result<Self> {
        Self::new(unsigned_entries(p.coeffs().to_vec())?)
    }

    pub fn to_polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.entries.iter().map(|e| BigInt::from(e.clone())).collect())
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `d` for a vector `(1, f_0, ..., f_{d-1})`.
    pub fn dim_bound(&self) -> usize {
        self.entries.len() - 1
    }

    /// Entry at vector position `pos`, zero past the end.
    pub fn at(&self, pos: usize) -> BigUint {
        self.entries.get(pos).cloned().unwrap_or_default()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for FVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(unsigned_entries(parse_int_list(s)?)?)
    }
}

/// `(0, 1, a_0, ..., a_{d-2})`: the face numbers a new vertex brings in when
/// it is coned over a subcomplex with f-vector `(1, a_0, ...)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdmissibleVector {
    entries: Vec<BigUint>,
}

impl AdmissibleVector {
    pub fn new(entries: Vec<BigUint>) -> Result<Self> {
        if entries.len() < 2 || !entries[0].is_zero() || !entries[1].is_one() {
            let shown: Vec<String> = entries.iter().map(|e| e.to_string()).collect();
            return Err(Error::MalformedVector(format!(
                "admissible vector must start with 0,1: got ({})",
                shown.join(",")
            )));
        }
        Ok(AdmissibleVector { entries })
    }

    pub fn from_u64s(entries: &[u64]) -> Result<Self> {
        Self::new(entries.iter().map(|&e| BigUint::from(e)).collect())
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.entries
    }

    /// `(1, a_0, a_1, ...)`.
    pub fn inner(&self) -> FVector {
        let mut v = vec![BigUint::one()];
        v.extend(self.entries[2..].iter().cloned());
        FVector { entries: v }
    }
}

impl FromStr for AdmissibleVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(unsigned_entries(parse_int_list(s)?)?)
    }
}

/// One index where `lhs <= rhs` fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexFailure {
    pub index: usize,
    pub lhs: BigUint,
    pub rhs: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub failures: Vec<IndexFailure>,
}

impl ConditionReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

fn shadow_condition(f: &FVector, op: fn(&BigUint, usize) -> BigUint) -> ConditionReport {
    let failures = (0..f.dim_bound())
        .filter_map(|i| {
            let lhs = op(&f.entries[i + 1], i + 1);
            let rhs = &f.entries[i];
            (lhs > *rhs).then(|| IndexFailure { index: i, lhs, rhs: rhs.clone() })
        })
        .collect();
    ConditionReport { failures }
}

/// `mu_{i+1}(f_i) <= f_{i-1}` for `0 <= i <= d-1`; failing `i` are reported.
pub fn kk_report(f: &FVector) -> ConditionReport {
    shadow_condition(f, mu)
}

pub fn check_kk(f: &FVector) -> bool {
    kk_report(f).holds()
}

/// `kappa_{i+1}(f_i) <= f_{i-1}` for `0 <= i <= d-1`.
pub fn macaulay_report(f: &FVector) -> ConditionReport {
    shadow_condition(f, kappa)
}

pub fn check_macaulay(f: &FVector) -> bool {
    macaulay_report(f).holds()
}

/// `h_i = sum_j (-1)^{i-j} C(d-j, i-j) f_{j-1}` with `d = len - 1`.
pub fn f_to_h(f: &FVector) -> Vec<BigInt> {
    let d = f.dim_bound();
    (0..=d)
        .map(|i| {
            (0..=i).fold(BigInt::zero(), |acc, j| {
                let term = BigInt::from(binomial(&BigUint::from(d - j), i - j) * &f.entries[j]);
                if (i - j) % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect()
}

/// Vector positions `0, k, 2k, ...`, trailing zeros dropped.
pub fn veronese_subsequence(f: &FVector, k: usize) -> Result<FVector> {
    if k == 0 {
        return Err(Error::NonPositive { what: "Veronese step" });
    }
    let mut entries: Vec<BigUint> = f.entries.iter().step_by(k).cloned().collect();
    while entries.len() > 1 && entries.last().is_some_and(|e| e.is_zero()) {
        entries.pop();
    }
    Ok(FVector { entries })
}

/// `(1, 2 f_0, 3 f_1, ..., (d+1) f_{d-1})`.
pub fn f_plus_tfprime_vector(f: &FVector) -> FVector {
    FVector {
        entries: f
            .entries
            .iter()
            .enumerate()
            .map(|(i, e)| if i == 0 { e.clone() } else { e * BigUint::from(i + 1) })
            .collect(),
    }
}

/// `mu_{i+1}((i+2) f_i) <= (i+1) f_{i-1}` for `1 <= i <= d-1`.
pub fn cor_fvector_report(f: &FVector) -> ConditionReport {
    let failures = (1..f.dim_bound())
        .filter_map(|i| {
            let lhs = mu(&(&f.entries[i + 1] * BigUint::from(i + 2)), i + 1);
            let rhs = &f.entries[i] * BigUint::from(i + 1);
            (lhs > rhs).then_some(IndexFailure { index: i, lhs, rhs })
        })
        .collect();
    ConditionReport { failures }
}

pub fn check_cor_fvector(f: &FVector) -> bool {
    cor_fvector_report(f).holds()
}

/// The inner vector passes Kruskal-Katona and `f_i >= a_i` wherever `a_i` is given.
pub fn is_basic_admissible(alpha: &AdmissibleVector, f: &FVector) -> Result<bool> {
    if alpha.entries.len() > f.entries.len() {
        return Err(Error::DimensionMismatch {
            expected: f.entries.len(),
            found: alpha.entries.len(),
        });
    }
    if !check_kk(&alpha.inner()) {
        return Ok(false);
    }
    Ok(alpha.entries[2..]
        .iter()
        .enumerate()
        .all(|(i, a)| f.entries[i + 1] >= *a))
}

/// Adds `alpha` position by position (shorter vectors are zero-padded).
pub fn add_admissible(f: &FVector, alpha: &AdmissibleVector) -> FVector {
    let n = f.entries.len().max(alpha.entries.len());
    FVector {
        entries: (0..n)
            .map(|p| f.at(p) + alpha.entries.get(p).cloned().unwrap_or_default())
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    /// `f + beta_1 + ... + beta_k` when every step is basic admissible.
    pub sum: Option<FVector>,
    /// Zero-based position of the first beta that is not basic admissible
    /// for the running sum (including shape mismatches).
    pub failed_at: Option<usize>,
}

impl ChainReport {
    pub fn holds(&self) -> bool {
        self.failed_at.is_none()
    }
}

pub fn check_admissible_chain(f: &FVector, betas: &[AdmissibleVector]) -> ChainReport {
    let mut running = f.clone();
    for (k, beta) in betas.iter().enumerate() {
        if !is_basic_admissible(beta, &running).unwrap_or(false) {
            return ChainReport { sum: None, failed_at: Some(k) };
        }
        running = add_admissible(&running, beta);
    }
    ChainReport { sum: Some(running), failed_at: None }
}
