//! Real-rooted test polynomials `1 + f_0 t + ... + f_{d-1} t^d` with positive
//! integer coefficients.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::binom_u128;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Most grid candidates a corpus may enumerate.
pub const MAX_GRID_CANDIDATES: u128 = 20_000_000;

/// Most root multisets a corpus may enumerate.
pub const MAX_ROOT_MULTISETS: u128 = 5_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Generator {
    /// Every coefficient vector in the box, kept when real-rooted.
    Grid,
    /// Every product of `1 + r t` with `1 <= r <= max_coeff`.
    RootProduct,
    Both,
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "grid" | "grid-sturm" => Ok(Generator::Grid),
            "root-product" => Ok(Generator::RootProduct),
            "both" => Ok(Generator::Both),
            _ => Err(Error::Parse { token: s.to_string(), input: "generator".into() }),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::Grid => "grid",
            Generator::RootProduct => "root-product",
            Generator::Both => "both",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub max_degree: usize,
    /// Coefficient bound for the grid, root bound for root products.
    pub max_coeff: u64,
    pub generator: Generator,
    /// Recorded in reports; both generators are exhaustive, so it does not
    /// change the corpus.
    pub seed: u64,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec { max_degree: 4, max_coeff: 20, generator: Generator::Grid, seed: 0 }
    }
}

/// A sorted, duplicate-free list of real-rooted polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus(Vec<IntPolynomial>);

impl Corpus {
    pub fn polynomials(&self) -> &[IntPolynomial] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Newton's inequalities, which every real-rooted polynomial with positive
/// coefficients satisfies. `None` if the arithmetic would overflow.
fn newton_ok(a: &[u64]) -> Option<bool> {
    let d = a.len() - 1;
    for i in 1..d {
        let lhs = (a[i] as u128)
            .checked_mul(a[i] as u128)?
            .checked_mul(binom_u128(d as u64, i - 1)?)?
            .checked_mul(binom_u128(d as u64, i + 1)?)?;
        let c = binom_u128(d as u64, i)?;
        let rhs = (a[i - 1] as u128)
            .checked_mul(a[i + 1] as u128)?
            .checked_mul(c)?
            .checked_mul(c)?;
        if lhs < rhs {
            return Some(false);
        }
    }
    Some(true)
}

fn is_real_rooted_candidate(a: &[u64]) -> bool {
    if newton_ok(a) == Some(false) {
        return false;
    }
    let p = IntPolynomial::new(a.iter().map(|&c| BigInt::from(c)).collect());
    p.is_real_rooted().expect("nonzero")
}

fn grid(max_degree: usize, max_coeff: u64) -> Result<Vec<IntPolynomial>> {
    let total: u128 = (1..=max_degree as u32)
        .map(|d| (max_coeff as u128).saturating_pow(d))
        .fold(0u128, |a, b| a.saturating_add(b));
    if total > MAX_GRID_CANDIDATES {
        return Err(Error::CapExceeded(format!(
            "grid of {total} candidates (cap {MAX_GRID_CANDIDATES})"
        )));
    }
    let mut out = Vec::new();
    for d in 1..=max_degree {
        let count = (max_coeff as u128).pow(d as u32) as u64;
        let found: Vec<IntPolynomial> = (0..count)
            .into_par_iter()
            .filter_map(|mut idx| {
                let mut a = vec![1u64; d + 1];
                for slot in a[1..].iter_mut().rev() {
                    *slot = idx % max_coeff + 1;
                    idx /= max_coeff;
                }
                is_real_rooted_candidate(&a)
                    .then(|| IntPolynomial::new(a.iter().map(|&c| BigInt::from(c)).collect()))
            })
            .collect();
        out.extend(found);
    }
    Ok(out)
}

fn multisets(max_size: usize, max_value: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<u64>> = (1..=max_value).map(|r| vec![r]).collect();
    while let Some(m) = stack.pop() {
        if m.len() < max_size {
            let last = *m.last().unwrap();
            for r in last..=max_value {
                let mut n = m.clone();
                n.push(r);
                stack.push(n);
            }
        }
        out.push(m);
    }
    out
}

fn root_products(max_degree: usize, max_root: u64) -> Result<Vec<IntPolynomial>> {
    // multisets of size <= D from n values: C(n + D, D) - 1
    let total = binom_u128(max_root + max_degree as u64, max_degree).unwrap_or(u128::MAX);
    if total > MAX_ROOT_MULTISETS {
        return Err(Error::CapExceeded(format!(
            "{total} root multisets (cap {MAX_ROOT_MULTISETS})"
        )));
    }
    Ok(multisets(max_degree, max_root)
        .par_iter()
        .map(|roots| {
            roots.iter().fold(IntPolynomial::one(), |acc, &r| {
                acc.product(&IntPolynomial::new(vec![BigInt::from(1), BigInt::from(r)]))
            })
        })
        .collect())
}

pub fn generate_corpus(spec: &CorpusSpec) -> Result<Corpus> {
    if spec.max_degree == 0 {
        return Err(Error::NonPositive { what: "max degree" });
    }
    if spec.max_coeff == 0 {
        return Err(Error::NonPositive { what: "max coefficient" });
    }
    let mut all = match spec.generator {
        Generator::Grid => grid(spec.max_degree, spec.max_coeff)?,
        Generator::RootProduct => root_products(spec.max_degree, spec.max_coeff)?,
        Generator::Both => {
            let mut v = grid(spec.max_degree, spec.max_coeff)?;
            v.extend(root_products(spec.max_degree, spec.max_coeff)?);
            v
        }
    };
    all.par_sort();
    all.dedup();
    Ok(Corpus(all))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn small_grid() {
        let c = generate_corpus(&CorpusSpec { max_degree: 2, max_coeff: 3, generator: Generator::Grid, seed: 0 })
            .unwrap();
        let ps = c.polynomials();
        assert!(ps.contains(&p("1,2,1")));
        assert!(ps.contains(&p("1,3,2")));
        assert!(!ps.contains(&p("1,1,1")));
        for q in ps {
            assert!(q.is_real_rooted().unwrap());
        }
        // degree 1: 3 polys; degree 2: b^2 >= 4c with b,c <= 3
        assert_eq!(c.len(), 3 + 3);
    }

    #[test]
    fn newton_filter_never_drops_real_rooted() {
        for a in 1..=12u64 {
            for b in 1..=12 {
                for c in 1..=12 {
                    let v = [1, a, b, c];
                    let p = IntPolynomial::new(v.iter().map(|&x| BigInt::from(x)).collect());
                    assert_eq!(is_real_rooted_candidate(&v), p.is_real_rooted().unwrap(), "{p}");
                }
            }
        }
    }

    #[test]
    fn small_root_products() {
        let c = generate_corpus(&CorpusSpec { max_degree: 2, max_coeff: 2, generator: Generator::RootProduct, seed: 0 })
            .unwrap();
        let expect: Vec<IntPolynomial> = ["1,1", "1,2", "1,2,1", "1,3,2", "1,4,4"].iter().map(|s| p(s)).collect();
        assert_eq!(c.polynomials(), &expect[..]);
    }

    #[test]
    fn deterministic_and_capped() {
        let spec = CorpusSpec { max_degree: 3, max_coeff: 6, generator: Generator::Both, seed: 9 };
        assert_eq!(generate_corpus(&spec).unwrap(), generate_corpus(&spec).unwrap());
        let huge = CorpusSpec { max_degree: 9, max_coeff: 100, generator: Generator::Grid, seed: 0 };
        assert!(matches!(generate_corpus(&huge), Err(Error::CapExceeded(_))));
    }
}
