//! Triangular arrays driven by a three-term recurrence
//!
//! ```text
//! T_{d,k} = a1(d,k) T_{d-1,k} + a2(d,k) T_{d-1,k-1} + a3(d,k) T_{d-2,k-1}
//! ```
//!
//! with `a_i(d,k) = r_i d + s_i k + t_i`, `T_{1,0} = 1` and `T_{d,k} = 0`
//! outside `0 <= k <= d-1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::combinatorics::mu;
use crate::error::{Error, Result};
use crate::fvector::{kk_report, FVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LinearCoeff {
    pub r: i64,
    pub s: i64,
    pub t: i64,
}

impl LinearCoeff {
    pub const fn new(r: i64, s: i64, t: i64) -> Self {
        LinearCoeff { r, s, t }
    }

    pub fn at(&self, d: i64, k: i64) -> i64 {
        self.r * d + self.s * k + self.t
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TriangleSpec {
    pub name: String,
    pub terms: [LinearCoeff; 3],
}

impl TriangleSpec {
    pub fn new(name: &str, terms: [(i64, i64, i64); 3]) -> Self {
        TriangleSpec {
            name: name.to_string(),
            terms: terms.map(|(r, s, t)| LinearCoeff::new(r, s, t)),
        }
    }

    /// `a_i(d,k)` for `i` in `1..=3`.
    pub fn a(&self, i: usize, d: i64, k: i64) -> i64 {
        self.terms[i - 1].at(d, k)
    }

    /// Permutations of `[d]` by number of descents.
    pub fn eulerian() -> Self {
        Self::new("eulerian", [(0, 1, 1), (1, -1, 0), (0, 0, 0)])
    }

    /// Set partitions of `[d]` by number of blocks minus one.
    pub fn stirling() -> Self {
        Self::new("stirling", [(0, 1, 1), (0, 0, 1), (0, 0, 0)])
    }

    /// Row `d` counts derangements of `[d+1]` with `k+1` exceedances.
    pub fn derangement() -> Self {
        Self::new("derangement", [(0, 1, 1), (1, -1, 0), (1, 0, 0)])
    }

    pub fn builtins() -> Vec<Self> {
        vec![Self::eulerian(), Self::stirling(), Self::derangement()]
    }

    pub fn builtin(name: &str) -> Result<Self> {
        Self::builtins()
            .into_iter()
            .find(|s| s.name == name)
            .ok_or_else(|| Error::UnknownTriangle(name.to_string()))
    }
}

impl fmt::Display for TriangleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        for c in &self.terms {
            write!(f, " {} {} {}", c.r, c.s, c.t)?;
        }
        Ok(())
    }
}

/// One line: `NAME r1 s1 t1 r2 s2 t2 r3 s3 t3`.
impl FromStr for TriangleSpec {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self> {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 10 {
            return Err(Error::InvalidTriangleSpec(format!(
                "expected a name and nine integers, got {} fields in '{line}'",
                tokens.len()
            )));
        }
        let mut v = [0i64; 9];
        for (slot, tok) in v.iter_mut().zip(&tokens[1..]) {
            *slot = tok.parse().map_err(|_| Error::Parse { token: tok.to_string(), input: line.to_string() })?;
        }
        Ok(Self::new(tokens[0], [(v[0], v[1], v[2]), (v[3], v[4], v[5]), (v[6], v[7], v[8])]))
    }
}

/// Reads one spec per line; blank lines and `#` comments are skipped.
pub fn parse_spec_file(text: &str) -> Result<Vec<TriangleSpec>> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(str::parse)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecReport {
    pub violations: Vec<String>,
}

impl SpecReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the side conditions on the coefficients. Non-negativity on the
/// region `d >= 2, 0 <= k <= d-1` is decided from its two corners and two
/// recession directions, then confirmed numerically for `d <= d_max`.
pub fn validate_spec(spec: &TriangleSpec, d_max: usize) -> SpecReport {
    let mut violations = Vec::new();
    let [a1, ..] = spec.terms;
    if a1.r != 0 || a1.t != 1 {
        violations.push(format!("first term must have r = 0 and t = 1, got r = {} and t = {}", a1.r, a1.t));
    }
    for (i, c) in spec.terms.iter().enumerate() {
        let i = i + 1;
        if c.s > c.t {
            violations.push(format!("term {i}: s = {} exceeds t = {}", c.s, c.t));
        }
        for (d, k) in [(2, 0), (2, 1)] {
            if c.at(d, k) < 0 {
                violations.push(format!("term {i} is negative at d = {d}, k = {k}"));
            }
        }
        if c.r < 0 {
            violations.push(format!("term {i} decreases along k fixed, d growing (r = {})", c.r));
        }
        if c.r + c.s < 0 {
            violations.push(format!("term {i} decreases along k = d - 1 (r + s = {})", c.r + c.s));
        }
        for d in 2..=d_max as i64 {
            if let Some(k) = (0..d).find(|&k| c.at(d, k) < 0) {
                violations.push(format!("term {i} is negative at d = {d}, k = {k}"));
                break;
            }
        }
    }
    SpecReport { violations }
}

/// Rows `T_1, ..., T_D`; `rows[d-1]` has entries `k = 0..d-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleRows {
    rows: Vec<Vec<BigInt>>,
}

impl TriangleRows {
    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// `T_{d,k}`, zero outside the triangle and for `d < 1`.
    pub fn get(&self, d: i64, k: i64) -> BigInt {
        if d < 1 || k < 0 || k >= d {
            return BigInt::zero();
        }
        self.rows
            .get(d as usize - 1)
            .and_then(|r| r.get(k as usize))
            .cloned()
            .unwrap_or_default()
    }

    /// Row `d` as a vector `(T_{d,0}, ..., T_{d,d-1})`.
    pub fn row_vector(&self, d: usize) -> Result<FVector> {
        let entries = self.rows[d - 1]
            .iter()
            .enumerate()
            .map(|(k, v)| v.to_biguint().ok_or(Error::NegativeCoefficient { index: k, value: v.to_string() }))
            .collect::<Result<Vec<BigUint>>>()?;
        FVector::new(entries)
    }
}

pub fn rows(spec: &TriangleSpec, depth: usize) -> Result<TriangleRows> {
    let report = validate_spec(spec, depth);
    if !report.holds() {
        return Err(Error::InvalidTriangleSpec(format!("{}: {}", spec.name, report.violations.join("; "))));
    }
    Ok(rows_unchecked(spec, depth))
}

fn rows_unchecked(spec: &TriangleSpec, depth: usize) -> TriangleRows {
    let mut tri = TriangleRows { rows: Vec::with_capacity(depth) };
    for d in 1..=depth as i64 {
        let row = if d == 1 {
            vec![BigInt::from(1)]
        } else {
            (0..d)
                .map(|k| {
                    BigInt::from(spec.a(1, d, k)) * tri.get(d - 1, k)
                        + BigInt::from(spec.a(2, d, k)) * tri.get(d - 1, k - 1)
                        + BigInt::from(spec.a(3, d, k)) * tri.get(d - 2, k - 1)
                })
                .collect()
        };
        tri.rows.push(row);
    }
    tri
}

/// One failure of `mu_k(lhs_arg) <= rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimFailure {
    pub claim: usize,
    pub d: usize,
    pub k: usize,
    /// The argument of `mu_k`.
    pub argument: BigUint,
    pub lhs: BigUint,
    pub rhs: BigInt,
}

impl fmt::Display for ClaimFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "claim ({}) at d={}, k={}: mu_{}({}) = {} > {}",
            self.claim, self.d, self.k, self.k, self.argument, self.lhs, self.rhs
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleReport {
    pub name: String,
    pub depth: usize,
    /// `row_kk[d-1]`: row `d` passes Kruskal-Katona.
    pub row_kk: Vec<bool>,
    /// Failures of the three per-term inequalities
    /// `mu_k(a_i(d,k) X_i(k)) <= a_i(d,k-1) X_i(k-1)` for `3 <= d`, `1 <= k <= d-1`,
    /// where `X_1(k) = T_{d-1,k}`, `X_2(k) = T_{d-1,k-1}`, `X_3(k) = T_{d-2,k-1}`.
    pub claim_failures: Vec<ClaimFailure>,
}

impl TriangleReport {
    pub fn rows_hold(&self) -> bool {
        self.row_kk.iter().all(|&b| b)
    }

    pub fn claims_hold(&self) -> bool {
        self.claim_failures.is_empty()
    }

    pub fn claim_failures_for(&self, claim: usize) -> impl Iterator<Item = &ClaimFailure> {
        self.claim_failures.iter().filter(move |c| c.claim == claim)
    }
}

pub fn check_rows_kk(spec: &TriangleSpec, depth: usize) -> Result<TriangleReport> {
    let tri = rows(spec, depth)?;
    let row_kk = (1..=depth)
        .map(|d| Ok(kk_report(&tri.row_vector(d)?).holds()))
        .collect::<Result<Vec<bool>>>()?;
    let mut claim_failures = Vec::new();
    for d in 3..=depth as i64 {
        for k in 1..d {
            let operands = [
                (tri.get(d - 1, k), tri.get(d - 1, k - 1)),
                (tri.get(d - 1, k - 1), tri.get(d - 1, k - 2)),
                (tri.get(d - 2, k - 1), tri.get(d - 2, k - 2)),
            ];
            for (i, (x, x_prev)) in operands.into_iter().enumerate() {
                let arg = BigInt::from(spec.a(i + 1, d, k)) * x;
                let rhs = BigInt::from(spec.a(i + 1, d, k - 1)) * x_prev;
                // coefficients are non-negative on the region, so arg >= 0
                let arg = arg.abs().to_biguint().expect("absolute value");
                let lhs = mu(&arg, k as usize);
                if BigInt::from(lhs.clone()) > rhs {
                    claim_failures.push(ClaimFailure { claim: i + 1, d: d as usize, k: k as usize, argument: arg, lhs, rhs });
                }
            }
        }
    }
    Ok(TriangleReport { name: spec.name.clone(), depth, row_kk, claim_failures })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    #[test]
    fn builtin_rows() {
        let e = rows(&TriangleSpec::eulerian(), 4).unwrap();
        assert_eq!(e.rows(), ints(&[&[1], &[1, 1], &[1, 4, 1], &[1, 11, 11, 1]]));
        let s = rows(&TriangleSpec::stirling(), 4).unwrap();
        assert_eq!(s.rows(), ints(&[&[1], &[1, 1], &[1, 3, 1], &[1, 7, 6, 1]]));
        let d = rows(&TriangleSpec::derangement(), 4).unwrap();
        assert_eq!(d.rows(), ints(&[&[1], &[1, 1], &[1, 7, 1], &[1, 21, 21, 1]]));
    }

    #[test]
    fn validation() {
        for s in TriangleSpec::builtins() {
            assert!(validate_spec(&s, 20).holds(), "{s}");
        }
        let bad = TriangleSpec::new("bad", [(0, 1, 2), (1, -1, 0), (0, 0, 0)]);
        assert!(!validate_spec(&bad, 5).holds());
        let neg = TriangleSpec::new("neg", [(0, 1, 1), (1, -2, 0), (0, 0, 0)]);
        let r = validate_spec(&neg, 5);
        assert!(!r.holds());
        assert!(rows(&neg, 3).is_err());
        let s_above_t = TriangleSpec::new("st", [(0, 1, 1), (0, 2, 1), (0, 0, 0)]);
        assert!(!validate_spec(&s_above_t, 5).holds());
    }

    #[test]
    fn spec_file() {
        let text = "# name r1 s1 t1 r2 s2 t2 r3 s3 t3\neulerian 0 1 1 1 -1 0 0 0 0\n\nmine 0 0 1 0 0 1 0 0 0 # binomial\n";
        let specs = parse_spec_file(text).unwrap();
        assert_eq!(specs[0], TriangleSpec::eulerian());
        assert_eq!(specs[1].name, "mine");
        assert_eq!(rows(&specs[1], 4).unwrap().rows()[3], ints(&[&[1, 3, 3, 1]])[0]);
        assert!(matches!(parse_spec_file("x 0 1 1 1 -1 0 0 0 q"), Err(Error::Parse { token, .. }) if token == "q"));
        assert!(parse_spec_file("x 1 2").is_err());
        assert_eq!(TriangleSpec::eulerian().to_string().parse::<TriangleSpec>().unwrap(), TriangleSpec::eulerian());
    }

    #[test]
    fn rows_pass_kk() {
        for s in TriangleSpec::builtins() {
            let r = check_rows_kk(&s, 12).unwrap();
            assert!(r.rows_hold(), "{}", s.name);
            assert!(r.claim_failures_for(1).next().is_none(), "{}", s.name);
        }
    }

    #[test]
    fn second_claim_fails_for_eulerian() {
        // mu_2(2 * T_{3,1}) = mu_2(8) = 5 while a2(4,1) T_{3,0} = 3
        let r = check_rows_kk(&TriangleSpec::eulerian(), 4).unwrap();
        let f = r.claim_failures_for(2).find(|f| f.d == 4 && f.k == 2).unwrap();
        assert_eq!((f.argument.clone(), f.lhs.clone(), f.rhs.clone()), (8u32.into(), 5u32.into(), 3.into()));
    }
}
