//! Real binomial representation of a polynomial `1 + y_1 t + ... + y_d t^d`
//! with positive coefficients: the unique reals `x_i >= i - 1` such that
//! `y_i = C(x_i, i)`.
//!
//! Each `x_i` is held as a certified enclosure. Integer solutions are found
//! exactly; otherwise `x_i` lies strictly inside a dyadic interval obtained by
//! bisection of `(a, a + 1)` where `a = floor(x_i)`. Ceilings are always exact.
//!
//! Note: one of the worked remarks states the ceiling condition with the
//! indices the other way round (`x_i >= ceil(x_{i-1})`). The condition
//! implemented here is `x_{i-1} >= ceil(x_i)`, which is the form the
//! sufficiency theorem uses.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::combinatorics::{binomial, largest_top};
use crate::error::{Error, Result};
use crate::poly::{sturm, IntPolynomial};

/// `10^-9`, the reporting precision.
pub fn default_tolerance() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u64.pow(9)))
}

/// `10^-30`, the refinement budget for comparing two irrational entries.
pub fn default_refine_budget() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u32).pow(30))
}

/// `C(x, k) = x (x-1) ... (x-k+1) / k!` at a rational point.
pub fn binom_real(x: &BigRational, k: usize) -> BigRational {
    let mut num = BigRational::one();
    let mut fact = BigInt::one();
    for j in 0..k {
        num *= x - BigRational::from(BigInt::from(j));
        fact *= BigInt::from(j + 1);
    }
    num / BigRational::from(fact)
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

/// One `x_i`, enclosed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinRepEntry {
    index: usize,
    value: BigUint,
    ceil: BigUint,
    exact: bool,
    // x lies strictly inside (lo_num, lo_num + 1) / 2^scale unless exact,
    // in which case x = lo_num and scale = 0
    lo_num: BigInt,
    scale: u64,
}

impl BinRepEntry {
    /// The binomial index `i` (so `y = C(x, i)`).
    pub fn index(&self) -> usize {
        self.index
    }

    /// The coefficient `y`.
    pub fn value(&self) -> &BigUint {
        &self.value
    }

    /// `min { m integer : C(m, i) >= y }`.
    pub fn ceil(&self) -> &BigUint {
        &self.ceil
    }

    /// `floor(x)`.
    pub fn floor(&self) -> BigUint {
        if self.exact {
            self.ceil.clone()
        } else {
            &self.ceil - 1u32
        }
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn lo(&self) -> BigRational {
        BigRational::new(self.lo_num.clone(), BigInt::one() << self.scale)
    }

    pub fn hi(&self) -> BigRational {
        if self.exact {
            self.lo()
        } else {
            BigRational::new(&self.lo_num + 1, BigInt::one() << self.scale)
        }
    }

    pub fn width(&self) -> BigRational {
        self.hi() - self.lo()
    }

    /// Sign of `C(n / 2^s, k) - y` for a point above `k - 1`.
    fn compare_at(&self, num: &BigInt, scale: u64) -> Ordering {
        let unit = BigInt::one() << scale;
        let mut prod = BigInt::one();
        for j in 0..self.index {
            prod *= num - &unit * BigInt::from(j);
        }
        let target = factorial(self.index)
            * BigInt::from(self.value.clone())
            * (BigInt::one() << (scale * self.index as u64));
        prod.cmp(&target)
    }

    /// Halves the enclosure width. No-op when exact.
    pub fn refine(&mut self) {
        if self.exact {
            return;
        }
        self.scale += 1;
        self.lo_num <<= 1;
        let mid = &self.lo_num + 1;
        match self.compare_at(&mid, self.scale) {
            Ordering::Less => self.lo_num = mid,
            Ordering::Greater => {}
            // rational roots of a monic integer polynomial are integers
            Ordering::Equal => unreachable!("non-integer rational solution"),
        }
    }

    /// Refines until the width is at most `tol`.
    pub fn refine_to(&mut self, tol: &BigRational) {
        while !self.exact && &self.width() > tol {
            self.refine();
        }
    }

    /// `(x)_i - i! y` as integer coefficients, whose unique root `>= i - 1` is `x`.
    fn defining_polynomial(&self) -> Vec<BigInt> {
        let mut p = vec![BigInt::one()];
        for j in 0..self.index {
            // multiply by (x - j)
            let mut next = vec![BigInt::zero(); p.len() + 1];
            for (e, c) in p.iter().enumerate() {
                next[e + 1] += c;
                next[e] -= c * BigInt::from(j);
            }
            p = next;
        }
        p[0] -= factorial(self.index) * BigInt::from(self.value.clone());
        sturm::trim(p)
    }

    /// Decimal rendering with `digits` places and the enclosure half-width.
    pub fn render(&self, digits: usize) -> String {
        if self.exact {
            return format!("{} (exact)", self.ceil);
        }
        let mid = (self.lo() + self.hi()) / BigRational::from(BigInt::from(2));
        let half = self.width() / BigRational::from(BigInt::from(2));
        format!(
            "{} ± {:.1e}",
            decimal(&mid, digits),
            half.to_f64().unwrap_or(f64::NAN)
        )
    }
}

impl fmt::Display for BinRepEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(9))
    }
}

/// Rounds a non-negative rational to `digits` decimal places.
pub fn decimal(x: &BigRational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = x * BigRational::from(scale.clone());
    let rounded = (scaled + BigRational::new(BigInt::one(), BigInt::from(2))).floor().to_integer();
    let int_part = &rounded / &scale;
    let frac_part = (&rounded % &scale).abs();
    if digits == 0 {
        return int_part.to_string();
    }
    format!("{}.{:0>width$}", int_part, frac_part.to_string(), width = digits)
}

/// Number of decimal places matching a tolerance (smallest `d` with `10^-d <= tol`).
pub fn digits_for(tol: &BigRational) -> usize {
    let mut d = 0usize;
    let mut unit = BigRational::one();
    while &unit > tol && d < 200 {
        unit /= BigRational::from(BigInt::from(10));
        d += 1;
    }
    d
}

/// Solves `y = C(x, k)` for the unique real `x >= k - 1`.
pub fn solve_binrep(y: &BigUint, k: usize, tol: &BigRational) -> Result<BinRepEntry> {
    if y.is_zero() {
        return Err(Error::NonPositive { what: "binomial representation value y" });
    }
    if k == 0 {
        return Err(Error::NonPositive { what: "binomial representation index k" });
    }
    if !tol.is_positive() {
        return Err(Error::NonPositive { what: "tolerance" });
    }
    let floor = largest_top(y, k);
    let exact = &binomial(&floor, k) == y;
    let mut entry = BinRepEntry {
        index: k,
        value: y.clone(),
        ceil: if exact { floor.clone() } else { &floor + 1u32 },
        exact,
        lo_num: BigInt::from(floor),
        scale: 0,
    };
    entry.refine_to(tol);
    Ok(entry)
}

/// The binomial representation `x_1, ..., x_d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealBinRep {
    entries: Vec<BinRepEntry>,
}

impl RealBinRep {
    pub fn entries(&self) -> &[BinRepEntry] {
        &self.entries
    }

    /// `x_i`, 1-based.
    pub fn x(&self, i: usize) -> &BinRepEntry {
        &self.entries[i - 1]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Per-coefficient binomial representation of `1 + f_0 t + ... + f_{d-1} t^d`.
pub fn binrep(p: &IntPolynomial, tol: &BigRational) -> Result<RealBinRep> {
    p.check_unit_positive()?;
    let entries = p
        .coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| solve_binrep(&c.to_biguint().expect("checked positive"), i, tol))
        .collect::<Result<Vec<_>>>()?;
    Ok(RealBinRep { entries })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotone {
    Holds,
    /// `x_index < x_{index+1}`.
    Violated { index: usize },
    /// Could not separate `x_index` and `x_{index+1}` within the budget.
    Indeterminate { index: usize },
}

impl Monotone {
    pub fn holds(&self) -> bool {
        matches!(self, Monotone::Holds)
    }
}

/// Whether `x_1 >= x_2 >= ... >= x_d`, refining to [`default_refine_budget`].
pub fn check_monotone(rep: &RealBinRep) -> Monotone {
    check_monotone_with(rep, &default_refine_budget())
}

pub fn check_monotone_with(rep: &RealBinRep, budget: &BigRational) -> Monotone {
    for (k, pair) in rep.entries.windows(2).enumerate() {
        match compare_entries(&pair[0], &pair[1], budget) {
            Some(true) => {}
            Some(false) => return Monotone::Violated { index: k + 1 },
            None => return Monotone::Indeterminate { index: k + 1 },
        }
    }
    Monotone::Holds
}

/// Decides `x_a >= x_b` for consecutive entries (`b.index = a.index + 1`).
fn compare_entries(a: &BinRepEntry, b: &BinRepEntry, budget: &BigRational) -> Option<bool> {
    debug_assert_eq!(a.index + 1, b.index);
    if a.exact && b.exact {
        return Some(a.lo_num >= b.lo_num);
    }
    // Both defining polynomials increase on [index - 1, inf), and both roots
    // lie at or above a.index = b.index - 1, so a sign test at an exact
    // point decides the comparison.
    if a.exact {
        // x_b <= a  iff  P_b(a) >= 0
        let s = sturm::sign_at(&b.defining_polynomial(), &a.lo());
        return Some(s != Sign::Minus);
    }
    if b.exact {
        // x_a >= b  iff  P_a(b) <= 0
        let s = sturm::sign_at(&a.defining_polynomial(), &b.lo());
        return Some(s != Sign::Plus);
    }
    // Two irrational consecutive entries are never equal: C(x, i+1) =
    // C(x, i) (x - i) / (i + 1) would make x rational, hence an integer.
    // Refinement therefore separates them eventually.
    let mut a = a.clone();
    let mut b = b.clone();
    loop {
        // x_a in (lo_a, hi_a), x_b in (lo_b, hi_b)
        if b.hi() <= a.lo() {
            return Some(true);
        }
        if a.hi() <= b.lo() {
            return Some(false);
        }
        if &a.width() <= budget && &b.width() <= budget {
            return None;
        }
        if a.width() >= b.width() {
            a.refine();
        } else {
            b.refine();
        }
    }
}

/// One index where `x_{i-1} >= ceil(x_i)` fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CeilingFailure {
    /// `i`, comparing `x_{i-1}` with `ceil(x_i)`.
    pub index: usize,
    /// `f_{i-2} = C(x_{i-1}, i-1)`
    pub lhs: BigUint,
    /// `ceil(x_i)`
    pub ceil: BigUint,
    /// `C(ceil(x_i), i-1)`
    pub rhs: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CeilingReport {
    pub holds: bool,
    pub failures: Vec<CeilingFailure>,
}

/// `x_{i-1} >= ceil(x_i)` for `2 <= i <= d`, decided by the integer
/// comparison `f_{i-2} >= C(ceil(x_i), i-1)`.
pub fn ceiling_condition(p: &IntPolynomial) -> Result<CeilingReport> {
    p.check_unit_positive()?;
    let f: Vec<BigUint> = p
        .coeffs()
        .iter()
        .map(|c| c.to_biguint().expect("checked positive"))
        .collect();
    let d = f.len() - 1;
    let mut failures = Vec::new();
    for i in 2..=d {
        let y = &f[i];
        let floor = largest_top(y, i);
        let ceil = if &binomial(&floor, i) == y { floor } else { floor + 1u32 };
        let rhs = binomial(&ceil, i - 1);
        let lhs = f[i - 1].clone();
        if lhs < rhs {
            failures.push(CeilingFailure { index: i, lhs, ceil, rhs });
        }
    }
    Ok(CeilingReport { holds: failures.is_empty(), failures })
}

pub fn check_ceiling_condition(p: &IntPolynomial) -> Result<bool> {
    Ok(ceiling_condition(p)?.holds)
}
