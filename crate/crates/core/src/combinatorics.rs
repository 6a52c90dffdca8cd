//! Exact binomial coefficients, binomial expansions (cascades) and the
//! Kruskal-Katona / Macaulay functions `mu` and `kappa`.
//!
//! For a positive integer `m` and `i >= 1` the i-th binomial expansion is
//! the unique representation
//!
//! ```text
//! m = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_j, j),   a_i > a_{i-1} > ... > a_j >= j >= 1
//! ```
//!
//! obtained greedily from the top. `mu_i(m)` lowers every bottom index by one,
//! `kappa_i(m)` lowers both indices by one.

use std::collections::HashSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest `m` accepted by [`shadow_size_oracle`].
pub const SHADOW_ORACLE_MAX_M: u64 = 100_000;

/// `C(n, k)` for a non-negative integer `n`. Zero when `k > n`.
pub fn binomial(n: &BigUint, k: usize) -> BigUint {
    if let Some(n64) = n.to_u64() {
        if let Some(v) = binom_u128(n64, k) {
            return BigUint::from(v);
        }
    }
    let kb = BigUint::from(k);
    if &kb > n {
        return BigUint::zero();
    }
    let k = k.min((n - &kb).to_usize().unwrap_or(k));
    let mut acc = BigUint::one();
    // acc = C(n - k + j, j) after step j; every intermediate division is exact
    let base = n - BigUint::from(k);
    for j in 1..=k {
        acc *= &base + BigUint::from(j);
        acc /= BigUint::from(j);
    }
    acc
}

/// `C(n, k)` for integer `n`; negative `n` is rejected (counts only).
pub fn binom_int(n: &BigInt, k: usize) -> Result<BigUint> {
    match n.to_biguint() {
        Some(u) => Ok(binomial(&u, k)),
        None => Err(Error::NegativeArgument(n.to_string())),
    }
}

/// Checked `C(n, k)` in `u128`. `None` means the value does not fit, which
/// in particular means it exceeds `u64::MAX`.
pub(crate) fn binom_u128(n: u64, k: usize) -> Option<u128> {
    let k = k as u64;
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 1..=k {
        acc = acc.checked_mul((n - k + j) as u128)? / j as u128;
    }
    Some(acc)
}

/// One term `C(top, bottom)` of a cascade.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CascadeTerm {
    pub top: BigUint,
    pub bottom: usize,
}

/// The i-th binomial expansion of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cascade {
    terms: Vec<CascadeTerm>,
}

impl Cascade {
    pub fn terms(&self) -> &[CascadeTerm] {
        &self.terms
    }

    /// Tops `a_i, a_{i-1}, ..., a_j` in order.
    pub fn tops(&self) -> Vec<BigUint> {
        self.terms.iter().map(|t| t.top.clone()).collect()
    }

    /// The expansion index `i`.
    pub fn index(&self) -> usize {
        self.terms[0].bottom
    }

    /// Sum of `C(a_k, k)`; reproduces the expanded integer.
    pub fn value(&self) -> BigUint {
        self.terms.iter().map(|t| binomial(&t.top, t.bottom)).sum()
    }

    /// Checks strict decrease of tops, unit decrease of bottoms and `a_j >= j >= 1`.
    pub fn is_well_formed(&self) -> bool {
        if self.terms.is_empty() {
            return false;
        }
        let last = self.terms.last().unwrap();
        if last.bottom < 1 || last.top < BigUint::from(last.bottom) {
            return false;
        }
        self.terms
            .windows(2)
            .all(|w| w[0].top > w[1].top && w[0].bottom == w[1].bottom + 1)
    }
}

impl fmt::Display for Cascade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| format!("C({},{})", t.top, t.bottom))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Largest `a` with `C(a, i) <= r`, for `r >= 1`, `i >= 2`.
fn largest_top_u64(r: u64, i: usize) -> u64 {
    let fits = |a: u64| binom_u128(a, i).is_some_and(|v| v <= r as u128);
    // Starting point from C(a, i) ~ (a - (i-1)/2)^i / i!; corrected exactly below.
    let ln_fact: f64 = (2..=i).map(|j| (j as f64).ln()).sum();
    let guess = ((r as f64).ln() + ln_fact) / i as f64;
    let guess = guess.exp() + (i as f64 - 1.0) / 2.0;
    let mut a = if guess.is_finite() && guess < 1.0e18 {
        (guess as u64).max(i as u64)
    } else {
        i as u64
    };
    while !fits(a) {
        a -= 1;
    }
    while fits(a + 1) {
        a += 1;
    }
    a
}

/// Largest `a` with `C(a, i) <= r`, for `r >= 1`, `i >= 1`.
pub(crate) fn largest_top(r: &BigUint, i: usize) -> BigUint {
    debug_assert!(!r.is_zero() && i >= 1);
    if i == 1 {
        return r.clone();
    }
    match r.to_u64() {
        Some(r64) => BigUint::from(largest_top_u64(r64, i)),
        None => largest_top_big(r, i),
    }
}

fn largest_top_big(r: &BigUint, i: usize) -> BigUint {
    let fits = |a: &BigUint| &binomial(a, i) <= r;
    let mut lo = BigUint::from(i);
    let mut hi = BigUint::from(2 * i.max(1));
    while fits(&hi) {
        lo = hi.clone();
        hi <<= 1;
    }
    // fits(lo), !fits(hi)
    while &hi - &lo > BigUint::one() {
        let mid = (&lo + &hi) >> 1;
        if fits(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Greedy tops for `m` fitting in a u64.
pub(crate) fn cascade_tops_u64(mut m: u64, i: usize) -> Vec<(u64, usize)> {
    let mut out = Vec::with_capacity(i);
    let mut k = i;
    while m > 0 && k >= 1 {
        let a = if k == 1 { m } else { largest_top_u64(m, k) };
        out.push((a, k));
        m -= binom_u128(a, k).expect("C(a,k) <= m fits") as u64;
        k -= 1;
    }
    out
}

/// The i-th binomial expansion of `m`.
pub fn cascade(m: &BigUint, i: usize) -> Result<Cascade> {
    if m.is_zero() {
        return Err(Error::NonPositive { what: "cascade argument m" });
    }
    if i == 0 {
        return Err(Error::NonPositive { what: "cascade index i" });
    }
    if let Some(m64) = m.to_u64() {
        let terms = cascade_tops_u64(m64, i)
            .into_iter()
            .map(|(a, k)| CascadeTerm { top: BigUint::from(a), bottom: k })
            .collect();
        return Ok(Cascade { terms });
    }
    let mut rest = m.clone();
    let mut terms = Vec::new();
    let mut k = i;
    while !rest.is_zero() && k >= 1 {
        let a = if k == 1 { rest.clone() } else { largest_top_big(&rest, k) };
        rest -= binomial(&a, k);
        terms.push(CascadeTerm { top: a, bottom: k });
        k -= 1;
    }
    Ok(Cascade { terms })
}

/// Sum of `C(a_k - shift_top, k - 1)` over the cascade of `m`.
fn lowered_sum(m: &BigUint, i: usize, shift_top: u64) -> BigUint {
    assert!(i >= 1, "expansion index must be at least 1");
    if m.is_zero() {
        return BigUint::zero();
    }
    if let Some(m64) = m.to_u64() {
        let mut acc: u128 = 0;
        let mut overflow = false;
        for (a, k) in cascade_tops_u64(m64, i) {
            match binom_u128(a - shift_top, k - 1).and_then(|v| acc.checked_add(v)) {
                Some(v) => acc = v,
                None => {
                    overflow = true;
                    break;
                }
            }
        }
        if !overflow {
            return BigUint::from(acc);
        }
    }
    let c = cascade(m, i).expect("m > 0 and i >= 1");
    c.terms
        .iter()
        .map(|t| binomial(&(&t.top - shift_top), t.bottom - 1))
        .sum()
}

/// `mu_i(m) = C(a_i, i-1) + ... + C(a_j, j-1)`, with `mu_i(0) = 0`.
///
/// Panics if `i == 0`.
pub fn mu(m: &BigUint, i: usize) -> BigUint {
    lowered_sum(m, i, 0)
}

/// `kappa_i(m) = C(a_i - 1, i-1) + ... + C(a_j - 1, j-1)`, with `kappa_i(0) = 0`.
///
/// Panics if `i == 0`.
pub fn kappa(m: &BigUint, i: usize) -> BigUint {
    lowered_sum(m, i, 1)
}

/// Iterator over the k-subsets of `{0, 1, 2, ...}` in colexicographic order.
///
/// Subsets are yielded as increasing vectors; the sequence is infinite for `k >= 1`.
#[derive(Debug, Clone)]
pub struct ColexSubsets {
    current: Option<Vec<usize>>,
}

impl ColexSubsets {
    pub fn new(k: usize) -> Self {
        ColexSubsets { current: Some((0..k).collect()) }
    }
}

impl Iterator for ColexSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let k = out.len();
        if k > 0 {
            let mut next = out.clone();
            // smallest position that can move up without colliding with its successor
            let j = (0..k)
                .find(|&j| j + 1 == k || next[j] + 1 < next[j + 1])
                .expect("last position always qualifies");
            next[j] += 1;
            for (p, v) in next.iter_mut().enumerate().take(j) {
                *v = p;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

/// Size of the shadow of the first `m` k-subsets of the naturals in colex
/// order, by explicit enumeration. Test oracle for [`mu`].
pub fn shadow_size_oracle(m: u64, k: usize) -> Result<u64> {
    if m == 0 {
        return Err(Error::NonPositive { what: "oracle argument m" });
    }
    if k == 0 {
        return Err(Error::NonPositive { what: "oracle subset size k" });
    }
    if m > SHADOW_ORACLE_MAX_M {
        return Err(Error::OracleBoundExceeded {
            value: m.to_string(),
            bound: SHADOW_ORACLE_MAX_M,
        });
    }
    let mut shadow: HashSet<Vec<usize>> = HashSet::new();
    for set in ColexSubsets::new(k).take(m as usize) {
        for skip in 0..k {
            let mut sub = set.clone();
            sub.remove(skip);
            shadow.insert(sub);
        }
    }
    Ok(shadow.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn tops(m: u64, i: usize) -> Vec<(u64, usize)> {
        cascade(&big(m), i)
            .unwrap()
            .terms()
            .iter()
            .map(|t| (t.top.to_u64().unwrap(), t.bottom))
            .collect()
    }

    /// Pascal-triangle oracle, independent of the multiplicative formula.
    fn pascal(n: usize, k: usize) -> BigUint {
        let mut row = vec![BigUint::one()];
        for _ in 0..n {
            let mut next = vec![BigUint::one(); row.len() + 1];
            for j in 1..row.len() {
                next[j] = &row[j - 1] + &row[j];
            }
            row = next;
        }
        row.get(k).cloned().unwrap_or_default()
    }

    #[test]
    fn binom_examples() {
        assert_eq!(binom_int(&BigInt::from(4), 2).unwrap(), big(6));
        assert_eq!(binom_int(&BigInt::from(3), 5).unwrap(), big(0));
        assert_eq!(pascal(50, 25), big(126_410_606_437_752));
        assert_eq!(binom_int(&BigInt::from(50), 25).unwrap(), big(126_410_606_437_752));
        assert!(matches!(
            binom_int(&BigInt::from(-1), 2),
            Err(Error::NegativeArgument(_))
        ));
    }

    #[test]
    fn binom_agrees_with_pascal() {
        for n in 0..70 {
            for k in 0..=n + 2 {
                assert_eq!(binomial(&big(n as u64), k), pascal(n, k), "C({n},{k})");
            }
        }
    }

    #[test]
    fn binom_big_path() {
        // C(200, 100) does not fit in u128
        let v = binomial(&big(200), 100);
        assert_eq!(v, pascal(200, 100));
    }

    #[test]
    fn cascade_examples() {
        assert_eq!(tops(5, 2), vec![(3, 2), (2, 1)]);
        assert_eq!(tops(1, 3), vec![(3, 3)]);
        assert_eq!(tops(10, 1), vec![(10, 1)]);
        assert!(cascade(&big(0), 2).is_err());
        assert!(cascade(&big(3), 0).is_err());
    }

    #[test]
    fn cascade_big_values_are_well_formed() {
        let m: BigUint = "123456789012345678901234567890".parse().unwrap();
        for i in 1..8 {
            let c = cascade(&m, i).unwrap();
            assert!(c.is_well_formed());
            assert_eq!(c.value(), m);
        }
    }

    #[test]
    fn mu_kappa_examples() {
        assert_eq!(mu(&big(5), 2), big(4));
        assert_eq!(mu(&big(0), 4), big(0));
        assert_eq!(mu(&big(2), 3), big(5));
        assert_eq!(kappa(&big(5), 2), big(3));
        assert_eq!(kappa(&big(2), 3), big(2));
        assert_eq!(kappa(&big(0), 2), big(0));
    }

    #[test]
    fn mu_fast_and_big_paths_agree() {
        let m: BigUint = BigUint::from(u64::MAX) + 12345u32;
        for i in 1..6 {
            let c = cascade(&m, i).unwrap();
            let direct: BigUint = c
                .terms()
                .iter()
                .map(|t| binomial(&t.top, t.bottom - 1))
                .sum();
            assert_eq!(mu(&m, i), direct);
        }
    }

    #[test]
    fn shadow_examples() {
        assert_eq!(shadow_size_oracle(5, 2).unwrap(), 4);
        assert_eq!(shadow_size_oracle(1, 3).unwrap(), 3);
        assert_eq!(shadow_size_oracle(6, 2).unwrap(), 4);
        assert!(matches!(
            shadow_size_oracle(SHADOW_ORACLE_MAX_M + 1, 2),
            Err(Error::OracleBoundExceeded { .. })
        ));
    }

    #[test]
    fn colex_order_prefix() {
        let first: Vec<Vec<usize>> = ColexSubsets::new(2).take(6).collect();
        assert_eq!(
            first,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 3],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(ColexSubsets::new(0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
    }

    /// Counts every decreasing-pair representation of `m` with top index `i`.
    fn count_representations(m: u64, k: usize, max_top: u64) -> usize {
        if m == 0 {
            return 1;
        }
        if k == 0 {
            return 0;
        }
        let mut count = 0;
        let mut a = k as u64;
        while a < max_top {
            let c = binom_u128(a, k).unwrap() as u64;
            if c > m {
                break;
            }
            count += count_representations(m - c, k - 1, a);
            a += 1;
        }
        count
    }

    #[test]
    fn cascade_is_unique() {
        for i in 1..=7 {
            for m in 1..=5000u64 {
                assert_eq!(count_representations(m, i, u64::MAX), 1, "m={m} i={i}");
            }
        }
    }
}
