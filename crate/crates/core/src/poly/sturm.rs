//! Fraction-free polynomial remainder sequences over the integers.
//!
//! Every polynomial here is a coefficient slice in ascending order with no
//! trailing zeros. Remainders are only ever scaled by positive factors, so
//! sign sequences (and therefore Sturm counts) are exactly those of the
//! rational Euclidean sequence.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub(crate) fn derivative(p: &[BigInt]) -> Vec<BigInt> {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect(),
    )
}

fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Divides out the (positive) content; keeps the sign of the leading coefficient.
fn primitive_part(p: Vec<BigInt>) -> Vec<BigInt> {
    let g = content(&p);
    if g.is_zero() || g.is_one() {
        return p;
    }
    p.into_iter().map(|c| c / &g).collect()
}

/// A positive multiple of the remainder of `a` modulo `b`.
fn positive_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = b.len() - 1;
    let lcb = &b[n];
    let mut r = a.to_vec();
    let mut steps = 0u32;
    while r.len() > n && !r.is_empty() {
        let m = r.len() - 1;
        let lcr = r[m].clone();
        for c in r.iter_mut() {
            *c *= lcb;
        }
        let shift = m - n;
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &lcr * bj;
        }
        steps += 1;
        r = trim(r);
    }
    if lcb.is_negative() && steps % 2 == 1 {
        for c in r.iter_mut() {
            *c = -c.clone();
        }
    }
    r
}

/// Greatest common divisor, primitive with positive leading coefficient.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut x, mut y) = if a.len() >= b.len() {
        (a.to_vec(), b.to_vec())
    } else {
        (b.to_vec(), a.to_vec())
    };
    while !y.is_empty() {
        let r = primitive_part(positive_prem(&x, &y));
        x = y;
        y = r;
    }
    let mut g = primitive_part(x);
    if g.last().is_some_and(|c| c.is_negative()) {
        for c in g.iter_mut() {
            *c = -c.clone();
        }
    }
    g
}

/// Exact quotient `p / d` where `d` is primitive and divides `p` over the rationals.
pub(crate) fn exact_div(p: &[BigInt], d: &[BigInt]) -> Vec<BigInt> {
    let n = d.len() - 1;
    if p.len() <= n {
        return Vec::new();
    }
    let mut r = p.to_vec();
    let mut q = vec![BigInt::zero(); p.len() - n];
    for k in (0..q.len()).rev() {
        let (quot, rem) = r[k + n].div_rem(&d[n]);
        debug_assert!(rem.is_zero(), "divisor is primitive, so the quotient is integral");
        for (j, dj) in d.iter().enumerate() {
            r[k + j] -= &quot * dj;
        }
        q[k] = quot;
    }
    debug_assert!(r.iter().all(|c| c.is_zero()));
    trim(q)
}

/// `p / gcd(p, p')`.
pub(crate) fn squarefree_part(p: &[BigInt]) -> Vec<BigInt> {
    let dp = derivative(p);
    if dp.is_empty() {
        return p.to_vec();
    }
    let g = gcd(p, &dp);
    exact_div(p, &g)
}

/// Sturm chain `p, p', -rem, ...` up to positive scalar factors.
pub(crate) fn sturm_chain(p: &[BigInt]) -> Vec<Vec<BigInt>> {
    let mut chain = vec![p.to_vec()];
    let dp = derivative(p);
    if dp.is_empty() {
        return chain;
    }
    chain.push(dp);
    loop {
        let k = chain.len();
        let r = positive_prem(&chain[k - 2], &chain[k - 1]);
        if r.is_empty() {
            break;
        }
        let r = primitive_part(r).into_iter().map(|c| -c).collect();
        chain.push(r);
    }
    chain
}

fn variations(signs: impl Iterator<Item = Sign>) -> usize {
    let mut last = Sign::NoSign;
    let mut count = 0;
    for s in signs {
        if s == Sign::NoSign {
            continue;
        }
        if last != Sign::NoSign && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn sign_at_pos_inf(p: &[BigInt]) -> Sign {
    p.last().map(|c| c.sign()).unwrap_or(Sign::NoSign)
}

fn sign_at_neg_inf(p: &[BigInt]) -> Sign {
    let s = sign_at_pos_inf(p);
    if p.len().is_multiple_of(2) {
        -s
    } else {
        s
    }
}

/// Sign of `p(x)` at a rational point, evaluated without denominators.
pub(crate) fn sign_at(p: &[BigInt], x: &BigRational) -> Sign {
    let num = x.numer();
    let den = x.denom(); // positive
    let deg = p.len().saturating_sub(1);
    // sum c_i num^i den^(deg - i)
    let mut acc = BigInt::zero();
    let mut num_pow = BigInt::one();
    let mut den_pows = vec![BigInt::one(); deg + 1];
    for i in 1..=deg {
        den_pows[i] = &den_pows[i - 1] * den;
    }
    for (i, c) in p.iter().enumerate() {
        acc += c * &num_pow * &den_pows[deg - i];
        num_pow *= num;
    }
    acc.sign()
}

/// Number of distinct real roots of `p` (any multiplicities).
pub(crate) fn count_distinct_real_roots(p: &[BigInt]) -> usize {
    let chain = sturm_chain(p);
    let minus = variations(chain.iter().map(|q| sign_at_neg_inf(q)));
    let plus = variations(chain.iter().map(|q| sign_at_pos_inf(q)));
    minus - plus
}

#[cfg(test)]
/// Number of distinct roots of `p` in the half-open interval `(lo, hi]`.
pub(crate) fn count_roots_in(p: &[BigInt], lo: &BigRational, hi: &BigRational) -> usize {
    let chain = sturm_chain(p);
    let at = |x: &BigRational| variations(chain.iter().map(|q| sign_at(q, x)));
    at(lo) - at(hi)
}
