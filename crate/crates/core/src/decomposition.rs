//! The splitting `f(t) = g(t) + t h(t)` read off from binomial expansions.
//!
//! For `f = 1 + f_0 t + ... + f_{d-1} t^d` and each `1 <= i <= d`, expand
//! `f_{i-1} = C(a_i, i) + ... + C(a_j, j)` and put
//!
//! ```text
//! g_i     = C(a_i - 1, i)     + ... + C(a_j - 1, j)
//! h_{i-1} = C(a_i - 1, i - 1) + ... + C(a_j - 1, j - 1)
//! ```
//!
//! with `g_0 = 1`. Pascal's rule gives `f_{i-1} = g_i + h_{i-1}` term by term.

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::combinatorics::{binomial, cascade, Cascade};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    g: IntPolynomial,
    h: IntPolynomial,
    cascades: Vec<Cascade>,
}

impl Decomposition {
    pub fn g(&self) -> &IntPolynomial {
        &self.g
    }

    pub fn h(&self) -> &IntPolynomial {
        &self.h
    }

    /// `cascades()[i - 1]` is the i-th expansion of `f_{i-1}`.
    pub fn cascades(&self) -> &[Cascade] {
        &self.cascades
    }

    /// `g + t h`.
    pub fn recombine(&self) -> IntPolynomial {
        let n = self.g.coeffs().len().max(self.h.coeffs().len() + 1);
        IntPolynomial::new(
            (0..n)
                .map(|i| self.g.coeff(i) + if i == 0 { BigInt::default() } else { self.h.coeff(i - 1) })
                .collect(),
        )
    }
}

fn to_unsigned(c: &BigInt) -> BigUint {
    c.to_biguint().expect("checked positive")
}

pub fn recursive_decompose(p: &IntPolynomial) -> Result<Decomposition> {
    p.check_unit_positive()?;
    let d = p.degree().unwrap_or(0);
    if d == 0 {
        return Err(Error::MalformedVector(format!(
            "'{p}' has degree 0; the decomposition needs degree at least 1"
        )));
    }
    let mut g = vec![BigInt::one()];
    let mut h = Vec::with_capacity(d);
    let mut cascades = Vec::with_capacity(d);
    for i in 1..=d {
        let c = cascade(&to_unsigned(&p.coeffs()[i]), i)?;
        let mut gi = BigUint::default();
        let mut hi = BigUint::default();
        for t in c.terms() {
            // a_j >= j >= 1, so a_j - 1 never underflows
            let lowered = &t.top - 1u32;
            gi += binomial(&lowered, t.bottom);
            hi += binomial(&lowered, t.bottom - 1);
        }
        g.push(gi.into());
        h.push(hi.into());
        cascades.push(c);
    }
    Ok(Decomposition { g: IntPolynomial::new(g), h: IntPolynomial::new(h), cascades })
}

/// Indices `1 <= i <= d-1` with `h_i > g_i`.
pub fn conjecture_second_violations(p: &IntPolynomial) -> Result<Vec<usize>> {
    let dec = recursive_decompose(p)?;
    let d = p.degree().unwrap_or(0);
    Ok((1..d).filter(|&i| dec.h.coeff(i) > dec.g.coeff(i)).collect())
}

/// `h_i <= g_i` for every `1 <= i <= d-1`.
pub fn check_conjecture_second(p: &IntPolynomial) -> Result<bool> {
    Ok(conjecture_second_violations(p)?.is_empty())
}

/// The same predicate through cascade tops: `h_i <= g_i` exactly when the tops
/// of the (i+1)-th expansion of `f_i` are lexicographically at most the tops
/// of the i-th expansion of `f_{i-1}`.
pub fn check_conjecture_second_lex(p: &IntPolynomial) -> Result<bool> {
    p.check_unit_positive()?;
    let d = p.degree().unwrap_or(0);
    if d == 0 {
        return Err(Error::MalformedVector(format!(
            "'{p}' has degree 0; the decomposition needs degree at least 1"
        )));
    }
    let tops = |i: usize| -> Result<Vec<BigUint>> {
        Ok(cascade(&to_unsigned(&p.coeffs()[i]), i)?.tops())
    };
    for i in 1..d {
        if tops(i + 1)? > tops(i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(g real-rooted, h real-rooted)`.
pub fn check_question_second(p: &IntPolynomial) -> Result<(bool, bool)> {
    let dec = recursive_decompose(p)?;
    Ok((dec.g.is_real_rooted()?, dec.h.is_real_rooted()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        let d = recursive_decompose(&poly("1,4,5,2")).unwrap();
        assert_eq!(d.g(), &poly("1,3,2"));
        assert_eq!(d.h(), &poly("1,3,2"));
        let d = recursive_decompose(&poly("1,10,3,1")).unwrap();
        assert_eq!(d.g(), &poly("1,9,1"));
        assert_eq!(d.h(), &poly("1,2,1"));
        let d = recursive_decompose(&poly("1,1")).unwrap();
        assert_eq!(d.g(), &poly("1"));
        assert_eq!(d.h(), &poly("1"));
    }

    #[test]
    fn predicates() {
        for s in ["1,4,5,2", "1,10,3,1", "1,1"] {
            assert!(check_conjecture_second(&poly(s)).unwrap());
            assert!(check_conjecture_second_lex(&poly(s)).unwrap());
            assert_eq!(check_question_second(&poly(s)).unwrap(), (true, true));
        }
    }

    #[test]
    fn violation_is_reported() {
        // 2 = C(2,1) gives g_1 = 1; 3 = C(3,2) gives h_1 = 2
        let p = poly("1,2,3,10");
        let v = conjecture_second_violations(&p).unwrap();
        assert_eq!(v.is_empty(), check_conjecture_second_lex(&p).unwrap());
        assert!(!v.is_empty());
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(recursive_decompose(&poly("2,1")).is_err());
        assert!(recursive_decompose(&poly("1,0,1")).is_err());
        assert!(recursive_decompose(&poly("1")).is_err());
    }

    #[test]
    fn reconstruction_and_lex_agree_on_small_grid() {
        for a in 1..=9i64 {
            for b in 1..=9 {
                for c in 1..=9 {
                    let p = IntPolynomial::from_i64s(&[1, a, b, c]);
                    let dec = recursive_decompose(&p).unwrap();
                    assert_eq!(dec.recombine(), p);
                    assert_eq!(dec.h().coeff(0), BigInt::one());
                    assert_eq!(
                        check_conjecture_second(&p).unwrap(),
                        check_conjecture_second_lex(&p).unwrap(),
                        "{p}"
                    );
                }
            }
        }
    }
}
