//! Integer polynomials with arbitrary-precision coefficients.
//!
//! Text form is the ascending comma-separated coefficient list, so
//! `"1,4,5,2"` is `1 + 4t + 5t^2 + 2t^3`.

pub(crate) mod sturm;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::binomial;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

/// First index where ultra log-concavity fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UlcWitness {
    pub index: usize,
    /// `a_i^2`
    pub coeff_square: BigInt,
    /// `a_{i-1} a_{i+1}`
    pub neighbour_product: BigInt,
    /// `a_i^2 C(d,i-1) C(d,i+1)`
    pub normalized_lhs: BigInt,
    /// `a_{i-1} a_{i+1} C(d,i)^2`
    pub normalized_rhs: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UlcReport {
    pub holds: bool,
    pub witness: Option<UlcWitness>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        IntPolynomial { coeffs: sturm::trim(coeffs) }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64s(&[1])
    }

    /// Ascending coefficients, no trailing zeros (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Checks the shape `1 + f_0 t + ... + f_{d-1} t^d` with every `f_i > 0`.
    pub fn check_unit_positive(&self) -> Result<()> {
        match self.coeffs.first() {
            None => return Err(Error::ZeroPolynomial),
            Some(c) if !c.is_one() => return Err(Error::ConstantTermNotOne(c.to_string())),
            _ => {}
        }
        for (index, c) in self.coeffs.iter().enumerate().skip(1) {
            if !c.is_positive() {
                return Err(Error::NonPositiveCoefficient { index, value: c.to_string() });
            }
        }
        Ok(())
    }

    pub fn derivative(&self) -> IntPolynomial {
        IntPolynomial { coeffs: sturm::derivative(&self.coeffs) }
    }

    /// Number of distinct real roots, via a Sturm chain.
    pub fn distinct_real_roots(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(sturm::count_distinct_real_roots(&self.coeffs))
    }

    /// Whether every complex root is real (multiplicities allowed).
    ///
    /// Counts the distinct real roots of the squarefree part and compares
    /// with its degree. Constants are vacuously real-rooted.
    pub fn is_real_rooted(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let sqf = sturm::squarefree_part(&self.coeffs);
        Ok(sturm::count_distinct_real_roots(&sqf) == sqf.len() - 1)
    }

    /// Ultra log-concavity with the `C(d, i)` normalizers, compared by
    /// cross-multiplication in integers.
    pub fn ultra_log_concavity(&self) -> Result<UlcReport> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        if let Some((index, c)) = self.coeffs.iter().enumerate().find(|(_, c)| c.is_negative()) {
            return Err(Error::NegativeCoefficient { index, value: c.to_string() });
        }
        let dd = num_bigint::BigUint::from(d);
        let binom_d = |i: usize| BigInt::from(binomial(&dd, i));
        for i in 1..d {
            let a = &self.coeffs;
            let coeff_square = &a[i] * &a[i];
            let neighbour_product = &a[i - 1] * &a[i + 1];
            let normalized_lhs = &coeff_square * binom_d(i - 1) * binom_d(i + 1);
            let normalized_rhs = &neighbour_product * binom_d(i) * binom_d(i);
            if normalized_lhs < normalized_rhs {
                return Ok(UlcReport {
                    holds: false,
                    witness: Some(UlcWitness {
                        index: i,
                        coeff_square,
                        neighbour_product,
                        normalized_lhs,
                        normalized_rhs,
                    }),
                });
            }
        }
        Ok(UlcReport { holds: true, witness: None })
    }

    pub fn is_ultra_log_concave(&self) -> Result<bool> {
        Ok(self.ultra_log_concavity()?.holds)
    }

    /// Ordinary product.
    pub fn product(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    /// Coefficientwise product, truncated at the smaller degree.
    pub fn hadamard(&self, other: &IntPolynomial) -> IntPolynomial {
        IntPolynomial::new(
            self.coeffs
                .iter()
                .zip(other.coeffs.iter())
                .map(|(a, b)| a * b)
                .collect(),
        )
    }

    /// `p(ct)`: coefficient `i` scaled by `c^i`.
    pub fn dilate(&self, c: &BigInt) -> IntPolynomial {
        let mut power = BigInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &power);
            power *= c;
        }
        IntPolynomial::new(out)
    }

    /// `p(t) + t p'(t)`: coefficient `i` scaled by `i + 1`.
    pub fn plus_t_derivative(&self) -> IntPolynomial {
        IntPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, a)| a * BigInt::from(i + 1))
                .collect(),
        )
    }

    /// Human-readable form, e.g. `1 + 4t + 5t^2`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            parts.push(match i {
                0 => c.to_string(),
                1 => format!("{c}t"),
                _ => format!("{c}t^{i}"),
            });
        }
        parts.join(" + ")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Parses a comma-separated list of integers.
pub(crate) fn parse_int_list(s: &str) -> Result<Vec<BigInt>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse { token: String::new(), input: s.into() });
    }
    s.split(',')
        .map(|tok| {
            tok.trim().parse::<BigInt>().map_err(|_| Error::Parse {
                token: tok.trim().to_string(),
                input: s.to_string(),
            })
        })
        .collect()
}

impl FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(IntPolynomial::new(parse_int_list(s)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("1,4,5,2").to_string(), "1,4,5,2");
        assert_eq!(p("1, 2, 0, 0").to_string(), "1,2");
        assert_eq!(p("1,4,5,2").pretty(), "1 + 4t + 5t^2 + 2t^3");
        let err = "1,x,2".parse::<IntPolynomial>().unwrap_err();
        assert_eq!(err, Error::Parse { token: "x".into(), input: "1,x,2".into() });
        assert!("".parse::<IntPolynomial>().is_err());
        assert_eq!(p("0").degree(), None);
    }

    #[test]
    fn real_rootedness_examples() {
        assert!(p("1,4,5,2").is_real_rooted().unwrap());
        assert!(!p("1,4,6,3").is_real_rooted().unwrap());
        assert!(p("1,1").is_real_rooted().unwrap());
        assert!(!p("1,1,1").is_real_rooted().unwrap());
        assert!(p("1").is_real_rooted().unwrap());
        assert_eq!(p("0").is_real_rooted(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn repeated_roots_are_real() {
        // (1+t)^5 and (1+t)^3 (1+t+t^2)
        assert!(p("1,5,10,10,5,1").is_real_rooted().unwrap());
        let bad = p("1,3,3,1").product(&p("1,1,1"));
        assert!(!bad.is_real_rooted().unwrap());
    }

    #[test]
    fn products_of_linear_factors_are_real_rooted() {
        let mut acc = IntPolynomial::one();
        for r in [1i64, 3, 3, 7, 2, 9, 9, 9] {
            acc = acc.product(&IntPolynomial::from_i64s(&[1, r]));
            assert!(acc.is_real_rooted().unwrap(), "{acc}");
        }
    }

    #[test]
    fn ulc_examples() {
        assert!(p("1,4,5,2").is_ultra_log_concave().unwrap());
        assert!(p("1,2,1").is_ultra_log_concave().unwrap());
        let r = p("1,10,3,1").ultra_log_concavity().unwrap();
        assert!(!r.holds);
        let w = r.witness.unwrap();
        assert_eq!(w.index, 2);
        assert_eq!(w.coeff_square, BigInt::from(9));
        assert_eq!(w.neighbour_product, BigInt::from(10));
        assert!(matches!(
            p("1,-1,1").ultra_log_concavity(),
            Err(Error::NegativeCoefficient { index: 1, .. })
        ));
    }

    #[test]
    fn ulc_matches_rational_evaluation_for_remark_polynomial() {
        use num_rational::BigRational;
        let f = p("1,4,5,2");
        let d = 3usize;
        let c = |i: usize| BigRational::from(BigInt::from(binomial(&3u32.into(), i)));
        let a = |i: usize| BigRational::from(f.coeff(i));
        for i in 1..d {
            let lhs = (a(i) / c(i)) * (a(i) / c(i));
            let rhs = a(i - 1) * a(i + 1) / (c(i - 1) * c(i + 1));
            assert!(lhs >= rhs);
        }
    }

    #[test]
    fn constructions() {
        assert_eq!(p("1,2,1").product(&p("1,2,1")), p("1,4,6,4,1"));
        assert_eq!(p("1,4,5,2").product(&IntPolynomial::one()), p("1,4,5,2"));
        assert_eq!(p("1,1").product(&p("1,10,3,1")), p("1,11,13,4,1"));

        assert_eq!(p("1,2,1").hadamard(&p("1,3,3,1")), p("1,6,3"));
        assert_eq!(p("1,4,5,2").hadamard(&IntPolynomial::one()), p("1"));
        assert_eq!(p("1,4,5,2").hadamard(&p("1,4,5,2")), p("1,16,25,4"));

        assert_eq!(p("1,2,1").dilate(&2.into()), p("1,4,4"));
        assert_eq!(p("1,4,5,2").dilate(&1.into()), p("1,4,5,2"));
        assert_eq!(p("1,3").dilate(&5.into()), p("1,15"));

        assert_eq!(p("1,3,3,1").plus_t_derivative(), p("1,6,9,4"));
        assert_eq!(p("1").plus_t_derivative(), p("1"));
        assert_eq!(p("1,2").plus_t_derivative(), p("1,4"));
    }

    #[test]
    fn unit_positive_shape() {
        assert!(p("1,4,5,2").check_unit_positive().is_ok());
        assert!(matches!(p("2,1").check_unit_positive(), Err(Error::ConstantTermNotOne(_))));
        assert!(matches!(
            p("1,0,1").check_unit_positive(),
            Err(Error::NonPositiveCoefficient { index: 1, .. })
        ));
    }
}
