//! Integer polynomials read as identities of an automorphism.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomial is not primitive (content {0})")]
    NotPrimitive(BigInt),
    #[error("partial sum index j = {j} must be below n = {n}")]
    BadResidue { n: usize, j: usize },
    #[error("n must be positive")]
    ZeroModulus,
    #[error("f(1) = 0")]
    VanishesAtOne,
}

/// `a_0 + a_1 x + ... + a_d x^d` with `a_d != 0`; the zero polynomial has no
/// coefficients and no degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    /// `-1 + x^n`.
    pub fn order_identity(n: usize) -> Self {
        let mut c = vec![BigInt::zero(); n + 1];
        c[0] -= 1;
        c[n] += 1;
        Self::new(c)
    }

    /// `1 + x + ... + x^(n-1)`.
    pub fn splitting_identity(n: usize) -> Self {
        Self::new(vec![BigInt::from(1); n])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// gcd of the coefficients, 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    pub fn is_primitive(&self) -> bool {
        !self.is_zero() && self.content() == BigInt::from(1)
    }

    /// `f(1)`, the sum of the coefficients.
    pub fn value_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `f_{n,j}` with `f_{n,j}(x^n) x^j = sum_{i = j mod n} a_i x^i`.
    pub fn partial_sum(&self, n: usize, j: usize) -> Result<IntPolynomial, PolyError> {
        if n == 0 {
            return Err(PolyError::ZeroModulus);
        }
        if j >= n {
            return Err(PolyError::BadResidue { n, j });
        }
        Ok(Self::new(
            self.coeffs.iter().skip(j).step_by(n).cloned().collect(),
        ))
    }

    /// Least `j` with `f_{n,j}` primitive.
    pub fn primitive_partial_index(&self, n: usize) -> Result<usize, PolyError> {
        if !self.is_primitive() {
            return Err(PolyError::NotPrimitive(self.content()));
        }
        if n == 0 {
            return Err(PolyError::ZeroModulus);
        }
        Ok((0..n)
            .find(|&j| self.partial_sum(n, j).unwrap().is_primitive())
            .expect("a primitive polynomial always has a primitive partial sum"))
    }

    /// Coefficients reduced to `0..m` (`m >= 1`).
    pub fn residues(&self, m: u64) -> Vec<u64> {
        let m = BigInt::from(m);
        self.coeffs
            .iter()
            .map(|c| {
                let r = c.mod_floor(&m);
                u64::try_from(r).expect("residue fits in u64")
            })
            .collect()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != BigInt::from(1) {
                        write!(f, "{a}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

/// `b_0 x^{m_0} + ... + b_k x^{m_k}` where the term order matters when the
/// identity is evaluated in a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnorderedIdentity {
    terms: Vec<(usize, BigInt)>,
}

impl UnorderedIdentity {
    pub fn new(terms: Vec<(usize, BigInt)>) -> Self {
        UnorderedIdentity { terms }
    }

    pub fn from_i64(terms: &[(usize, i64)]) -> Self {
        Self::new(terms.iter().map(|&(m, b)| (m, BigInt::from(b))).collect())
    }

    /// The terms of an ordered identity, in ascending exponent order.
    pub fn from_ordered(f: &IntPolynomial) -> Self {
        Self::new(f.coeffs().iter().cloned().enumerate().collect())
    }

    pub fn terms(&self) -> &[(usize, BigInt)] {
        &self.terms
    }

    /// Polynomial obtained by collecting terms with equal exponents.
    pub fn underlying(&self) -> IntPolynomial {
        let len = self.terms.iter().map(|t| t.0 + 1).max().unwrap_or(0);
        let mut c = vec![BigInt::zero(); len];
        for (m, b) in &self.terms {
            c[*m] += b;
        }
        IntPolynomial::new(c)
    }

    /// `max m_i`, the degree parameter used by the bounds.
    pub fn max_exponent(&self) -> usize {
        self.terms.iter().map(|t| t.0).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn content_and_primitivity() {
        assert_eq!(p(&[-2, 4, 6]).content(), BigInt::from(2));
        assert!(!p(&[-2, 4, 6]).is_primitive());
        assert!(p(&[-1, 0, 0, 0, 0, 1]).is_primitive());
        assert!(!IntPolynomial::zero().is_primitive());
        assert_eq!(IntPolynomial::zero().content(), BigInt::zero());
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(p(&[3]).degree(), Some(0));
    }

    #[test]
    fn partial_sums() {
        let f = p(&[1, 2, 3, 4]);
        assert_eq!(f.partial_sum(2, 0).unwrap(), p(&[1, 3]));
        assert_eq!(f.partial_sum(2, 1).unwrap(), p(&[2, 4]));
        assert_eq!(f.partial_sum(1, 0).unwrap(), f);
        let g = p(&[-1, 0, 0, 0, 0, 1]);
        assert_eq!(g.partial_sum(5, 0).unwrap(), p(&[-1, 1]));
        for j in 1..5 {
            assert!(g.partial_sum(5, j).unwrap().is_zero());
        }
        assert_eq!(f.partial_sum(2, 2), Err(PolyError::BadResidue { n: 2, j: 2 }));
        assert_eq!(f.partial_sum(0, 0), Err(PolyError::ZeroModulus));
    }

    #[test]
    fn primitive_partials() {
        assert_eq!(p(&[-1, 0, 0, 0, 0, 1]).primitive_partial_index(5), Ok(0));
        assert_eq!(p(&[2, 1]).primitive_partial_index(2), Ok(1));
        assert_eq!(p(&[1]).primitive_partial_index(3), Ok(0));
        assert!(matches!(
            p(&[2, 4]).primitive_partial_index(2),
            Err(PolyError::NotPrimitive(_))
        ));
    }

    #[test]
    fn unordered_underlying() {
        let u = UnorderedIdentity::from_i64(&[(2, 1), (0, 1), (3, 1), (3, -1)]);
        assert_eq!(u.underlying(), p(&[1, 0, 1]));
        assert_eq!(u.max_exponent(), 3);
        let v = UnorderedIdentity::from_i64(&[(1, 1), (0, -2)]);
        assert_eq!(v.underlying(), p(&[-2, 1]));
        assert_eq!(v.max_exponent(), 1);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-2, 1]).to_string(), "-2 + x");
        assert_eq!(p(&[1, 1, 1]).to_string(), "1 + x + x^2");
        assert_eq!(p(&[0, -3, 0, 1]).to_string(), "-3*x + x^3");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    fn shift(f: &IntPolynomial, n: usize, j: usize) -> Vec<BigInt> {
        // coefficients of f_{n,j}(x^n) x^j
        let mut out = vec![BigInt::zero(); (f.coeffs().len() + 1) * n];
        for (i, c) in f.coeffs().iter().enumerate() {
            out[i * n + j] += c;
        }
        out
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn partial_sums_reconstruct(coeffs in prop::collection::vec(-50i64..50, 0..13), n in 1usize..7) {
            let f = p(&coeffs);
            let mut total = vec![BigInt::zero(); coeffs.len() + n + 1];
            for j in 0..n {
                let part = f.partial_sum(n, j).unwrap();
                for (i, c) in shift(&part, n, j).into_iter().enumerate() {
                    if i < total.len() { total[i] += c; }
                }
            }
            prop_assert_eq!(IntPolynomial::new(total), f);
        }

        #[test]
        fn partial_contents_gcd_to_content(coeffs in prop::collection::vec(-60i64..60, 1..14), n in 1usize..8) {
            let f = p(&coeffs);
            let g = (0..n).fold(BigInt::zero(), |acc, j| acc.gcd(&f.partial_sum(n, j).unwrap().content()));
            prop_assert_eq!(g, f.content());
        }

        #[test]
        fn unordered_degree_at_most_max_exponent(terms in prop::collection::vec((0usize..8, -5i64..5), 1..8)) {
            let u = UnorderedIdentity::from_i64(&terms);
            let under = u.underlying();
            let top = u.max_exponent();
            let top_sum: i64 = terms.iter().filter(|t| t.0 == top).map(|t| t.1).sum();
            match under.degree() {
                Some(d) => {
                    prop_assert!(d <= top);
                    prop_assert_eq!(d == top, top_sum != 0);
                }
                None => prop_assert!(top_sum == 0),
            }
        }
    }
}
