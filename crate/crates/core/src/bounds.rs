//! The explicit bound functions and their big-integer representation.
//!
//! `B1(d, m) = 8d + m + 2`, `B3(d, m) = m + m^(1000 d)` and
//! `B2(d, m) = (B3(d, m)^(m d))! * B2(d, floor(m/2))` with `B2(d, 1) = 1`.
//! For `d >= 1, m >= 2` the factorial argument alone has over a thousand
//! bits, so `B2` is kept as a certificate and only ever compared.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use serde_json::{json, Value};
use thiserror::Error;

use crate::poly::IntPolynomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("m must be at least 1")]
    ZeroM,
    #[error("f(1) = 0, the corollary bound does not apply")]
    VanishesAtOne,
}

/// Factorial arguments up to this size are materialised.
const FACTORIAL_MATERIALISE_LIMIT: u64 = 2000;

/// Powers above this many bits are never materialised.
const POWER_BIT_BUDGET: u64 = 1 << 24;

/// An exact value or a factorial certificate `(base^exponent)! * rest`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BigBound {
    Exact(BigUint),
    FactorialOfPower {
        base: BigUint,
        exponent: u64,
        rest: Box<BigBound>,
    },
}

impl BigBound {
    pub fn from_u64(v: u64) -> Self {
        BigBound::Exact(BigUint::from(v))
    }

    pub fn exact(&self) -> Option<&BigUint> {
        match self {
            BigBound::Exact(v) => Some(v),
            BigBound::FactorialOfPower { .. } => None,
        }
    }

    pub fn is_certificate(&self) -> bool {
        self.exact().is_none()
    }

    /// `min(self, cap)`, computed without materialising large values.
    pub fn saturate(&self, cap: &BigUint) -> BigUint {
        match self {
            BigBound::Exact(v) => v.min(cap).clone(),
            BigBound::FactorialOfPower {
                base,
                exponent,
                rest,
            } => {
                let arg = saturating_pow(base, *exponent, cap);
                let fact = saturating_factorial(&arg, cap);
                let r = rest.saturate(cap);
                (fact * r).min(cap.clone())
            }
        }
    }

    /// Decides `self >= x` exactly.
    pub fn ge(&self, x: &BigUint) -> bool {
        self.saturate(x) >= *x
    }

    pub fn ge_u64(&self, x: u64) -> bool {
        self.ge(&BigUint::from(x))
    }

    /// Decides `self >= other` when the structure allows it.
    pub fn dominates(&self, other: &BigBound) -> Option<bool> {
        match (self, other) {
            (_, BigBound::Exact(b)) => Some(self.ge(b)),
            (BigBound::Exact(a), _) => Some(!other.ge(&(a + 1u32))),
            (
                BigBound::FactorialOfPower {
                    base: b1,
                    exponent: e1,
                    rest: r1,
                },
                BigBound::FactorialOfPower {
                    base: b2,
                    exponent: e2,
                    rest: r2,
                },
            ) => {
                let a = materialise_power(b1, *e1)?;
                let b = materialise_power(b2, *e2)?;
                match a.cmp(&b) {
                    Ordering::Equal => r1.dominates(r2),
                    // a! / b! >= 2^(a - b), which beats any rest of fewer bits
                    Ordering::Greater => {
                        if r1.dominates(r2) == Some(true) || &a - &b >= r2.log2_upper()? {
                            Some(true)
                        } else {
                            None
                        }
                    }
                    Ordering::Less => {
                        if r2.dominates(r1) == Some(true) || &b - &a > r1.log2_upper()? {
                            Some(false)
                        } else {
                            None
                        }
                    }
                }
            }
        }
    }

    /// An upper bound on `log2(self)`, when one can be written down.
    pub fn log2_upper(&self) -> Option<BigUint> {
        match self {
            BigBound::Exact(v) => Some(BigUint::from(v.bits())),
            BigBound::FactorialOfPower {
                base,
                exponent,
                rest,
            } => {
                // n! <= n^n
                let n = materialise_power(base, *exponent)?;
                let bits = BigUint::from(n.bits());
                Some(n * bits + rest.log2_upper()?)
            }
        }
    }

    /// Report rendering: exact values as decimal strings, certificates as
    /// `{base, exp, factorial, times}` objects.
    pub fn to_json(&self) -> Value {
        match self {
            BigBound::Exact(v) => Value::String(v.to_string()),
            BigBound::FactorialOfPower {
                base,
                exponent,
                rest,
            } => json!({
                "base": base.to_string(),
                "exp": exponent.to_string(),
                "factorial": true,
                "times": rest.to_json(),
            }),
        }
    }

    /// Short human-readable form.
    pub fn summary(&self) -> String {
        match self {
            BigBound::Exact(v) => {
                let s = v.to_string();
                if s.len() <= 40 {
                    s
                } else {
                    format!("~10^{}", s.len() - 1)
                }
            }
            BigBound::FactorialOfPower {
                base,
                exponent,
                rest,
            } => {
                let digits = base.to_string().len();
                format!("(~10^{}^{})! * {}", digits - 1, exponent, rest.summary())
            }
        }
    }
}

fn saturating_pow(base: &BigUint, exponent: u64, cap: &BigUint) -> BigUint {
    if exponent == 0 {
        return BigUint::one();
    }
    if base <= &BigUint::one() {
        return base.clone();
    }
    let mut acc = BigUint::one();
    for _ in 0..exponent {
        acc *= base;
        if acc >= *cap {
            return cap.clone();
        }
    }
    acc
}

fn saturating_factorial(n: &BigUint, cap: &BigUint) -> BigUint {
    let mut acc = BigUint::one();
    let mut k = BigUint::from(2u32);
    while k <= *n {
        acc *= &k;
        if acc >= *cap {
            return cap.clone();
        }
        k += 1u32;
    }
    acc.min(cap.clone())
}

fn materialise_power(base: &BigUint, exponent: u64) -> Option<BigUint> {
    if base.bits().saturating_mul(exponent) > POWER_BIT_BUDGET {
        return None;
    }
    Some(base.pow(u32::try_from(exponent).ok()?))
}

/// `8d + m + 2`.
pub fn b1(d: u64, m: u64) -> u64 {
    8 * d + m + 2
}

/// `m + m^(1000 d)` as an exact integer.
pub fn b3_exact(d: u64, m: u64) -> Result<BigUint, BoundError> {
    if m == 0 {
        return Err(BoundError::ZeroM);
    }
    let exp = 1000 * d;
    let pow = BigUint::from(m).pow(u32::try_from(exp).expect("B3 exponent fits in u32"));
    Ok(pow + m)
}

pub fn b3(d: u64, m: u64) -> Result<BigBound, BoundError> {
    b3_exact(d, m).map(BigBound::Exact)
}

pub fn b2(d: u64, m: u64) -> Result<BigBound, BoundError> {
    if m == 0 {
        return Err(BoundError::ZeroM);
    }
    if m == 1 {
        return Ok(BigBound::from_u64(1));
    }
    let base = b3_exact(d, m)?;
    let exponent = m * d;
    let rest = b2(d, m / 2)?;
    let small_arg = (base.bits().saturating_mul(exponent) <= 64)
        .then(|| base.pow(exponent as u32).to_u64())
        .flatten()
        .filter(|&a| a <= FACTORIAL_MATERIALISE_LIMIT);
    match (small_arg, &rest) {
        (Some(a), BigBound::Exact(r)) => {
            let fact: BigUint = (1..=a).map(BigUint::from).product();
            Ok(BigBound::Exact(fact * r))
        }
        _ => Ok(BigBound::FactorialOfPower {
            base,
            exponent,
            rest: Box::new(rest),
        }),
    }
}

/// `8 deg(f) + 2|f(1)| + 2`, defined when `f(1) != 0`.
pub fn corollary_bound(f: &IntPolynomial) -> Result<BigUint, BoundError> {
    let at_one = f.value_at_one();
    if at_one.is_zero() {
        return Err(BoundError::VanishesAtOne);
    }
    let deg = f.degree().expect("nonzero f(1) implies f != 0") as u64;
    Ok(BigUint::from(8 * deg + 2) + at_one.magnitude() * 2u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b1_values() {
        assert_eq!(b1(1, 0), 10);
        assert_eq!(b1(0, 0), 2);
        assert_eq!(b1(5, 6), 48);
    }

    #[test]
    fn b3_values() {
        assert_eq!(b3_exact(3, 1).unwrap(), BigUint::from(2u32));
        assert_eq!(b3_exact(0, 7).unwrap(), BigUint::from(8u32));
        let v = b3_exact(1, 2).unwrap();
        let power = v - 2u32;
        assert_eq!(power.bits(), 1001);
        assert_eq!(power, BigUint::one() << 1000);
        assert_eq!(b3(1, 0), Err(BoundError::ZeroM));
    }

    #[test]
    fn b2_values() {
        for d in 0..=10 {
            assert_eq!(b2(d, 1).unwrap(), BigBound::from_u64(1));
        }
        assert_eq!(b2(0, 2).unwrap(), BigBound::from_u64(1));
        let cert = b2(1, 2).unwrap();
        assert!(cert.is_certificate());
        assert!(cert.ge_u64(3600));
        assert!(cert.ge_u64(1_000_000_000));
        assert_eq!(b2(3, 0), Err(BoundError::ZeroM));
    }

    #[test]
    fn certificate_agrees_with_exact_when_small() {
        // (3^2)! * 2 = 725760
        let cert = BigBound::FactorialOfPower {
            base: BigUint::from(3u32),
            exponent: 2,
            rest: Box::new(BigBound::from_u64(2)),
        };
        let exact = BigBound::from_u64(725_760);
        for x in [1u64, 5, 725_759, 725_760, 725_761, 10u64.pow(9)] {
            assert_eq!(cert.ge_u64(x), exact.ge_u64(x), "x = {x}");
        }
        assert_eq!(cert.dominates(&exact), Some(true));
        assert_eq!(exact.dominates(&cert), Some(true));
        assert_eq!(BigBound::from_u64(725_759).dominates(&cert), Some(false));
    }

    #[test]
    fn b2_monotone_in_m() {
        for d in 0..=3 {
            for m in 1..=8 {
                let lo = b2(d, m).unwrap();
                let hi = b2(d, m + 1).unwrap();
                assert_eq!(hi.dominates(&lo), Some(true), "d={d} m={m}");
            }
        }
    }

    #[test]
    fn corollary_values() {
        let f = IntPolynomial::from_i64(&[-2, 1]);
        assert_eq!(corollary_bound(&f).unwrap(), BigUint::from(12u32));
        let g = IntPolynomial::from_i64(&[-1, 0, 0, 0, 0, 1]);
        assert_eq!(corollary_bound(&g), Err(BoundError::VanishesAtOne));
        assert_eq!(corollary_bound(&IntPolynomial::from_i64(&[3])).unwrap(), BigUint::from(8u32));
        assert_eq!(corollary_bound(&IntPolynomial::from_i64(&[1, 1, 1])).unwrap(), BigUint::from(24u32));
    }

    #[test]
    fn json_rendering() {
        assert_eq!(BigBound::from_u64(10).to_json(), Value::String("10".into()));
        let v = b2(1, 2).unwrap().to_json();
        assert_eq!(v["factorial"], Value::Bool(true));
        assert_eq!(v["exp"], Value::String("2".into()));
        assert_eq!(v["times"], Value::String("1".into()));
    }
}
