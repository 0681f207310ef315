//! Additive identities of Frobenius maps and the matching Vandermonde system.
//!
//! For `phi(t) = t^(q0)` on `K`, an integer vector `a` gives an additive
//! identity when `sum a_i phi^i(s) = 0` for every `s`. Only `a mod p` matters.

use thiserror::Error;

use crate::arith;
use crate::field::{FieldElement, FiniteField};
use crate::poly::IntPolynomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FrobIdError {
    #[error("{q0} is not a power of the characteristic {p}")]
    NotCharacteristicPower { q0: u64, p: u64 },
    #[error("t -> t^{q0} is the identity on GF({q}); -1 + x is a degree 1 identity")]
    TrivialFrobenius { q0: u64, q: u64 },
    #[error("row reduction gives {elimination}, the product formula gives {product}")]
    DeterminantMismatch { elimination: u32, product: u32 },
    #[error("no primitive identity of degree at most {0}")]
    NotFound(usize),
}

/// `k` with `q0 = p^k`.
fn frobenius_power(k: &FiniteField, q0: u64) -> Result<u32, FrobIdError> {
    let p = k.characteristic();
    let err = FrobIdError::NotCharacteristicPower { q0, p };
    if q0 == 0 {
        return Err(err);
    }
    let mut x = q0;
    let mut e = 0;
    while x.is_multiple_of(p) {
        x /= p;
        e += 1;
    }
    if x == 1 {
        Ok(e)
    } else {
        Err(err)
    }
}

/// `sum a_i s^(q0^i)` with coefficients taken mod `p`.
pub fn additive_value(k: &FiniteField, q0: u64, coeffs: &[i64], s: FieldElement) -> Result<FieldElement, FrobIdError> {
    let power = frobenius_power(k, q0)?;
    Ok(evaluate(k, power, coeffs, s))
}

fn evaluate(k: &FiniteField, power: u32, coeffs: &[i64], s: FieldElement) -> FieldElement {
    let mut acc = k.zero();
    let mut x = s;
    for (i, &a) in coeffs.iter().enumerate() {
        if i > 0 {
            x = k.frobenius_apply(x, power);
        }
        acc = k.add(acc, k.scale(a, x));
    }
    acc
}

/// `Ok(None)` when the identity holds on all of `K`, otherwise the least
/// counterexample.
pub fn check_additive_identity(
    k: &FiniteField,
    q0: u64,
    coeffs: &[i64],
) -> Result<Option<FieldElement>, FrobIdError> {
    let power = frobenius_power(k, q0)?;
    Ok(k.elements().find(|&s| !evaluate(k, power, coeffs, s).is_zero()))
}

/// The nodes `x_j = omega^(q0^j - 1)`, exponents reduced mod `q - 1`.
pub fn vandermonde_nodes(k: &FiniteField, q0: u64, d: usize) -> Vec<FieldElement> {
    let m = k.order() - 1;
    (0..=d)
        .map(|j| {
            let e = (arith::pow_mod(q0 % m.max(1), j as u64, m.max(1)) + m - 1) % m.max(1);
            k.omega_pow(e as i64)
        })
        .collect()
}

/// `M_ij = x_j^i`.
pub fn vandermonde_matrix(k: &FiniteField, q0: u64, d: usize) -> Vec<Vec<FieldElement>> {
    let nodes = vandermonde_nodes(k, q0, d);
    (0..=d)
        .map(|i| nodes.iter().map(|&x| k.pow(x, i as u64)).collect())
        .collect()
}

/// Determinant by Gaussian elimination with row swaps.
pub fn determinant(k: &FiniteField, mut m: Vec<Vec<FieldElement>>) -> FieldElement {
    let n = m.len();
    let mut det = k.one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return k.zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = k.neg(det);
        }
        let pv = m[col][col];
        det = k.mul(det, pv);
        let inv = k.inv(pv).expect("pivot is nonzero");
        let (top, rest) = m.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in rest {
            let factor = k.mul(row[col], inv);
            if factor.is_zero() {
                continue;
            }
            for (x, &y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = k.sub(*x, k.mul(factor, y));
            }
        }
    }
    det
}

/// `prod_{i<j} (x_j - x_i)`.
pub fn vandermonde_product(k: &FiniteField, q0: u64, d: usize) -> FieldElement {
    let x = vandermonde_nodes(k, q0, d);
    let mut acc = k.one();
    for j in 0..x.len() {
        for i in 0..j {
            acc = k.mul(acc, k.sub(x[j], x[i]));
        }
    }
    acc
}

/// The determinant of the `(d+1) x (d+1)` system, computed by elimination and
/// by the product formula; disagreement is reported as an error.
pub fn vandermonde_det(k: &FiniteField, q0: u64, d: usize) -> Result<FieldElement, FrobIdError> {
    frobenius_power(k, q0)?;
    let elimination = determinant(k, vandermonde_matrix(k, q0, d));
    let product = vandermonde_product(k, q0, d);
    if elimination != product {
        return Err(FrobIdError::DeterminantMismatch {
            elimination: elimination.index(),
            product: product.index(),
        });
    }
    Ok(elimination)
}

/// Whether `q0^i = q0^j mod (q - 1)` for some `0 <= i < j <= d`.
pub fn has_repeated_exponent(q: u64, q0: u64, d: usize) -> bool {
    let m = q - 1;
    let mut seen = std::collections::HashSet::new();
    (0..=d).any(|j| !seen.insert(arith::pow_mod(q0 % m.max(1), j as u64, m.max(1))))
}

/// The least degree of a primitive additive identity, with the identity found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalIdentity {
    pub degree: usize,
    pub identity: IntPolynomial,
}

/// Exhaustive search over coefficient vectors mod `p`, degree by degree.
///
/// Solutions are scaled to be monic mod `p`, which makes the integer lift
/// primitive; residues are printed in the symmetric range.
pub fn min_primitive_identity_degree(
    k: &FiniteField,
    q0: u64,
    max_degree: usize,
) -> Result<MinimalIdentity, FrobIdError> {
    let power = frobenius_power(k, q0)?;
    if power % k.degree() == 0 {
        return Err(FrobIdError::TrivialFrobenius { q0, q: k.order() });
    }
    let p = k.characteristic();
    for d in 1..=max_degree {
        let probes: Vec<FieldElement> = (0..=d as i64).map(|i| k.omega_pow(i)).collect();
        let mut lower = vec![0u64; d];
        loop {
            let coeffs: Vec<i64> = lower
                .iter()
                .map(|&c| c as i64)
                .chain(std::iter::once(1))
                .collect();
            let cheap = probes
                .iter()
                .all(|&s| evaluate(k, power, &coeffs, s).is_zero());
            if cheap && k.elements().all(|s| evaluate(k, power, &coeffs, s).is_zero()) {
                let half = p as i64 / 2;
                let symmetric = coeffs
                    .iter()
                    .map(|&c| if c > half { c - p as i64 } else { c })
                    .collect::<Vec<_>>();
                return Ok(MinimalIdentity {
                    degree: d,
                    identity: IntPolynomial::from_i64(&symmetric),
                });
            }
            if !increment(&mut lower, p) {
                break;
            }
        }
    }
    Err(FrobIdError::NotFound(max_degree))
}

/// Odometer over `0..p` per slot, least significant slot first.
fn increment(v: &mut [u64], p: u64) -> bool {
    for x in v.iter_mut() {
        *x += 1;
        if *x < p {
            return true;
        }
        *x = 0;
    }
    false
}
