//! Finite-field tables against schoolbook polynomial arithmetic modulo the
//! field's own modulus.

use fitbound::field::{FieldElement, FiniteField};
use proptest::prelude::*;

fn prime_powers(limit: u64) -> Vec<(u64, u32)> {
    let is_prime = |n: u64| n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d));
    let mut out = Vec::new();
    for p in (2..=limit).filter(|&n| is_prime(n)) {
        let mut e = 1;
        while p.pow(e) <= limit {
            out.push((p, e));
            e += 1;
        }
    }
    out
}

/// Product of coefficient vectors reduced by the monic modulus.
fn poly_mul(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let e = modulus.len() - 1;
    let mut prod = vec![0u64; 2 * e];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for top in (e..prod.len()).rev() {
        let c = prod[top];
        if c == 0 {
            continue;
        }
        for (i, &m) in modulus[..e].iter().enumerate() {
            let k = top - e + i;
            prod[k] = (prod[k] + c * (p - m)) % p;
        }
        prod[top] = 0;
    }
    prod.truncate(e);
    prod
}

#[test]
fn tables_match_polynomial_arithmetic() {
    for (p, e) in prime_powers(625) {
        let k = FiniteField::new(p, e).unwrap();
        let modulus = k.modulus().to_vec();
        assert_eq!(modulus.len(), e as usize + 1, "GF({p}^{e}) modulus degree");
        assert_eq!(*modulus.last().unwrap(), 1, "modulus is monic");
        let coeffs: Vec<Vec<u64>> = k.elements().map(|x| k.coeffs(x)).collect();
        for (i, x) in k.elements().enumerate() {
            assert_eq!(k.from_coeffs(&coeffs[i]), x);
            for (j, y) in k.elements().enumerate() {
                let sum: Vec<u64> = coeffs[i].iter().zip(&coeffs[j]).map(|(a, b)| (a + b) % p).collect();
                assert_eq!(k.coeffs(k.add(x, y)), sum, "GF({p}^{e}) add");
                assert_eq!(
                    k.coeffs(k.mul(x, y)),
                    poly_mul(&coeffs[i], &coeffs[j], &modulus, p),
                    "GF({p}^{e}) mul"
                );
            }
            if !x.is_zero() {
                let inv = k.inv(x).unwrap();
                assert_eq!(k.mul(x, inv), k.one(), "GF({p}^{e}) inverse");
            }
        }
        assert_eq!(k.multiplicative_order(k.omega()), Some(k.order() - 1), "GF({p}^{e}) generator");
    }
}

/// Every triple for the small fields; larger fields are sampled below.
#[test]
fn ring_axioms_exhaustive_up_to_64() {
    for (p, e) in prime_powers(64) {
        let k = FiniteField::new(p, e).unwrap();
        let els: Vec<FieldElement> = k.elements().collect();
        for &a in &els {
            assert_eq!(k.add(a, k.neg(a)), k.zero());
            for &b in &els {
                assert_eq!(k.mul(a, b), k.mul(b, a));
                for &c in &els {
                    assert_eq!(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
                    assert_eq!(k.add(k.add(a, b), c), k.add(a, k.add(b, c)));
                    assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn ring_axioms_sampled(field in prop::sample::select(prime_powers(625)), a: u32, b: u32, c: u32) {
        let (p, e) = field;
        let k = FiniteField::new(p, e).unwrap();
        let q = k.order() as u32;
        let (a, b, c) = (k.element(a % q), k.element(b % q), k.element(c % q));
        prop_assert_eq!(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
        prop_assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
        prop_assert_eq!(k.frobenius_apply(k.mul(a, b), 1), k.mul(k.frobenius_apply(a, 1), k.frobenius_apply(b, 1)));
        prop_assert_eq!(k.frobenius_apply(k.add(a, b), 1), k.add(k.frobenius_apply(a, 1), k.frobenius_apply(b, 1)));
    }
}
