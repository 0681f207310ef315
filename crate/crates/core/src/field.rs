//! Exact arithmetic in GF(p^e).
//!
//! Elements are stored as their index `c_0 + c_1 p + ... + c_{e-1} p^{e-1}`
//! where `c_i` are the coordinates in the power basis of the defining
//! modulus. Multiplication goes through discrete log tables built from the
//! distinguished generator `omega`, so a field is cheap to query once built.

use std::fmt;

use thiserror::Error;

use crate::arith;

/// Largest field order accepted by [`FiniteField::new`].
pub const DEFAULT_FIELD_CAP: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{e} exceeds the cap {cap}")]
    CapExceeded { p: u64, e: u32, cap: u64 },
    #[error("field of order {order} has no subfield of order {q} with order q^2")]
    NotQuadratic { order: u64, q: u64 },
}

/// An element of a [`FiniteField`], identified by its coordinate index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(u32);

impl FieldElement {
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// GF(p^e) with a deterministic modulus and multiplicative generator.
#[derive(Clone)]
pub struct FiniteField {
    p: u64,
    e: u32,
    order: u64,
    /// Monic modulus, `modulus[i]` is the coefficient of `x^i`, length `e + 1`.
    modulus: Vec<u64>,
    omega: FieldElement,
    exp: Vec<u32>,
    log: Vec<u32>,
    /// Addition and negation tables for odd characteristic, built when the
    /// field is small enough; empty otherwise.
    add_table: Vec<u32>,
    neg_table: Vec<u32>,
}

/// Largest order that gets a full addition table.
const ADD_TABLE_LIMIT: u64 = 1024;

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteField")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("modulus", &self.modulus)
            .field("omega", &self.omega)
            .finish()
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.modulus == other.modulus
    }
}

impl Eq for FiniteField {}

impl FiniteField {
    pub fn new(p: u64, e: u32) -> Result<Self, FieldError> {
        Self::with_cap(p, e, DEFAULT_FIELD_CAP)
    }

    pub fn with_cap(p: u64, e: u32, cap: u64) -> Result<Self, FieldError> {
        if !arith::is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if e == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let order = match arith::checked_pow(p, e) {
            Some(q) if q <= cap && q <= u32::MAX as u64 => q,
            _ => return Err(FieldError::CapExceeded { p, e, cap }),
        };
        let modulus = smallest_irreducible(p, e);
        let mut field = FiniteField {
            p,
            e,
            order,
            modulus,
            omega: FieldElement(0),
            exp: Vec::new(),
            log: Vec::new(),
            add_table: Vec::new(),
            neg_table: Vec::new(),
        };
        field.omega = field.find_generator();
        field.build_tables();
        if p != 2 && order <= ADD_TABLE_LIMIT {
            let n = order as u32;
            field.neg_table = (0..n).map(|a| field.digit_neg(a)).collect();
            field.add_table = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .map(|(a, b)| field.digit_add(a, b))
                .collect();
        }
        Ok(field)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The distinguished generator of the multiplicative group.
    pub fn omega(&self) -> FieldElement {
        self.omega
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.order as u32).map(FieldElement)
    }

    pub fn element(&self, index: u32) -> FieldElement {
        assert!((index as u64) < self.order, "element index out of range");
        FieldElement(index)
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> FieldElement {
        assert!(coeffs.len() <= self.e as usize);
        FieldElement(self.encode(coeffs))
    }

    pub fn coeffs(&self, x: FieldElement) -> Vec<u64> {
        self.decode(x.0)
    }

    /// Image of an integer under `Z -> GF(p)`.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if !self.add_table.is_empty() {
            return FieldElement(self.add_table[(a.0 as u64 * self.order + b.0 as u64) as usize]);
        }
        FieldElement(self.digit_add(a.0, b.0))
    }

    /// Coefficient-wise sum of base-`p` digit strings.
    fn digit_add(&self, a: u32, b: u32) -> u32 {
        let (p, mut x, mut y) = (self.p as u32, a, b);
        let (mut out, mut place) = (0u32, 1u32);
        while x > 0 || y > 0 {
            let d = (x % p + y % p) % p;
            out += d * place;
            place = place.wrapping_mul(p);
            x /= p;
            y /= p;
        }
        out
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.p == 2 {
            return a;
        }
        if !self.neg_table.is_empty() {
            return FieldElement(self.neg_table[a.0 as usize]);
        }
        FieldElement(self.digit_neg(a.0))
    }

    fn digit_neg(&self, a: u32) -> u32 {
        let (p, mut x) = (self.p as u32, a);
        let (mut out, mut place) = (0u32, 1u32);
        while x > 0 {
            let d = (p - x % p) % p;
            out += d * place;
            place = place.wrapping_mul(p);
            x /= p;
        }
        out
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement(0);
        }
        let n = self.order - 1;
        let mut k = self.log[a.0 as usize] as u64 + self.log[b.0 as usize] as u64;
        if k >= n {
            k -= n;
        }
        FieldElement(self.exp[k as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        if a.0 == 0 {
            return None;
        }
        let n = self.order - 1;
        let k = (n - self.log[a.0 as usize] as u64) % n;
        Some(FieldElement(self.exp[k as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Option<FieldElement> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: FieldElement, k: u64) -> FieldElement {
        if k == 0 {
            return self.one();
        }
        if a.0 == 0 {
            return a;
        }
        let n = self.order - 1;
        let idx = (self.log[a.0 as usize] as u128 * (k % n) as u128) % n as u128;
        FieldElement(self.exp[idx as usize])
    }

    /// `omega^k` for any integer `k`.
    pub fn omega_pow(&self, k: i64) -> FieldElement {
        let n = (self.order - 1) as i64;
        FieldElement(self.exp[k.rem_euclid(n) as usize])
    }

    /// Discrete log to base `omega`; `None` for zero.
    pub fn log(&self, a: FieldElement) -> Option<u64> {
        (a.0 != 0).then(|| self.log[a.0 as usize] as u64)
    }

    /// Integer multiple `n * a`, computed through the prime field.
    pub fn scale(&self, n: i64, a: FieldElement) -> FieldElement {
        self.mul(self.from_int(n), a)
    }

    pub fn multiplicative_order(&self, a: FieldElement) -> Option<u64> {
        let l = self.log(a)?;
        let n = self.order - 1;
        Some(n / arith::gcd(n, l))
    }

    /// `t -> t^(p^power)`, with `power` taken mod `e`.
    pub fn frobenius(&self, power: u32) -> Frobenius<'_> {
        Frobenius {
            field: self,
            power: power % self.e,
        }
    }

    /// `t^(p^power)`.
    pub fn frobenius_apply(&self, t: FieldElement, power: u32) -> FieldElement {
        let k = power % self.e;
        let exponent = arith::pow_mod(self.p, k as u64, self.order - 1);
        // pow_mod collapses p^k to 0 only when order - 1 == 1, i.e. GF(2).
        if self.order == 2 {
            return t;
        }
        self.pow(t, if exponent == 0 { self.order - 1 } else { exponent })
    }

    /// Membership in the unique subfield of order `q`.
    pub fn in_subfield(&self, t: FieldElement, q: u64) -> bool {
        self.pow(t, q) == t
    }

    /// Witness for the surjectivity of `(s, u) -> s` in the `D_{N,K}` construction.
    ///
    /// For `|K| = q^2` returns `(alpha, beta)` with `alpha` a nonzero element of the
    /// `q`-element subfield, `beta` outside it and `beta + beta^q = alpha`.
    pub fn trace_pair_witness(&self, q: u64) -> Result<(FieldElement, FieldElement), FieldError> {
        let err = FieldError::NotQuadratic {
            order: self.order,
            q,
        };
        if q.checked_mul(q) != Some(self.order) {
            return Err(err);
        }
        for beta in self.elements() {
            if self.in_subfield(beta, q) {
                continue;
            }
            let alpha = self.add(beta, self.pow(beta, q));
            if alpha.is_zero() {
                continue;
            }
            debug_assert!(self.in_subfield(alpha, q));
            return Ok((alpha, beta));
        }
        Err(err)
    }

    fn encode(&self, coeffs: &[u64]) -> u32 {
        coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.p + c % self.p) as u32
    }

    fn decode(&self, mut x: u32) -> Vec<u64> {
        let p = self.p as u32;
        (0..self.e)
            .map(|_| {
                let d = x % p;
                x /= p;
                d as u64
            })
            .collect()
    }

    /// Multiplication by polynomial arithmetic modulo the modulus.
    pub(crate) fn slow_mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let x = self.decode(a.0);
        let y = self.decode(b.0);
        let prod = poly_mul_mod(&x, &y, &self.modulus, self.p);
        FieldElement(self.encode(&prod))
    }

    fn slow_pow(&self, a: FieldElement, mut k: u64) -> FieldElement {
        let mut acc = self.one();
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.slow_mul(acc, base);
            }
            base = self.slow_mul(base, base);
            k >>= 1;
        }
        acc
    }

    fn find_generator(&self) -> FieldElement {
        let n = self.order - 1;
        let primes = arith::prime_divisors(n);
        (1..self.order as u32)
            .map(FieldElement)
            .find(|&c| primes.iter().all(|&r| self.slow_pow(c, n / r) != self.one()))
            .expect("the multiplicative group of a finite field is cyclic")
    }

    fn build_tables(&mut self) {
        let n = (self.order - 1) as usize;
        let mut exp = Vec::with_capacity(n);
        let mut log = vec![0u32; self.order as usize];
        let mut x = self.one();
        for k in 0..n {
            exp.push(x.0);
            log[x.0 as usize] = k as u32;
            x = self.slow_mul(x, self.omega);
        }
        self.exp = exp;
        self.log = log;
    }
}

/// A power of the Frobenius automorphism of a fixed field.
#[derive(Clone, Copy)]
pub struct Frobenius<'a> {
    field: &'a FiniteField,
    power: u32,
}

impl Frobenius<'_> {
    pub fn power(&self) -> u32 {
        self.power
    }

    pub fn apply(&self, t: FieldElement) -> FieldElement {
        self.field.frobenius_apply(t, self.power)
    }

    /// Order as an automorphism of the field.
    pub fn order(&self) -> u32 {
        let e = self.field.e;
        e / (arith::gcd(e as u64, self.power as u64) as u32)
    }
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Remainder of `a` modulo the monic polynomial `m` over GF(p).
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            let t = &mut r[shift + i];
            *t = (*t + p - (lead * c) % p) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let e = m.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    let mut r = poly_rem(&prod, m, p);
    r.resize(e, 0);
    r
}

fn monic_from_index(mut idx: u64, degree: u32, p: u64) -> Vec<u64> {
    let mut v = Vec::with_capacity(degree as usize + 1);
    for _ in 0..degree {
        v.push(idx % p);
        idx /= p;
    }
    v.push(1);
    v
}

/// Irreducibility by trial division against every monic polynomial of degree `<= deg/2`.
pub(crate) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() as u32 - 1;
    for d in 1..=deg / 2 {
        for idx in 0..p.pow(d) {
            let g = monic_from_index(idx, d, p);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Smallest monic irreducible of degree `e`, ordering candidates by the index
/// `a_0 + a_1 p + ... + a_{e-1} p^{e-1}` of their lower coefficients.
fn smallest_irreducible(p: u64, e: u32) -> Vec<u64> {
    (0..p.pow(e))
        .map(|idx| monic_from_index(idx, e, p))
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}
