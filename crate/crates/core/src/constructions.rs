//! Concrete groups with designated automorphisms.
//!
//! Stock permutation groups by name, the special group `D_{N,K}` on pairs of
//! field elements, `PSL(2, q)` on the projective line, direct powers with the
//! cyclic coordinate shift, and companion-matrix actions on `(Z/p)^d`.

use num_bigint::BigInt;
use rayon::prelude::*;
use thiserror::Error;

use crate::arith;
use crate::automorphism::{Automorphism, AutomorphismError};
use crate::field::{FieldElement, FieldError, FiniteField};
use crate::group::{direct_product_capped, Group, GroupError, Permutation, DEFAULT_ELEMENT_CAP};
use crate::poly::IntPolynomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("unknown group name {0:?}")]
    UnknownName(String),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("group of order {order} exceeds the element cap {cap}")]
    CapExceeded { order: u128, cap: usize },
    #[error("D_(N,K) is not closed: {0}")]
    NotClosed(String),
    #[error("D_(N,K) is not stable under the Frobenius map")]
    NotFrobeniusStable,
    #[error("enumerated order {found} differs from the formula {expected}")]
    OrderMismatch { expected: u64, found: usize },
    #[error("companion polynomial has degree 0 modulo {0}")]
    ConstantModP(u64),
    #[error("companion polynomial has f(0) = 0 modulo {0}")]
    ZeroConstantTerm(u64),
    #[error("n must be positive")]
    ZeroPower,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Automorphism(#[from] AutomorphismError),
}

/// Named permutation groups: `trivial`, `V4`, `C<n>`, `D<2n>`, `S<n>`, `A<n>`
/// (the last two for `n <= 7`).
pub fn stock(name: &str) -> Result<Group, ConstructionError> {
    let unknown = || ConstructionError::UnknownName(name.to_string());
    if name == "trivial" || name == "1" {
        return Ok(Group::trivial());
    }
    if name == "V4" {
        return perm_group(4, &[&[&[1, 2], &[3, 4]], &[&[1, 3], &[2, 4]]]);
    }
    if name.len() < 2 || !name.is_char_boundary(1) {
        return Err(unknown());
    }
    let (kind, n) = name.split_at(1);
    let n: usize = n.parse().map_err(|_| unknown())?;
    match kind {
        "C" if n >= 1 => {
            let cycle: Vec<usize> = (1..=n).collect();
            perm_group(n, &[&[&cycle]])
        }
        "D" if n >= 2 && n.is_multiple_of(2) => dihedral(n / 2),
        "S" if n == 1 => Ok(Group::trivial()),
        "S" if (2..=7).contains(&n) => {
            let cycle: Vec<usize> = (1..=n).collect();
            perm_group(n, &[&[&[1, 2]], &[&cycle]])
        }
        "A" if (1..=7).contains(&n) => {
            // the 3-cycles (1 2 i) generate A_n
            let gens: Vec<Vec<Vec<usize>>> = (3..=n).map(|i| vec![vec![1, 2, i]]).collect();
            let refs: Vec<Vec<&[usize]>> = gens
                .iter()
                .map(|g| g.iter().map(Vec::as_slice).collect())
                .collect();
            let refs: Vec<&[&[usize]]> = refs.iter().map(Vec::as_slice).collect();
            perm_group(n, &refs)
        }
        _ => Err(unknown()),
    }
}

/// Dihedral group of order `2n`.
fn dihedral(n: usize) -> Result<Group, ConstructionError> {
    match n {
        1 => perm_group(2, &[&[&[1, 2]]]),
        2 => stock("V4"),
        _ => {
            let rotation: Vec<usize> = (1..=n).collect();
            let reflection: Vec<Vec<usize>> = (2..=n.div_ceil(2))
                .map(|i| vec![i, n + 2 - i])
                .filter(|c| c[0] < c[1])
                .collect();
            let reflection: Vec<&[usize]> = reflection.iter().map(Vec::as_slice).collect();
            perm_group(n, &[&[&rotation], &reflection])
        }
    }
}

fn perm_group(degree: usize, gens: &[&[&[usize]]]) -> Result<Group, ConstructionError> {
    let perms: Vec<Permutation> = gens
        .iter()
        .map(|cycles| {
            let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
            Permutation::from_cycles(degree, &cycles)
        })
        .collect::<Result<_, _>>()?;
    Ok(Group::from_permutations(degree, &perms)?)
}

/// The group `D_{N,K}`: pairs `(s, u)` of `K = GF(q^2)` with
/// `u + u^q = -N s s^q` under `(s,u)*(t,v) = (s+t, u+v-N s^q t)`.
#[derive(Clone, Debug)]
pub struct DDomain {
    field: FiniteField,
    q: u64,
    n_residue: u64,
    /// `t -> t^q` as a lookup table.
    frob: Vec<FieldElement>,
    pairs: Vec<(FieldElement, FieldElement)>,
    group: Group,
}

/// A failed axiom of `D_{N,K}`, with the offending elements as indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    NotClosed(usize, usize),
    Identity(usize),
    Inverse(usize),
    Associativity(usize, usize, usize),
}

impl DDomain {
    /// `q = p^e`; only `N mod p` matters and that residue is what is stored.
    pub fn new(p: u64, e: u32, n: i64) -> Result<Self, ConstructionError> {
        Self::with_cap(p, e, n, DEFAULT_ELEMENT_CAP)
    }

    pub fn with_cap(p: u64, e: u32, n: i64, cap: usize) -> Result<Self, ConstructionError> {
        let field = FiniteField::new(p, 2 * e)?;
        let q = p.pow(e);
        let expected = (q as u128).pow(3);
        if expected > cap as u128 {
            return Err(ConstructionError::CapExceeded { order: expected, cap });
        }
        let n_residue = n.rem_euclid(p as i64) as u64;
        let size = field.order() as usize;
        let mut pairs = Vec::new();
        let mut index = vec![usize::MAX; size * size];
        let nf = field.from_int(n_residue as i64);
        for s in field.elements() {
            let rhs = field.neg(field.mul(nf, field.mul(s, field.pow(s, q))));
            for u in field.elements() {
                if field.add(u, field.pow(u, q)) == rhs {
                    index[s.index() as usize * size + u.index() as usize] = pairs.len();
                    pairs.push((s, u));
                }
            }
        }
        let frob = field.elements().map(|t| field.pow(t, q)).collect();
        let mut d = DDomain {
            field,
            q,
            n_residue,
            frob,
            pairs,
            group: Group::trivial(),
        };
        let m = d.pairs.len();
        let mut rows = Vec::with_capacity(m);
        for a in 0..m {
            let mut row = Vec::with_capacity(m);
            for b in 0..m {
                let (s, u) = d.op(d.pairs[a], d.pairs[b]);
                let k = index[s.index() as usize * size + u.index() as usize];
                if k == usize::MAX {
                    return Err(ConstructionError::NotClosed(format!(
                        "element {a} * element {b} leaves the set"
                    )));
                }
                row.push(k);
            }
            rows.push(row);
        }
        d.group = Group::from_cayley_table(&rows)?;
        Ok(d)
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    /// The subfield order `q`.
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n_residue(&self) -> u64 {
        self.n_residue
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn pairs(&self) -> &[(FieldElement, FieldElement)] {
        &self.pairs
    }

    pub fn pair(&self, index: usize) -> (FieldElement, FieldElement) {
        self.pairs[index]
    }

    pub fn index_of(&self, pair: (FieldElement, FieldElement)) -> Option<usize> {
        self.pairs.iter().position(|&x| x == pair)
    }

    pub fn contains(&self, (s, u): (FieldElement, FieldElement)) -> bool {
        let f = &self.field;
        let nf = f.from_int(self.n_residue as i64);
        f.add(u, self.q_power(u)) == f.neg(f.mul(nf, f.mul(s, self.q_power(s))))
    }

    fn q_power(&self, t: FieldElement) -> FieldElement {
        self.frob[t.index() as usize]
    }

    /// `(s,u)*(t,v) = (s+t, u+v-N s^q t)`, on raw pairs.
    pub fn op(
        &self,
        (s, u): (FieldElement, FieldElement),
        (t, v): (FieldElement, FieldElement),
    ) -> (FieldElement, FieldElement) {
        let f = &self.field;
        let nf = f.from_int(self.n_residue as i64);
        let cross = f.mul(nf, f.mul(self.q_power(s), t));
        (f.add(s, t), f.sub(f.add(u, v), cross))
    }

    /// `(s, u) -> (-s, u^q)`.
    pub fn inverse_pair(&self, (s, u): (FieldElement, FieldElement)) -> (FieldElement, FieldElement) {
        (self.field.neg(s), self.q_power(u))
    }

    /// Checks closure, the neutral element, two-sided inverses and
    /// associativity on every triple, using field arithmetic directly rather
    /// than the Cayley table. Costs `q^9` operations.
    pub fn check_axioms(&self) -> Result<(), AxiomViolation> {
        let zero = (self.field.zero(), self.field.zero());
        let pairs = &self.pairs;
        // rows are independent; the first failing row gives the witness
        let failure = (0..pairs.len()).into_par_iter().find_map_first(|a| {
            let x = pairs[a];
            if self.op(zero, x) != x || self.op(x, zero) != x {
                return Some(AxiomViolation::Identity(a));
            }
            let inv = self.inverse_pair(x);
            if !self.contains(inv) || self.op(x, inv) != zero || self.op(inv, x) != zero {
                return Some(AxiomViolation::Inverse(a));
            }
            for (b, &y) in pairs.iter().enumerate() {
                let xy = self.op(x, y);
                if !self.contains(xy) {
                    return Some(AxiomViolation::NotClosed(a, b));
                }
                for (c, &z) in pairs.iter().enumerate() {
                    if self.op(xy, z) != self.op(x, self.op(y, z)) {
                        return Some(AxiomViolation::Associativity(a, b, c));
                    }
                }
            }
            None
        });
        failure.map_or(Ok(()), Err)
    }

    /// For each `s` in `K`, one partner `u` with `(s, u)` in the group, or
    /// the first `s` that has none.
    pub fn projection_witnesses(&self) -> Result<Vec<(FieldElement, FieldElement)>, FieldElement> {
        self.field
            .elements()
            .map(|s| {
                self.pairs
                    .iter()
                    .find(|p| p.0 == s)
                    .copied()
                    .ok_or(s)
            })
            .collect()
    }

    pub fn projection_surjective(&self) -> bool {
        self.projection_witnesses().is_ok()
    }

    /// Number of `u` partnering each `s`, in field order.
    pub fn fibre_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.field.order() as usize];
        for p in &self.pairs {
            sizes[p.0.index() as usize] += 1;
        }
        sizes
    }

    /// Whether `(s, u) -> (s^p, u^p)` maps the set into itself.
    pub fn frobenius_stable(&self) -> bool {
        self.pairs.iter().all(|&(s, u)| {
            self.contains((self.field.frobenius_apply(s, 1), self.field.frobenius_apply(u, 1)))
        })
    }

    /// Coordinatewise `t -> t^(p^k)`.
    pub fn frobenius(&self, k: u32) -> Result<Automorphism, ConstructionError> {
        let images = self
            .pairs
            .iter()
            .map(|&(s, u)| {
                let image = (
                    self.field.frobenius_apply(s, k),
                    self.field.frobenius_apply(u, k),
                );
                self.index_of(image).ok_or(ConstructionError::NotFrobeniusStable)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Automorphism::from_images(&self.group, images)?)
    }
}

/// `PSL(2, q)` acting on the projective line; points `0..q` are field
/// elements by index and point `q` is infinity.
#[derive(Clone, Debug)]
pub struct Psl2 {
    field: FiniteField,
    group: Group,
}

impl Psl2 {
    pub fn new(q: u64) -> Result<Self, ConstructionError> {
        Self::with_cap(q, DEFAULT_ELEMENT_CAP)
    }

    pub fn with_cap(q: u64, cap: usize) -> Result<Self, ConstructionError> {
        let (p, e) = arith::prime_power(q).ok_or(ConstructionError::NotPrimePower(q))?;
        let expected = Self::order_formula(q);
        if expected as u128 > cap as u128 {
            return Err(ConstructionError::CapExceeded {
                order: expected as u128,
                cap,
            });
        }
        let field = FiniteField::new(p, e)?;
        let inf = q as usize;
        let degree = inf + 1;
        let point = |t: FieldElement| t.index() as usize;
        let mobius = |f: &dyn Fn(FieldElement) -> Option<FieldElement>, at_inf: usize| {
            let mut img: Vec<usize> = field.elements().map(|t| f(t).map_or(inf, point)).collect();
            img.push(at_inf);
            Permutation::from_images(img)
        };
        let mut gens = Vec::new();
        for i in 0..e {
            let b = field.omega_pow(i as i64);
            gens.push(mobius(&|t| Some(field.add(t, b)), inf)?);
        }
        let w2 = field.omega_pow(2);
        gens.push(mobius(&|t| Some(field.mul(w2, t)), inf)?);
        let minus_one = field.neg(field.one());
        gens.push(mobius(&|t| field.div(minus_one, t), 0)?);
        let group = Group::from_permutations_capped(degree, &gens, cap)?;
        if group.order() as u64 != expected {
            return Err(ConstructionError::OrderMismatch {
                expected,
                found: group.order(),
            });
        }
        Ok(Psl2 { field, group })
    }

    /// `q (q^2 - 1) / gcd(2, q - 1)`.
    pub fn order_formula(q: u64) -> u64 {
        q * (q * q - 1) / arith::gcd(2, q - 1)
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    /// The point permutation `t -> t^(p^k)`, infinity fixed.
    pub fn frobenius_points(&self, k: u32) -> Vec<u16> {
        let mut pts: Vec<u16> = self
            .field
            .elements()
            .map(|t| self.field.frobenius_apply(t, k).index() as u16)
            .collect();
        pts.push(self.field.order() as u16);
        pts
    }

    /// Conjugation by the point Frobenius, `g -> F^-1 g F` in left-to-right
    /// composition.
    pub fn frobenius_action(&self, k: u32) -> Result<Automorphism, ConstructionError> {
        let f = self.frobenius_points(k);
        Ok(conjugation_by_points(&self.group, &f)?)
    }
}

/// Automorphism induced by conjugating with a point permutation normalising
/// the group: the image of `g` sends `f(x)` to `f(g(x))`.
fn conjugation_by_points(group: &Group, f: &[u16]) -> Result<Automorphism, AutomorphismError> {
    let images = group
        .elements()
        .map(|a| {
            let g = group.raw_perm(a).expect("permutation group");
            let mut img = vec![0u16; g.len()];
            for x in 0..g.len() {
                img[f[x] as usize] = f[g[x] as usize];
            }
            group
                .index_of_raw(&img)
                .ok_or_else(|| AutomorphismError::Parse("point map does not normalise the group".into()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Automorphism::from_images(group, images)
}

/// `S^n` with `(g_1, ..., g_n) -> (g_n, g_1, ..., g_{n-1})`. For `n = 1`
/// this is `S` itself with the identity.
pub fn shift_power(s: &Group, n: usize) -> Result<(Group, Automorphism), ConstructionError> {
    shift_power_capped(s, n, DEFAULT_ELEMENT_CAP)
}

pub fn shift_power_capped(
    s: &Group,
    n: usize,
    cap: usize,
) -> Result<(Group, Automorphism), ConstructionError> {
    match n {
        0 => Err(ConstructionError::ZeroPower),
        1 => Ok((s.clone(), Automorphism::identity(s))),
        _ => {
            let factors = vec![s.clone(); n];
            let (g, _) = direct_product_capped(&factors, cap)?;
            let degree = g.degree().expect("direct products are permutation groups");
            let block = degree / n;
            // block i moves to block i + 1
            let shift: Vec<u16> = (0..degree).map(|x| ((x + block) % degree) as u16).collect();
            let phi = conjugation_by_points(&g, &shift)?;
            Ok((g, phi))
        }
    }
}

/// `(Z/p)^d` with the companion matrix of `f mod p` acting on column vectors.
/// A unit leading coefficient is normalised away; the map then satisfies `f`
/// as an ordered identity because `f(C) = 0`.
#[derive(Clone, Debug)]
pub struct CompanionAction {
    pub p: u64,
    pub dimension: usize,
    pub group: Group,
    pub automorphism: Automorphism,
}

pub fn companion_action(p: u64, f: &IntPolynomial) -> Result<CompanionAction, ConstructionError> {
    companion_action_capped(p, f, DEFAULT_ELEMENT_CAP)
}

pub fn companion_action_capped(
    p: u64,
    f: &IntPolynomial,
    cap: usize,
) -> Result<CompanionAction, ConstructionError> {
    if !arith::is_prime(p) {
        return Err(ConstructionError::Field(FieldError::NotPrime(p)));
    }
    let mut r = f.residues(p);
    while r.last() == Some(&0) {
        r.pop();
    }
    let d = r.len().checked_sub(1).filter(|&d| d >= 1).ok_or(ConstructionError::ConstantModP(p))?;
    if r[0] == 0 {
        return Err(ConstructionError::ZeroConstantTerm(p));
    }
    let lead_inv = arith::pow_mod(r[d], p - 2, p);
    let monic: Vec<u64> = r.iter().map(|&c| c * lead_inv % p).collect();
    let order = (p as u128).pow(d as u32);
    if order > cap as u128 {
        return Err(ConstructionError::CapExceeded { order, cap });
    }
    let cp = stock(&format!("C{p}"))?;
    let (group, _) = direct_product_capped(&vec![cp; d], cap)?;
    let pu = p as usize;
    let decode = |a: usize| -> Vec<u64> {
        let perm = group.raw_perm(a).expect("permutation group");
        (0..d).map(|i| (perm[i * pu] as usize - i * pu) as u64).collect()
    };
    let encode = |v: &[u64]| -> usize {
        let mut img = Vec::with_capacity(d * pu);
        for (i, &vi) in v.iter().enumerate() {
            img.extend((0..pu).map(|x| (i * pu + (x + vi as usize) % pu) as u16));
        }
        group.index_of_raw(&img).expect("every vector is in (Z/p)^d")
    };
    // C e_j = e_{j+1}, C e_{d-1} = -sum c_i e_i
    let images = group
        .elements()
        .map(|a| {
            let v = decode(a);
            let top = v[d - 1];
            let w: Vec<u64> = (0..d)
                .map(|i| {
                    let shifted = if i == 0 { 0 } else { v[i - 1] };
                    (shifted + (p - monic[i]) * top) % p
                })
                .collect();
            encode(&w)
        })
        .collect();
    let automorphism = Automorphism::from_images(&group, images)?;
    Ok(CompanionAction {
        p,
        dimension: d,
        group,
        automorphism,
    })
}

/// `f` as an integer polynomial for convenience in tests and examples.
pub fn poly(coeffs: &[i64]) -> IntPolynomial {
    IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}
