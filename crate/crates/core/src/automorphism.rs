//! Automorphisms of enumerated groups and the identities they satisfy.

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;
use thiserror::Error;

use crate::arith;
use crate::group::{Group, GroupError, Permutation, Quotient, Subgroup};
use crate::poly::{IntPolynomial, UnorderedIdentity};
use crate::structure::{self, StructureError};

/// Identity checks switch to a parallel scan above this group order.
const PARALLEL_THRESHOLD: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AutomorphismError {
    #[error("image list has length {found}, group has order {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("image {0} is out of range")]
    OutOfRange(usize),
    #[error("map is not injective: two elements map to {0}")]
    NotBijective(usize),
    #[error("map is not a homomorphism: phi({g}*{s}) != phi({g})*phi({s})")]
    NotHomomorphism { g: usize, s: usize },
    #[error("generator images do not extend to a homomorphism (conflict at element {0})")]
    DoesNotExtend(usize),
    #[error("the given generators only generate {generated} of {order} elements")]
    NotGenerating { generated: usize, order: usize },
    #[error("automorphisms belong to different groups")]
    DifferentGroups,
    #[error("subgroup is not invariant: phi({0}) leaves it")]
    NotInvariant(usize),
    #[error("{q} does not divide the group order {order}")]
    PrimeNotDividing { q: u64, order: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("parse error: {0}")]
    Parse(String),
}

/// A validated automorphism, stored as the full image table.
#[derive(Clone, Debug, PartialEq)]
pub struct Automorphism {
    group: Group,
    images: Vec<usize>,
}

impl Automorphism {
    pub fn identity(group: &Group) -> Self {
        Automorphism {
            group: group.clone(),
            images: group.elements().collect(),
        }
    }

    /// Validates bijectivity and `phi(g s) = phi(g) phi(s)` for every `g` and
    /// every generator `s`, which forces the homomorphism property on all
    /// pairs by induction on word length.
    pub fn from_images(group: &Group, images: Vec<usize>) -> Result<Self, AutomorphismError> {
        let n = group.order();
        if images.len() != n {
            return Err(AutomorphismError::WrongLength {
                expected: n,
                found: images.len(),
            });
        }
        let mut seen = vec![false; n];
        for &y in &images {
            if y >= n {
                return Err(AutomorphismError::OutOfRange(y));
            }
            if std::mem::replace(&mut seen[y], true) {
                return Err(AutomorphismError::NotBijective(y));
            }
        }
        for g in group.elements() {
            for &s in group.generators() {
                if images[group.mul(g, s)] != group.mul(images[g], images[s]) {
                    return Err(AutomorphismError::NotHomomorphism { g, s });
                }
            }
        }
        Ok(Automorphism {
            group: group.clone(),
            images,
        })
    }

    /// Extends `generator -> image` pairs by closure.
    pub fn from_generator_map(
        group: &Group,
        pairs: &[(usize, usize)],
    ) -> Result<Self, AutomorphismError> {
        let n = group.order();
        if let Some(&(_, y)) = pairs.iter().find(|p| p.0 >= n || p.1 >= n) {
            return Err(AutomorphismError::OutOfRange(y));
        }
        let mut images = vec![usize::MAX; n];
        images[group.identity()] = group.identity();
        let mut queue = vec![group.identity()];
        let mut reached = 1;
        while let Some(x) = queue.pop() {
            for &(s, t) in pairs {
                let y = group.mul(x, s);
                let img = group.mul(images[x], t);
                if images[y] == usize::MAX {
                    images[y] = img;
                    reached += 1;
                    queue.push(y);
                } else if images[y] != img {
                    return Err(AutomorphismError::DoesNotExtend(y));
                }
            }
        }
        if reached < n {
            return Err(AutomorphismError::NotGenerating {
                generated: reached,
                order: n,
            });
        }
        Self::from_images(group, images)
    }

    /// Reads `g -> image` pairs in the group's own element syntax.
    pub fn from_permutation_map(
        group: &Group,
        pairs: &[(Permutation, Permutation)],
    ) -> Result<Self, AutomorphismError> {
        let lookup = |p: &Permutation| {
            group
                .index_of(p)
                .ok_or_else(|| AutomorphismError::Parse(format!("{p} is not in the group")))
        };
        let idx: Vec<(usize, usize)> = pairs
            .iter()
            .map(|(a, b)| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<_, AutomorphismError>>()?;
        Self::from_generator_map(group, &idx)
    }

    /// `g -> x g x^-1`.
    pub fn inner(group: &Group, x: usize) -> Self {
        Automorphism {
            group: group.clone(),
            images: group.elements().map(|g| group.conjugate(g, x)).collect(),
        }
    }

    /// `g -> g^k`, an automorphism exactly when the group is abelian and
    /// `k` is a unit modulo the exponent.
    pub fn power_map(group: &Group, k: i64) -> Result<Self, AutomorphismError> {
        let images = group.elements().map(|g| group.pow(g, k)).collect();
        Self::from_images(group, images)
    }

    pub(crate) fn from_images_unchecked(group: &Group, images: Vec<usize>) -> Self {
        debug_assert_eq!(images.len(), group.order());
        Automorphism {
            group: group.clone(),
            images,
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, g: usize) -> usize {
        self.images[g]
    }

    /// `self o other`, i.e. `g -> self(other(g))`.
    pub fn compose(&self, other: &Automorphism) -> Result<Self, AutomorphismError> {
        if self.group != other.group {
            return Err(AutomorphismError::DifferentGroups);
        }
        let images = other.images.iter().map(|&y| self.images[y]).collect();
        Ok(Self::from_images_unchecked(&self.group, images))
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (g, &y) in self.images.iter().enumerate() {
            images[y] = g;
        }
        Self::from_images_unchecked(&self.group, images)
    }

    pub fn power(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Automorphism::identity(&self.group);
        for _ in 0..k.unsigned_abs() % self.order() {
            acc = base.compose(&acc).expect("same group");
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(g, &y)| g == y)
    }

    /// Least `n >= 1` with `phi^n = 1`, the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.images.len()];
        let mut order = 1u64;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            order = arith::lcm(order, len);
        }
        order
    }

    pub fn fixed_points(&self) -> Subgroup {
        let fixed: Vec<usize> = self
            .group
            .elements()
            .filter(|&g| self.images[g] == g)
            .collect();
        crate::group::subgroup_generated(&self.group, &fixed)
    }

    /// `m = |C_G(phi)|`.
    pub fn fixed_point_count(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(g, &y)| g == y)
            .count()
    }

    pub fn is_coprime(&self) -> bool {
        arith::gcd(self.group.order() as u64, self.order()) == 1
    }

    /// Returns the least element violating the identity, if any.
    pub fn ordered_identity_witness(&self, f: &IntPolynomial) -> Option<usize> {
        let exps = self.reduced(f.coeffs().iter());
        self.first_violation(|g| {
            let mut acc = self.group.identity();
            let mut x = g;
            for (i, &a) in exps.iter().enumerate() {
                if i > 0 {
                    x = self.images[x];
                }
                acc = self.group.mul(acc, self.group.pow_u(x, a));
            }
            acc
        })
    }

    pub fn satisfies_ordered(&self, f: &IntPolynomial) -> bool {
        self.ordered_identity_witness(f).is_none()
    }

    pub fn unordered_identity_witness(&self, u: &UnorderedIdentity) -> Option<usize> {
        let exps = self.reduced(u.terms().iter().map(|t| &t.1));
        let top = u.max_exponent();
        self.first_violation(|g| {
            let mut orbit = Vec::with_capacity(top + 1);
            let mut x = g;
            for _ in 0..=top {
                orbit.push(x);
                x = self.images[x];
            }
            u.terms()
                .iter()
                .zip(&exps)
                .fold(self.group.identity(), |acc, ((m, _), &b)| {
                    self.group.mul(acc, self.group.pow_u(orbit[*m], b))
                })
        })
    }

    pub fn satisfies_unordered(&self, u: &UnorderedIdentity) -> bool {
        self.unordered_identity_witness(u).is_none()
    }

    /// Coefficients as nonnegative residues modulo the group exponent.
    fn reduced<'a>(&self, coeffs: impl Iterator<Item = &'a BigInt>) -> Vec<u64> {
        let exp = BigInt::from(self.group.exponent());
        coeffs
            .map(|c| u64::try_from(c.mod_floor(&exp)).expect("residue fits"))
            .collect()
    }

    fn first_violation(&self, word: impl Fn(usize) -> usize + Sync) -> Option<usize> {
        let id = self.group.identity();
        if self.group.order() >= PARALLEL_THRESHOLD {
            self.group
                .elements()
                .into_par_iter()
                .find_first(|&g| word(g) != id)
        } else {
            self.group.elements().find(|&g| word(g) != id)
        }
    }

    /// `gamma o self o gamma^-1`.
    pub fn conjugate(&self, gamma: &Automorphism) -> Result<Self, AutomorphismError> {
        gamma.compose(self)?.compose(&gamma.inverse())
    }

    /// Restriction to an invariant subgroup, as an automorphism of the
    /// subgroup in its own right. Also returns the embedding.
    pub fn restrict(
        &self,
        h: &Subgroup,
    ) -> Result<(Automorphism, Vec<usize>), AutomorphismError> {
        self.check_invariant(h)?;
        let (hg, embedding) = h.to_group();
        let mut local = vec![usize::MAX; self.group.order()];
        for (i, &g) in embedding.iter().enumerate() {
            local[g] = i;
        }
        let images = embedding.iter().map(|&g| local[self.images[g]]).collect();
        Ok((Automorphism::from_images(&hg, images)?, embedding))
    }

    fn check_invariant(&self, h: &Subgroup) -> Result<(), AutomorphismError> {
        if h.group() != &self.group {
            return Err(AutomorphismError::DifferentGroups);
        }
        match h.members().iter().find(|&&x| !h.contains(self.images[x])) {
            Some(&x) => Err(AutomorphismError::NotInvariant(x)),
            None => Ok(()),
        }
    }

    /// The automorphism induced on `G/N` for a normal invariant `N`.
    pub fn induce_on_quotient(
        &self,
        n: &Subgroup,
    ) -> Result<(Quotient, Automorphism), AutomorphismError> {
        self.check_invariant(n)?;
        let quotient = Quotient::new(&self.group, n)?;
        let images = quotient
            .group()
            .elements()
            .map(|c| quotient.project(self.images[quotient.representative(c)]))
            .collect();
        let induced = Automorphism::from_images(quotient.group(), images)?;
        Ok((quotient, induced))
    }
}

/// The section `H = Gbar / F(Gbar)` with `Gbar = G / O_{q',q}(G)`, with the
/// automorphism induced on it.
#[derive(Clone, Debug)]
pub struct SectionData {
    pub group: Group,
    pub automorphism: Automorphism,
    pub order: u64,
    pub composition_length: u32,
}

pub fn section_data(phi: &Automorphism, q: u64) -> Result<SectionData, AutomorphismError> {
    let g = phi.group();
    if !arith::is_prime(q) {
        return Err(StructureError::NotPrime(q).into());
    }
    if !(g.order() as u64).is_multiple_of(q) {
        return Err(AutomorphismError::PrimeNotDividing { q, order: g.order() });
    }
    let lower = structure::o_qprime_q(g, q)?;
    let (bar, phi_bar) = induce_unless_trivial(phi, &lower)?;
    let fit = structure::fitting_subgroup(&bar);
    let (h, phi_h) = induce_unless_trivial(&phi_bar, &fit)?;
    let order = phi_h.order();
    Ok(SectionData {
        group: h,
        automorphism: phi_h,
        order,
        composition_length: structure::composition_length(order),
    })
}

fn induce_unless_trivial(
    phi: &Automorphism,
    n: &Subgroup,
) -> Result<(Group, Automorphism), AutomorphismError> {
    if n.is_trivial() {
        return Ok((phi.group().clone(), phi.clone()));
    }
    let (quotient, induced) = phi.induce_on_quotient(n)?;
    Ok((quotient.group().clone(), induced))
}

/// The two forms an automorphism file can take.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutomorphismText {
    /// Element-to-element pairs, `g -> image` with 1-based element numbers for
    /// Cayley groups and permutations otherwise.
    Map(Vec<(String, String)>),
    /// A designated field automorphism of a constructed group.
    Frobenius(u32),
}

pub fn parse_automorphism_text(text: &str) -> Result<AutomorphismText, AutomorphismError> {
    let lines: Vec<&str> = text
        .lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .filter(|l| !l.is_empty())
        .collect();
    if let [single] = lines.as_slice() {
        let mut words = single.split_whitespace();
        if words.next() == Some("frobenius") {
            let k = words
                .next()
                .unwrap_or("1")
                .parse()
                .map_err(|_| AutomorphismError::Parse(format!("bad frobenius power in {single:?}")))?;
            return Ok(AutomorphismText::Frobenius(k));
        }
    }
    lines
        .iter()
        .map(|l| {
            let (a, b) = l
                .split_once("->")
                .ok_or_else(|| AutomorphismError::Parse(format!("expected 'g -> image', got {l:?}")))?;
            Ok((a.trim().to_string(), b.trim().to_string()))
        })
        .collect::<Result<_, _>>()
        .map(AutomorphismText::Map)
}

/// Resolves `g -> image` pairs against a group.
pub fn automorphism_from_map(
    group: &Group,
    pairs: &[(String, String)],
) -> Result<Automorphism, AutomorphismError> {
    let element = |s: &str| -> Result<usize, AutomorphismError> {
        match group.degree() {
            Some(d) => {
                let p = Permutation::parse(s, Some(d))?;
                group
                    .index_of(&p)
                    .ok_or_else(|| AutomorphismError::Parse(format!("{s} is not in the group")))
            }
            None => s
                .parse::<usize>()
                .ok()
                .filter(|&i| (1..=group.order()).contains(&i))
                .map(|i| i - 1)
                .ok_or_else(|| AutomorphismError::Parse(format!("bad element number {s:?}"))),
        }
    };
    let idx = pairs
        .iter()
        .map(|(a, b)| Ok((element(a)?, element(b)?)))
        .collect::<Result<Vec<_>, AutomorphismError>>()?;
    Automorphism::from_generator_map(group, &idx)
}
