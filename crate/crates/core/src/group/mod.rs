//! Finite groups with full element enumeration.
//!
//! Every group is enumerated up front and its elements are addressed by
//! `usize` indices. Two backends exist: permutation groups (elements stored
//! as point images, products looked up by hashing) and Cayley tables (used
//! for quotients and the `D_{N,K}` construction).

mod closure;
pub mod io;
mod perm;
mod quotient;
mod series;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

pub use closure::{conjugacy_classes, normal_closure, normal_closure_in, subgroup_generated};
pub use perm::Permutation;
pub use quotient::Quotient;
pub use series::{
    commutator_subgroup, derived_series, derived_subgroup, is_nilpotent, is_soluble,
    lower_central_series,
};

use crate::arith;

/// Default bound on the number of enumerated elements.
pub const DEFAULT_ELEMENT_CAP: usize = 100_000;

/// Permutation groups up to this order also cache a full multiplication table.
const PERM_TABLE_LIMIT: usize = 2048;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("not a bijection: {0}")]
    NotBijective(String),
    #[error("point {point} outside 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("permutation degree {0} too large")]
    DegreeTooLarge(usize),
    #[error("generator has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group order exceeds the element cap {cap}")]
    CapExceeded { cap: usize },
    #[error("malformed Cayley table: {0}")]
    MalformedTable(String),
    #[error("Cayley table has no two-sided identity")]
    NoIdentity,
    #[error("Cayley table is not a Latin square (row/column {0})")]
    NotLatin(usize),
    #[error("Cayley table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("subgroup is not normal: {g} * {n} * {g}^-1 leaves it")]
    NotNormal { g: usize, n: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

enum Backend {
    Perm {
        degree: usize,
        points: Vec<u16>,
        lookup: HashMap<Box<[u16]>, u32>,
        table: Option<Vec<u32>>,
    },
    Cayley {
        table: Vec<u32>,
    },
}

struct GroupData {
    order: usize,
    identity: usize,
    backend: Backend,
    inverse: Vec<u32>,
    generators: Vec<usize>,
    exponent: OnceLock<u64>,
    element_orders: OnceLock<Vec<u32>>,
}

/// A finite group; cloning is cheap and shares the enumeration.
#[derive(Clone)]
pub struct Group {
    inner: Arc<GroupData>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &self.inner.backend {
            Backend::Perm { degree, .. } => format!("perm(degree {degree})"),
            Backend::Cayley { .. } => "cayley".to_string(),
        };
        write!(f, "Group(order {}, {kind})", self.order())
    }
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }
}

impl Group {
    pub fn trivial() -> Group {
        Group::from_table_unchecked(1, vec![0], 0)
    }

    /// Enumerates the permutation group generated by `generators`.
    pub fn from_permutations(degree: usize, generators: &[Permutation]) -> Result<Group, GroupError> {
        Self::from_permutations_capped(degree, generators, DEFAULT_ELEMENT_CAP)
    }

    pub fn from_permutations_capped(
        degree: usize,
        generators: &[Permutation],
        cap: usize,
    ) -> Result<Group, GroupError> {
        if degree > u16::MAX as usize {
            return Err(GroupError::DegreeTooLarge(degree));
        }
        for g in generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let id = Permutation::identity(degree).into_inner();
        let gens: Vec<Vec<u16>> = generators
            .iter()
            .map(|g| g.images().to_vec())
            .filter(|g| *g != id)
            .collect();
        let mut points: Vec<u16> = id.clone();
        let mut lookup: HashMap<Box<[u16]>, u32> = HashMap::new();
        lookup.insert(id.into_boxed_slice(), 0);
        let mut gen_idx = vec![None; gens.len()];
        let mut head = 0usize;
        // breadth-first closure under right multiplication
        while head < lookup.len() {
            for (k, g) in gens.iter().enumerate() {
                let base = &points[head * degree..(head + 1) * degree];
                let prod: Vec<u16> = base.iter().map(|&i| g[i as usize]).collect();
                let next = lookup.len();
                let idx = *lookup.entry(prod.clone().into_boxed_slice()).or_insert_with(|| {
                    points.extend_from_slice(&prod);
                    next as u32
                });
                if head == 0 {
                    gen_idx[k] = Some(idx as usize);
                }
                if lookup.len() > cap {
                    return Err(GroupError::CapExceeded { cap });
                }
            }
            head += 1;
        }
        let mut generators: Vec<usize> = Vec::new();
        for g in gen_idx.into_iter().flatten() {
            if !generators.contains(&g) {
                generators.push(g);
            }
        }
        Ok(Self::from_perm_parts(degree, points, lookup, generators))
    }

    fn from_perm_parts(
        degree: usize,
        points: Vec<u16>,
        lookup: HashMap<Box<[u16]>, u32>,
        generators: Vec<usize>,
    ) -> Group {
        let order = lookup.len();
        let mut inverse = vec![0u32; order];
        for i in 0..order {
            let p = &points[i * degree..(i + 1) * degree];
            let mut inv = vec![0u16; degree];
            for (a, &b) in p.iter().enumerate() {
                inv[b as usize] = a as u16;
            }
            inverse[i] = lookup[inv.as_slice()];
        }
        let mut backend = Backend::Perm {
            degree,
            points,
            lookup,
            table: None,
        };
        if order <= PERM_TABLE_LIMIT {
            let mut table = vec![0u32; order * order];
            for a in 0..order {
                for b in 0..order {
                    table[a * order + b] = perm_mul(&backend, a, b) as u32;
                }
            }
            if let Backend::Perm { table: t, .. } = &mut backend {
                *t = Some(table);
            }
        }
        Group {
            inner: Arc::new(GroupData {
                order,
                identity: 0,
                backend,
                inverse,
                generators,
                exponent: OnceLock::new(),
                element_orders: OnceLock::new(),
            }),
        }
    }

    /// Permutation group on an explicit, already closed element list.
    pub(crate) fn from_perm_elements(degree: usize, perms: Vec<Vec<u16>>) -> Group {
        let id: Vec<u16> = (0..degree as u16).collect();
        let mut ordered = Vec::with_capacity(perms.len());
        ordered.push(id.clone());
        ordered.extend(perms.into_iter().filter(|p| *p != id));
        let mut lookup = HashMap::with_capacity(ordered.len());
        let mut points = Vec::with_capacity(ordered.len() * degree);
        for (i, p) in ordered.into_iter().enumerate() {
            points.extend_from_slice(&p);
            lookup.insert(p.into_boxed_slice(), i as u32);
        }
        let g = Self::from_perm_parts(degree, points, lookup, Vec::new());
        g.with_greedy_generators()
    }

    /// Validates a 0-based Cayley table and builds the group.
    pub fn from_cayley_table(rows: &[Vec<usize>]) -> Result<Group, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::MalformedTable("empty table".into()));
        }
        if n > DEFAULT_ELEMENT_CAP {
            return Err(GroupError::CapExceeded {
                cap: DEFAULT_ELEMENT_CAP,
            });
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::MalformedTable(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= n {
                    return Err(GroupError::MalformedTable(format!("entry {x} out of range")));
                }
                table.push(x as u32);
            }
        }
        let at = |a: usize, b: usize| table[a * n + b] as usize;
        for i in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for j in 0..n {
                if std::mem::replace(&mut row_seen[at(i, j)], true)
                    || std::mem::replace(&mut col_seen[at(j, i)], true)
                {
                    return Err(GroupError::NotLatin(i));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or(GroupError::NoIdentity)?;
        let group = Self::from_table_unchecked(n, table, identity);
        // Light's test: associativity against a generating set suffices
        for &s in group.generators() {
            for a in 0..n {
                for b in 0..n {
                    if group.mul(group.mul(a, b), s) != group.mul(a, group.mul(b, s)) {
                        return Err(GroupError::NotAssociative { a, b, c: s });
                    }
                }
            }
        }
        Ok(group)
    }

    /// Cayley-backed group from a trusted table; generators chosen greedily.
    pub(crate) fn from_table_unchecked(n: usize, table: Vec<u32>, identity: usize) -> Group {
        let mut inverse = vec![0u32; n];
        for a in 0..n {
            let row = &table[a * n..(a + 1) * n];
            let b = row.iter().position(|&x| x as usize == identity).unwrap_or(0);
            inverse[a] = b as u32;
        }
        let g = Group {
            inner: Arc::new(GroupData {
                order: n,
                identity,
                backend: Backend::Cayley { table },
                inverse,
                generators: Vec::new(),
                exponent: OnceLock::new(),
                element_orders: OnceLock::new(),
            }),
        };
        g.with_greedy_generators()
    }

    fn with_greedy_generators(self) -> Group {
        let gens = closure::greedy_generators(&self);
        let mut data = Arc::try_unwrap(self.inner)
            .unwrap_or_else(|_| unreachable!("freshly built group is uniquely owned"));
        data.generators = gens;
        Group {
            inner: Arc::new(data),
        }
    }

    pub fn order(&self) -> usize {
        self.inner.order
    }

    pub fn identity(&self) -> usize {
        self.inner.identity
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn generators(&self) -> &[usize] {
        &self.inner.generators
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.inner.backend {
            Backend::Cayley { table } => table[a * self.inner.order + b] as usize,
            backend @ Backend::Perm { table, .. } => match table {
                Some(t) => t[a * self.inner.order + b] as usize,
                None => perm_mul(backend, a, b),
            },
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inner.inverse[a] as usize
    }

    /// `a^k` for any integer `k`; negative powers invert first.
    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        self.pow_u(base, k.unsigned_abs())
    }

    pub(crate) fn pow_u(&self, a: usize, mut k: u64) -> usize {
        let ord = self.element_order(a) as u64;
        k %= ord;
        let mut acc = self.identity();
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `g * x * g^-1`.
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn element_orders(&self) -> &[u32] {
        self.inner.element_orders.get_or_init(|| {
            let id = self.identity();
            self.elements()
                .map(|a| {
                    let mut x = a;
                    let mut k = 1u32;
                    while x != id {
                        x = self.mul(x, a);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.element_orders()[a] as usize
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        *self.inner.exponent.get_or_init(|| {
            self.element_orders()
                .iter()
                .fold(1u64, |acc, &o| arith::lcm(acc, o as u64))
        })
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_permutation_group(&self) -> bool {
        matches!(self.inner.backend, Backend::Perm { .. })
    }

    /// Permutation degree, `None` for Cayley-backed groups.
    pub fn degree(&self) -> Option<usize> {
        match &self.inner.backend {
            Backend::Perm { degree, .. } => Some(*degree),
            Backend::Cayley { .. } => None,
        }
    }

    pub fn permutation(&self, a: usize) -> Option<Permutation> {
        match &self.inner.backend {
            Backend::Perm { degree, points, .. } => Some(Permutation::from_raw(
                points[a * degree..(a + 1) * degree].to_vec(),
            )),
            Backend::Cayley { .. } => None,
        }
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        match &self.inner.backend {
            Backend::Perm { degree, lookup, .. } if p.degree() == *degree => {
                lookup.get(p.images()).map(|&i| i as usize)
            }
            _ => None,
        }
    }

    pub(crate) fn index_of_raw(&self, images: &[u16]) -> Option<usize> {
        match &self.inner.backend {
            Backend::Perm { lookup, .. } => lookup.get(images).map(|&i| i as usize),
            Backend::Cayley { .. } => None,
        }
    }

    pub(crate) fn raw_perm(&self, a: usize) -> Option<&[u16]> {
        match &self.inner.backend {
            Backend::Perm { degree, points, .. } => Some(&points[a * degree..(a + 1) * degree]),
            Backend::Cayley { .. } => None,
        }
    }

    /// Human-readable label of an element: cycle notation or 1-based index.
    pub fn describe(&self, a: usize) -> String {
        match self.permutation(a) {
            Some(p) => p.to_string(),
            None => format!("#{}", a + 1),
        }
    }

    /// The whole group as a subgroup of itself.
    pub fn whole(&self) -> Subgroup {
        Subgroup::from_members(self, self.elements().collect(), self.generators().to_vec())
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_members(self, vec![self.identity()], Vec::new())
    }

    /// Regular permutation representation (right multiplication on indices).
    pub fn regular_permutations(&self) -> Vec<Permutation> {
        self.generators()
            .iter()
            .map(|&g| {
                Permutation::from_raw(self.elements().map(|x| self.mul(x, g) as u16).collect())
            })
            .collect()
    }

    /// Checks the exhaustive group axioms on the enumerated elements.
    /// Returns a witness triple on the first associativity failure.
    pub fn check_associativity(&self) -> Result<(), (usize, usize, usize)> {
        for a in self.elements() {
            for b in self.elements() {
                let ab = self.mul(a, b);
                for c in self.elements() {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err((a, b, c));
                    }
                }
            }
        }
        Ok(())
    }
}

fn perm_mul(backend: &Backend, a: usize, b: usize) -> usize {
    let Backend::Perm {
        degree,
        points,
        lookup,
        ..
    } = backend
    else {
        unreachable!()
    };
    let d = *degree;
    let pa = &points[a * d..(a + 1) * d];
    let pb = &points[b * d..(b + 1) * d];
    let prod: Vec<u16> = pa.iter().map(|&i| pb[i as usize]).collect();
    lookup[prod.as_slice()] as usize
}

/// A subgroup recorded by membership in its parent's index space.
#[derive(Clone)]
pub struct Subgroup {
    group: Group,
    members: Vec<usize>,
    mask: Vec<bool>,
    gens: Vec<usize>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {} of {})", self.order(), self.group.order())
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    /// `members` must be a subgroup; `gens` must generate it.
    pub(crate) fn from_members(group: &Group, mut members: Vec<usize>, gens: Vec<usize>) -> Subgroup {
        members.sort_unstable();
        members.dedup();
        let mut mask = vec![false; group.order()];
        for &m in &members {
            mask[m] = true;
        }
        Subgroup {
            group: group.clone(),
            members,
            mask,
            gens,
        }
    }

    pub(crate) fn from_mask(group: &Group, mask: Vec<bool>, gens: Vec<usize>) -> Subgroup {
        let members = mask
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
            .collect();
        Subgroup {
            group: group.clone(),
            members,
            mask,
            gens,
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.group.order() / self.order()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn contains(&self, g: usize) -> bool {
        self.mask[g]
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.group.order()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    /// Normality in the parent, with a witness `(g, n)` when it fails.
    pub fn normality_witness(&self) -> Option<(usize, usize)> {
        let g = &self.group;
        for &x in g.generators() {
            for &n in &self.gens {
                if !self.contains(g.conjugate(n, x)) {
                    return Some((x, n));
                }
            }
        }
        None
    }

    pub fn is_normal(&self) -> bool {
        self.normality_witness().is_none()
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let members: Vec<usize> = self
            .members
            .iter()
            .copied()
            .filter(|&m| other.contains(m))
            .collect();
        subgroup_generated(&self.group, &members)
    }

    /// The subgroup as a group in its own right, with `embedding[i]` the
    /// parent index of the new group's element `i`.
    pub fn to_group(&self) -> (Group, Vec<usize>) {
        let g = &self.group;
        match &g.inner.backend {
            Backend::Perm { .. } => {
                let perms: Vec<Vec<u16>> = self
                    .members
                    .iter()
                    .map(|&m| g.raw_perm(m).unwrap().to_vec())
                    .collect();
                let degree = g.degree().unwrap();
                let h = Group::from_perm_elements(degree, perms);
                let embedding = h
                    .elements()
                    .map(|i| g.index_of_raw(h.raw_perm(i).unwrap()).unwrap())
                    .collect();
                (h, embedding)
            }
            Backend::Cayley { .. } => {
                let n = self.order();
                let mut local = vec![usize::MAX; g.order()];
                for (i, &m) in self.members.iter().enumerate() {
                    local[m] = i;
                }
                let mut table = Vec::with_capacity(n * n);
                for &a in &self.members {
                    for &b in &self.members {
                        table.push(local[g.mul(a, b)] as u32);
                    }
                }
                let h = Group::from_table_unchecked(n, table, local[g.identity()]);
                (h, self.members.clone())
            }
        }
    }
}

/// Direct product of the factors, always with a permutation backend;
/// Cayley factors enter through their regular representation. Returns the
/// product and, for each factor, the injection of its element indices.
/// Images of one factor's element on that factor's block of points.
type PointMap<'a> = Box<dyn Fn(usize) -> Vec<u16> + 'a>;

pub fn direct_product(factors: &[Group]) -> Result<(Group, Vec<Vec<usize>>), GroupError> {
    direct_product_capped(factors, DEFAULT_ELEMENT_CAP)
}

pub fn direct_product_capped(
    factors: &[Group],
    cap: usize,
) -> Result<(Group, Vec<Vec<usize>>), GroupError> {
    factors
        .iter()
        .try_fold(1usize, |acc, f| acc.checked_mul(f.order()))
        .filter(|&t| t <= cap)
        .ok_or(GroupError::CapExceeded { cap })?;
    // each factor as a permutation group on its own block of points
    let mut blocks: Vec<(usize, PointMap<'_>)> = Vec::new();
    for f in factors {
        if let Some(d) = f.degree() {
            blocks.push((d, Box::new(move |a| f.raw_perm(a).unwrap().to_vec())));
        } else {
            let n = f.order();
            blocks.push((
                n,
                Box::new(move |a| (0..n).map(|x| f.mul(x, a) as u16).collect()),
            ));
        }
    }
    let degree: usize = blocks.iter().map(|b| b.0).sum();
    let mut gens = Vec::new();
    let mut offset = 0;
    for (f, (d, rep)) in factors.iter().zip(&blocks) {
        for &g in f.generators() {
            let mut img: Vec<u16> = (0..degree as u16).collect();
            for (i, &x) in rep(g).iter().enumerate() {
                img[offset + i] = (offset as u16) + x;
            }
            gens.push(Permutation::from_raw(img));
        }
        offset += d;
    }
    let product = Group::from_permutations_capped(degree, &gens, cap)?;
    let mut injections = Vec::new();
    let mut offset = 0;
    for (f, (d, rep)) in factors.iter().zip(&blocks) {
        let inj = f
            .elements()
            .map(|a| {
                let mut img: Vec<u16> = (0..degree as u16).collect();
                for (i, &x) in rep(a).iter().enumerate() {
                    img[offset + i] = (offset as u16) + x;
                }
                product.index_of_raw(&img).expect("factor element lies in the product")
            })
            .collect();
        injections.push(inj);
        offset += d;
    }
    Ok((product, injections))
}
