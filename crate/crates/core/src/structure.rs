//! Soluble radical, Fitting subgroup and Fitting height, `O_{q'}` and `O_{q',q}`.
//!
//! The characteristic subgroups here are all of the form "largest normal
//! subgroup with property P" for a property inherited by normal subgroups
//! and by products of normal subgroups. Each one is the subgroup generated
//! by the elements whose normal closure has P. Normal closures depend only
//! on the conjugacy class, so one closure per class is enough.

use thiserror::Error;

use crate::arith;
use crate::group::{conjugacy_classes, normal_closure, subgroup_generated, Group, Quotient, Subgroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("group of order {0} is not soluble")]
    NotSoluble(usize),
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// Join of all normal closures `<g>^G` satisfying `pred`.
fn join_of_normal_closures(g: &Group, pred: impl Fn(&Subgroup) -> bool) -> Subgroup {
    let mut join = g.trivial_subgroup();
    for class in conjugacy_classes(g) {
        let rep = class[0];
        if join.contains(rep) {
            continue;
        }
        let n = normal_closure(g, &[rep]);
        if pred(&n) {
            let mut seeds = join.generators().to_vec();
            seeds.extend_from_slice(n.generators());
            join = subgroup_generated(g, &seeds);
        }
    }
    join
}

/// Largest normal nilpotent subgroup.
pub fn fitting_subgroup(g: &Group) -> Subgroup {
    join_of_normal_closures(g, Subgroup::is_nilpotent)
}

/// Largest normal soluble subgroup.
pub fn soluble_radical(g: &Group) -> Subgroup {
    join_of_normal_closures(g, Subgroup::is_soluble)
}

/// Largest normal subgroup of order coprime to `q`.
pub fn o_qprime(g: &Group, q: u64) -> Result<Subgroup, StructureError> {
    check_prime(q)?;
    Ok(join_of_normal_closures(g, |n| !(n.order() as u64).is_multiple_of(q)))
}

/// Largest normal `q`-subgroup.
pub fn o_q(g: &Group, q: u64) -> Result<Subgroup, StructureError> {
    check_prime(q)?;
    Ok(join_of_normal_closures(g, |n| is_power_of(n.order() as u64, q)))
}

/// Preimage of `O_q(G / O_{q'}(G))`.
pub fn o_qprime_q(g: &Group, q: u64) -> Result<Subgroup, StructureError> {
    let lower = o_qprime(g, q)?;
    if lower.is_trivial() {
        return o_q(g, q);
    }
    let quotient = Quotient::new(g, &lower).expect("O_q' is normal");
    let top = o_q(quotient.group(), q)?;
    Ok(quotient.preimage(&top))
}

fn check_prime(q: u64) -> Result<(), StructureError> {
    if arith::is_prime(q) {
        Ok(())
    } else {
        Err(StructureError::NotPrime(q))
    }
}

fn is_power_of(mut n: u64, q: u64) -> bool {
    while n.is_multiple_of(q) {
        n /= q;
    }
    n == 1
}

/// The ascending Fitting series `1 = F_0 < F_1 < ... < F_h = G`.
#[derive(Clone, Debug)]
pub struct FittingSeries {
    pub terms: Vec<Subgroup>,
}

impl FittingSeries {
    pub fn height(&self) -> usize {
        self.terms.len() - 1
    }
}

/// `F_{i+1}/F_i = F(G/F_i)`, built through iterated quotients.
pub fn fitting_series(g: &Group) -> Result<FittingSeries, StructureError> {
    if !g.whole().is_soluble() {
        return Err(StructureError::NotSoluble(g.order()));
    }
    let mut terms = vec![g.trivial_subgroup()];
    loop {
        let last = terms.last().unwrap();
        if last.is_whole() {
            return Ok(FittingSeries { terms });
        }
        if last.is_trivial() {
            terms.push(fitting_subgroup(g));
            continue;
        }
        let quotient = Quotient::new(g, last).expect("Fitting series terms are normal");
        let f = fitting_subgroup(quotient.group());
        terms.push(quotient.preimage(&f));
    }
}

/// Least `n` with `F_n = G`; 0 for the trivial group.
pub fn fitting_height(g: &Group) -> Result<usize, StructureError> {
    fitting_series(g).map(|s| s.height())
}

/// Fitting height of a subgroup, as a group in its own right.
pub fn subgroup_fitting_height(h: &Subgroup) -> Result<usize, StructureError> {
    if h.is_trivial() {
        return Ok(0);
    }
    fitting_height(&h.to_group().0)
}

/// Number of prime factors of `n` counted with multiplicity.
pub fn composition_length(n: u64) -> u32 {
    arith::factorize(n).iter().map(|&(_, k)| k).sum()
}
