//! Derived and lower central series.
//!
//! Commutator subgroups use `[<X>, <Y>] = <[x, y] : x in X, y in Y>^<X, Y>`,
//! so each step costs one normal closure inside the ambient subgroup.

use super::{normal_closure_in, Group, Subgroup};

/// `[A, B]` for subgroups `A`, `B` of `ambient` that generate it together
/// (or are normal in it).
pub fn commutator_subgroup(a: &Subgroup, b: &Subgroup, ambient: &Subgroup) -> Subgroup {
    let g = ambient.group();
    let mut seeds = Vec::new();
    for &x in a.generators() {
        for &y in b.generators() {
            seeds.push(g.commutator(x, y));
        }
    }
    normal_closure_in(ambient, &seeds)
}

pub fn derived_subgroup(h: &Subgroup) -> Subgroup {
    commutator_subgroup(h, h, h)
}

fn derived_series_of(h: &Subgroup) -> Vec<Subgroup> {
    let mut series = vec![h.clone()];
    loop {
        let last = series.last().unwrap();
        let next = derived_subgroup(last);
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

fn lower_central_series_of(h: &Subgroup) -> Vec<Subgroup> {
    let mut series = vec![h.clone()];
    loop {
        let last = series.last().unwrap();
        let next = commutator_subgroup(last, h, h);
        if next.order() == last.order() {
            return series;
        }
        series.push(next);
    }
}

/// `G = G^(0) > G^(1) > ...` up to the first repeated term.
pub fn derived_series(g: &Group) -> Vec<Subgroup> {
    derived_series_of(&g.whole())
}

pub fn lower_central_series(g: &Group) -> Vec<Subgroup> {
    lower_central_series_of(&g.whole())
}

pub fn is_soluble(g: &Group) -> bool {
    g.whole().is_soluble()
}

pub fn is_nilpotent(g: &Group) -> bool {
    g.whole().is_nilpotent()
}

impl Subgroup {
    pub fn derived_series(&self) -> Vec<Subgroup> {
        derived_series_of(self)
    }

    pub fn lower_central_series(&self) -> Vec<Subgroup> {
        lower_central_series_of(self)
    }

    pub fn is_soluble(&self) -> bool {
        derived_series_of(self).last().unwrap().is_trivial()
    }

    pub fn is_nilpotent(&self) -> bool {
        lower_central_series_of(self).last().unwrap().is_trivial()
    }
}
