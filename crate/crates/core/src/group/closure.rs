//! Subgroup generation and normal closures.

use super::{Group, Subgroup};

/// Incremental closure under right multiplication by a growing generator list.
pub(super) struct Closure<'g> {
    group: &'g Group,
    mask: Vec<bool>,
    members: Vec<usize>,
    gens: Vec<usize>,
}

impl<'g> Closure<'g> {
    pub(super) fn new(group: &'g Group) -> Self {
        let mut mask = vec![false; group.order()];
        mask[group.identity()] = true;
        Closure {
            group,
            mask,
            members: vec![group.identity()],
            gens: Vec::new(),
        }
    }

    /// Adds `g` as a generator unless it already lies in the closure.
    pub(super) fn add(&mut self, g: usize) -> bool {
        if self.mask[g] {
            return false;
        }
        let group = self.group;
        self.gens.push(g);
        let mut queue = Vec::new();
        for i in 0..self.members.len() {
            let x = group.mul(self.members[i], g);
            if !self.mask[x] {
                self.mask[x] = true;
                self.members.push(x);
                queue.push(x);
            }
        }
        while let Some(x) = queue.pop() {
            for &s in &self.gens {
                let y = group.mul(x, s);
                if !self.mask[y] {
                    self.mask[y] = true;
                    self.members.push(y);
                    queue.push(y);
                }
            }
        }
        true
    }

    pub(super) fn len(&self) -> usize {
        self.members.len()
    }

    pub(super) fn finish(self) -> Subgroup {
        Subgroup::from_mask(self.group, self.mask, self.gens)
    }
}

pub(super) fn greedy_generators(group: &Group) -> Vec<usize> {
    let mut c = Closure::new(group);
    for g in group.elements() {
        if c.len() == group.order() {
            break;
        }
        c.add(g);
    }
    c.gens
}

/// Smallest subgroup containing `seeds`.
pub fn subgroup_generated(group: &Group, seeds: &[usize]) -> Subgroup {
    let mut c = Closure::new(group);
    for &s in seeds {
        c.add(s);
    }
    c.finish()
}

/// Smallest normal subgroup of `group` containing `seeds`.
pub fn normal_closure(group: &Group, seeds: &[usize]) -> Subgroup {
    closure_under(group, group.generators(), seeds)
}

/// Normal closure of `seeds` inside `ambient` (seeds must lie in `ambient`).
pub fn normal_closure_in(ambient: &Subgroup, seeds: &[usize]) -> Subgroup {
    closure_under(ambient.group(), ambient.generators(), seeds)
}

fn closure_under(group: &Group, conjugators: &[usize], seeds: &[usize]) -> Subgroup {
    let mut c = Closure::new(group);
    let mut work: Vec<usize> = seeds.to_vec();
    while let Some(w) = work.pop() {
        if c.add(w) {
            // it suffices that conjugates of generators by conjugators stay inside
            for &x in conjugators {
                work.push(group.conjugate(w, x));
            }
        }
    }
    c.finish()
}

/// Conjugacy classes in order of their smallest element.
pub fn conjugacy_classes(group: &Group) -> Vec<Vec<usize>> {
    let mut class_of = vec![usize::MAX; group.order()];
    let mut classes = Vec::new();
    for g in group.elements() {
        if class_of[g] != usize::MAX {
            continue;
        }
        let id = classes.len();
        class_of[g] = id;
        let mut class = vec![g];
        let mut head = 0;
        while head < class.len() {
            let x = class[head];
            head += 1;
            for &s in group.generators() {
                let y = group.conjugate(x, s);
                if class_of[y] == usize::MAX {
                    class_of[y] = id;
                    class.push(y);
                }
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}
