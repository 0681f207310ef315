use super::{subgroup_generated, Group, GroupError, Subgroup};

/// A coset group `G/N` with its projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    group: Group,
    parent: Group,
    projection: Vec<usize>,
    representatives: Vec<usize>,
}

impl Quotient {
    /// Cosets are numbered by their first element in index order, so the
    /// identity coset is 0.
    pub fn new(parent: &Group, normal: &Subgroup) -> Result<Quotient, GroupError> {
        if let Some((g, n)) = normal.normality_witness() {
            return Err(GroupError::NotNormal { g, n });
        }
        let mut projection = vec![usize::MAX; parent.order()];
        let mut representatives = Vec::new();
        for g in std::iter::once(parent.identity()).chain(parent.elements()) {
            if projection[g] != usize::MAX {
                continue;
            }
            let id = representatives.len();
            representatives.push(g);
            for &n in normal.members() {
                projection[parent.mul(g, n)] = id;
            }
        }
        let m = representatives.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &representatives {
            for &b in &representatives {
                table.push(projection[parent.mul(a, b)] as u32);
            }
        }
        Ok(Quotient {
            group: Group::from_table_unchecked(m, table, 0),
            parent: parent.clone(),
            projection,
            representatives,
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn project(&self, g: usize) -> usize {
        self.projection[g]
    }

    pub fn projection(&self) -> &[usize] {
        &self.projection
    }

    pub fn representative(&self, coset: usize) -> usize {
        self.representatives[coset]
    }

    /// Full preimage of a subgroup of the quotient.
    pub fn preimage(&self, sub: &Subgroup) -> Subgroup {
        let members: Vec<usize> = self
            .parent
            .elements()
            .filter(|&g| sub.contains(self.projection[g]))
            .collect();
        let mut mask = vec![false; self.parent.order()];
        for &g in &members {
            mask[g] = true;
        }
        // generators: kernel generators plus lifted generators of `sub`
        let kernel: Vec<usize> = self
            .parent
            .elements()
            .filter(|&g| self.projection[g] == 0)
            .collect();
        let kernel_gens = subgroup_generated(&self.parent, &kernel).generators().to_vec();
        let mut gens = kernel_gens;
        gens.extend(sub.generators().iter().map(|&c| self.representatives[c]));
        Subgroup::from_mask(&self.parent, mask, gens)
    }

    /// Image of a subgroup of the parent.
    pub fn image(&self, sub: &Subgroup) -> Subgroup {
        let seeds: Vec<usize> = sub.generators().iter().map(|&g| self.projection[g]).collect();
        subgroup_generated(&self.group, &seeds)
    }
}
