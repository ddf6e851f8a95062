use super::PermGroup;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Left action of `G` on the left cosets `G/H`: `x · gH = (x∘g)H`.
#[derive(Debug, Clone)]
pub struct CosetAction {
    subgroup: Vec<usize>,
    coset_of: Vec<usize>,
    representatives: Vec<usize>,
}

impl CosetAction {
    /// Builds the coset table without checking that `subgroup` is closed.
    pub(crate) fn new_unchecked(group: &PermGroup, subgroup: &[usize]) -> Self {
        let mut coset_of = vec![usize::MAX; group.order()];
        let mut representatives = Vec::with_capacity(group.order() / subgroup.len().max(1));
        for g in 0..group.order() {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let id = representatives.len();
            representatives.push(g);
            for &h in subgroup {
                coset_of[group.mul(g, h)] = id;
            }
        }
        let mut subgroup = subgroup.to_vec();
        subgroup.sort_unstable();
        Self {
            subgroup,
            coset_of,
            representatives,
        }
    }

    pub fn subgroup(&self) -> &[usize] {
        &self.subgroup
    }

    /// Number of cosets, `[G:H]`.
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    /// Smallest element of each coset, by coset id.
    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn coset_of(&self, g: usize) -> usize {
        self.coset_of[g]
    }

    pub fn act(&self, group: &PermGroup, x: usize, coset: usize) -> usize {
        self.coset_of[group.mul(x, self.representatives[coset])]
    }

    /// The permutation of cosets induced by `x`.
    pub fn permutation(&self, group: &PermGroup, x: usize) -> Permutation {
        Permutation::from_images_unchecked(
            (0..self.len())
                .map(|c| self.act(group, x, c) as u32)
                .collect(),
        )
    }

    /// Number of orbits of the subgroup generated by `gens` on the cosets.
    pub fn orbit_count(&self, group: &PermGroup, gens: &[usize]) -> usize {
        let mut parent: Vec<usize> = (0..self.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut orbits = self.len();
        for c in 0..self.len() {
            for &a in gens {
                let d = self.act(group, a, c);
                let (rc, rd) = (find(&mut parent, c), find(&mut parent, d));
                if rc != rd {
                    parent[rc] = rd;
                    orbits -= 1;
                }
            }
        }
        orbits
    }
}

impl PermGroup {
    /// The action of `G` on `G/H`. `H` must be a subgroup; the homomorphism
    /// property is spot-checked on pairs of generators.
    pub fn coset_action(&self, subgroup: &[usize]) -> Result<CosetAction> {
        if !self.is_subgroup(subgroup) {
            return Err(Error::NotASubgroup);
        }
        let action = CosetAction::new_unchecked(self, subgroup);
        let gens = self.generator_indices();
        for (i, &s) in gens.iter().enumerate() {
            let t = gens[(i + 1) % gens.len()];
            let st = self.mul(s, t);
            for c in 0..action.len() {
                let lhs = action.act(self, st, c);
                let rhs = action.act(self, s, action.act(self, t, c));
                assert_eq!(lhs, rhs, "coset action is not a homomorphism");
            }
        }
        Ok(action)
    }

    /// `#(A\G/B)`, as the number of orbits of `A = ⟨left_gens⟩` on `G/B`.
    pub fn double_coset_count(&self, left_gens: &[usize], right: &[usize]) -> Result<usize> {
        let action = self.coset_action(right)?;
        Ok(action.orbit_count(self, left_gens))
    }

    /// `#(A\G/B)` by partitioning `G` directly into the sets `A g B`.
    /// Quadratic in subgroup sizes; intended as an independent check.
    pub fn double_coset_count_by_partition(&self, left: &[usize], right: &[usize]) -> usize {
        let mut seen = vec![false; self.order()];
        let mut count = 0;
        for g in 0..self.order() {
            if seen[g] {
                continue;
            }
            count += 1;
            for &a in left {
                let ag = self.mul(a, g);
                for &b in right {
                    seen[self.mul(ag, b)] = true;
                }
            }
        }
        count
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::{perm, s3};
    use super::*;

    #[test]
    fn coset_actions_of_s3() {
        let g = s3();
        let regular = g.coset_action(&[0]).unwrap();
        assert_eq!(regular.len(), 6);

        let c = g.index_of(&perm("(0 1 2)", 3)).unwrap();
        let t = g.index_of(&perm("(0 1)", 3)).unwrap();
        let a3 = g.coset_action(&g.cyclic_subgroup(c)).unwrap();
        assert_eq!(a3.len(), 2);
        assert!(a3.permutation(&g, c).is_identity());
        assert_eq!(a3.permutation(&g, t).to_string(), "(0 1)");

        let all: Vec<usize> = (0..6).collect();
        assert_eq!(g.coset_action(&all).unwrap().len(), 1);

        assert_eq!(g.coset_action(&[0, c]).unwrap_err(), Error::NotASubgroup);
    }

    #[test]
    fn double_cosets_of_s3() {
        let g = s3();
        let t = g.index_of(&perm("(0 1)", 3)).unwrap();
        let h = g.cyclic_subgroup(t);
        assert_eq!(g.double_coset_count(&[t], &h).unwrap(), 2);
        assert_eq!(g.double_coset_count_by_partition(&h, &h), 2);
        assert_eq!(g.double_coset_count(&[], &h).unwrap(), 3);
        let all: Vec<usize> = (0..6).collect();
        assert_eq!(g.double_coset_count(&g.generator_indices(), &all).unwrap(), 1);
        assert_eq!(g.double_coset_count_by_partition(&all, &all), 1);
    }
}
