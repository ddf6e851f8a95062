//! A rational-character group together with everything the dimension
//! formulas read from it: classes, cyclic classes, character table, the
//! fixed-dimension matrix and all double-coset counts between cyclic
//! classes. Built once and shared.

use crate::chartable::{CharacterTable, FixedDimMatrix};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::permgroup::{ConjugacyClasses, CosetAction, CyclicClass, PermGroup};

#[derive(Debug, Clone)]
pub struct GaloisGroup {
    group: PermGroup,
    classes: ConjugacyClasses,
    cyclic: Vec<CyclicClass>,
    cyclic_of_class: Vec<usize>,
    table: CharacterTable,
    fixed: FixedDimMatrix,
    /// `double_cosets[k][i] = #(H_k \ G / H_i)`.
    double_cosets: Vec<Vec<usize>>,
}

impl GaloisGroup {
    /// Fails with [`Error::NotRationalGroup`] unless every character of the
    /// group is rational.
    pub fn new(group: PermGroup) -> Result<Self> {
        let classes = group.conjugacy_classes();
        if !group.is_rational(&classes) {
            return Err(Error::NotRationalGroup);
        }
        let cyclic = group.cyclic_subgroup_classes(&classes)?;
        let mut cyclic_of_class = vec![0; classes.len()];
        for (i, k) in cyclic.iter().enumerate() {
            cyclic_of_class[k.generator_class] = i;
        }
        let table = CharacterTable::compute(&group, &classes)?;
        let fixed = FixedDimMatrix::compute(&table, &cyclic)?;
        let double_cosets = {
            let actions: Vec<CosetAction> = cyclic
                .iter()
                .map(|h| CosetAction::new_unchecked(&group, &h.subgroup_elements))
                .collect();
            cyclic
                .iter()
                .map(|hk| {
                    actions
                        .iter()
                        .map(|a| a.orbit_count(&group, &[hk.generator]))
                        .collect()
                })
                .collect()
        };
        Ok(Self {
            group,
            classes,
            cyclic,
            cyclic_of_class,
            table,
            fixed,
            double_cosets,
        })
    }

    pub fn from_generators(gens: &[Permutation], cap: usize) -> Result<Self> {
        Self::new(PermGroup::from_generators(gens, cap)?)
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn classes(&self) -> &ConjugacyClasses {
        &self.classes
    }

    pub fn cyclic_classes(&self) -> &[CyclicClass] {
        &self.cyclic
    }

    /// `N`, the number of classes, irreps and cyclic classes alike.
    pub fn class_count(&self) -> usize {
        self.cyclic.len()
    }

    pub fn table(&self) -> &CharacterTable {
        &self.table
    }

    pub fn fixed_dims(&self) -> &FixedDimMatrix {
        &self.fixed
    }

    /// `#(H_k \ G / H_i)` from the orbit count of `⟨h_k⟩` on `G/H_i`.
    pub fn double_coset_count(&self, k: usize, i: usize) -> usize {
        self.double_cosets[k][i]
    }

    /// Cyclic class of `⟨x⟩` for an element index `x`.
    pub fn cyclic_class_of_element(&self, x: usize) -> usize {
        self.cyclic_of_class[self.classes.class_of(x)]
    }

    /// Resolves an inertia generator to its cyclic class.
    pub fn cyclic_class_of(&self, perm: &Permutation) -> Result<usize> {
        let x = self.group.index_of(perm)?;
        if x == self.group.identity() {
            return Err(Error::TrivialInertia(perm.to_string()));
        }
        Ok(self.cyclic_class_of_element(x))
    }

    /// Index of `|G| / |H_i|`.
    pub fn index_of_cyclic(&self, i: usize) -> usize {
        self.order() / self.cyclic[i].subgroup_order
    }
}
