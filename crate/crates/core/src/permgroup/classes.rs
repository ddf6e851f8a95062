use std::collections::VecDeque;
use std::ops::Deref;

use num_integer::Integer;

use super::PermGroup;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Smallest element index in the class.
    pub representative: usize,
    pub members: Vec<usize>,
    pub size: usize,
    pub element_order: u64,
}

/// The conjugacy classes of a group together with the element → class map.
///
/// Classes are ordered by element order, then size, then smallest member, so
/// the identity class always comes first.
#[derive(Debug, Clone)]
pub struct ConjugacyClasses {
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
}

impl Deref for ConjugacyClasses {
    type Target = [ConjugacyClass];

    fn deref(&self) -> &[ConjugacyClass] {
        &self.classes
    }
}

impl ConjugacyClasses {
    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    /// Class of `rep^k` where `rep` represents class `class`.
    pub fn power_class(&self, group: &PermGroup, class: usize, k: u64) -> usize {
        self.class_of[group.pow(self.classes[class].representative, k)]
    }

    /// Class containing the inverses of class `class`.
    pub fn inverse_class(&self, group: &PermGroup, class: usize) -> usize {
        self.class_of[group.inv(self.classes[class].representative)]
    }
}

/// A conjugacy class of cyclic subgroups, represented by `H = ⟨generator⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicClass {
    pub generator: usize,
    pub subgroup_order: usize,
    /// `generator^j` at position `j`.
    pub subgroup_elements: Vec<usize>,
    /// `profile[c]` = number of elements of `H` in conjugacy class `c`.
    pub member_class_profile: Vec<usize>,
    /// Conjugacy class of the generator.
    pub generator_class: usize,
}

impl PermGroup {
    pub fn conjugacy_classes(&self) -> ConjugacyClasses {
        let n = self.order();
        let gens = self.generator_indices();
        let gen_inv: Vec<usize> = gens.iter().map(|&s| self.inv(s)).collect();
        let mut assigned = vec![usize::MAX; n];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if assigned[x] != usize::MAX {
                continue;
            }
            let id = raw.len();
            assigned[x] = id;
            let mut members = vec![x];
            let mut queue = VecDeque::from([x]);
            while let Some(y) = queue.pop_front() {
                for (&s, &si) in gens.iter().zip(&gen_inv) {
                    let z = self.mul(self.mul(s, y), si);
                    if assigned[z] == usize::MAX {
                        assigned[z] = id;
                        members.push(z);
                        queue.push_back(z);
                    }
                }
            }
            members.sort_unstable();
            raw.push(members);
        }
        let mut classes: Vec<ConjugacyClass> = raw
            .into_iter()
            .map(|members| ConjugacyClass {
                representative: members[0],
                size: members.len(),
                element_order: self.element_order(members[0]),
                members,
            })
            .collect();
        classes.sort_by_key(|c| (c.element_order, c.size, c.representative));
        let mut class_of = vec![0; n];
        for (i, c) in classes.iter().enumerate() {
            for &m in &c.members {
                class_of[m] = i;
            }
        }
        ConjugacyClasses { classes, class_of }
    }

    /// Power-map rationality test: every `x` is conjugate to `x^k` for each
    /// `k` coprime to the order of `x`. Equivalent to all irreducible
    /// characters being rational valued.
    pub fn is_rational(&self, classes: &ConjugacyClasses) -> bool {
        classes.iter().enumerate().all(|(i, c)| {
            (2..c.element_order)
                .filter(|k| k.gcd(&c.element_order) == 1)
                .all(|k| classes.power_class(self, i, k) == i)
        })
    }

    /// One cyclic class per conjugacy class, ordered by subgroup order and
    /// then by the generator's class index; the trivial subgroup is first.
    pub fn cyclic_subgroup_classes(&self, classes: &ConjugacyClasses) -> Result<Vec<CyclicClass>> {
        if !self.is_rational(classes) {
            return Err(Error::NotRationalGroup);
        }
        let mut out: Vec<CyclicClass> = classes
            .iter()
            .enumerate()
            .map(|(ci, c)| {
                let subgroup_elements = self.cyclic_subgroup(c.representative);
                let mut profile = vec![0; classes.len()];
                for &a in &subgroup_elements {
                    profile[classes.class_of(a)] += 1;
                }
                CyclicClass {
                    generator: c.representative,
                    subgroup_order: subgroup_elements.len(),
                    subgroup_elements,
                    member_class_profile: profile,
                    generator_class: ci,
                }
            })
            .collect();
        out.sort_by_key(|k| (k.subgroup_order, k.generator_class));
        Ok(out)
    }
}
