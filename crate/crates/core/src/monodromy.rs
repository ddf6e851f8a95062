//! Branch tuples: elements `(a_1, b_1, …, a_g, b_g; g_1, …, g_b)` of `G`
//! satisfying `Π[a_i, b_i] · g_1⋯g_b = e` and generating `G`. Each one is a
//! combinatorial witness for a cover of a genus-`g` curve with `b` branch
//! points, and the genus of every quotient can be read off by counting
//! cycles of the branch elements on coset spaces, without characters.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galois::GaloisGroup;
use crate::permgroup::{CosetAction, PermGroup};
use crate::rhprym::{CoverSpec, Diagnostic, RamificationSpec};

pub const DEFAULT_SEED: u64 = 0x70_72_79_6d;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchTuple {
    pub base_genus: u64,
    pub handles: Vec<(usize, usize)>,
    pub branch_elements: Vec<usize>,
}

/// JSON form of a tuple, with elements in cycle notation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleDocument {
    pub base_genus: u64,
    pub handles: Vec<[String; 2]>,
    pub branch: Vec<String>,
}

impl BranchTuple {
    /// `Π[a_i, b_i] · g_1⋯g_b`, with `[a, b] = a b a⁻¹ b⁻¹`.
    pub fn relation_product(&self, group: &PermGroup) -> usize {
        let mut acc = group.identity();
        for &(a, b) in &self.handles {
            acc = group.mul(acc, commutator(group, a, b));
        }
        self.branch_elements.iter().fold(acc, |acc, &g| group.mul(acc, g))
    }

    pub fn generates(&self, group: &PermGroup) -> bool {
        let gens: Vec<usize> = self
            .handles
            .iter()
            .flat_map(|&(a, b)| [a, b])
            .chain(self.branch_elements.iter().copied())
            .collect();
        group.generated_subgroup(&gens).len() == group.order()
    }

    pub fn is_valid(&self, group: &PermGroup) -> bool {
        self.handles.len() as u64 == self.base_genus
            && self.branch_elements.iter().all(|&g| g != group.identity())
            && self.relation_product(group) == group.identity()
            && self.generates(group)
    }

    pub fn to_document(&self, group: &PermGroup) -> TupleDocument {
        let name = |x: usize| group.element(x).to_string();
        TupleDocument {
            base_genus: self.base_genus,
            handles: self.handles.iter().map(|&(a, b)| [name(a), name(b)]).collect(),
            branch: self.branch_elements.iter().map(|&g| name(g)).collect(),
        }
    }

    /// Parses and checks a tuple document against `group`.
    pub fn from_document(group: &PermGroup, doc: &TupleDocument) -> Result<Self> {
        let element = |s: &String| -> Result<usize> { group.index_of(&s.parse()?) };
        let tuple = Self {
            base_genus: doc.base_genus,
            handles: doc
                .handles
                .iter()
                .map(|[a, b]| Ok((element(a)?, element(b)?)))
                .collect::<Result<_>>()?,
            branch_elements: doc.branch.iter().map(element).collect::<Result<_>>()?,
        };
        if !tuple.is_valid(group) {
            return Err(Error::Spec(
                "tuple must satisfy the surface relation, avoid the identity and generate the group".into(),
            ));
        }
        Ok(tuple)
    }
}

fn commutator(group: &PermGroup, a: usize, b: usize) -> usize {
    let ab = group.mul(a, b);
    group.mul(group.mul(ab, group.inv(a)), group.inv(b))
}

/// Samples a valid tuple by drawing the handles and the first `b − 1` branch
/// elements uniformly and solving the relation for the last one. Draws with
/// an identity last element or a proper generated subgroup are rejected.
pub fn sample_tuple<R: Rng + ?Sized>(
    group: &PermGroup,
    genus: u64,
    branch_points: usize,
    attempts: usize,
    rng: &mut R,
) -> Result<BranchTuple> {
    let n = group.order();
    let e = group.identity();
    if n == 1 {
        return Ok(BranchTuple {
            base_genus: genus,
            handles: vec![(e, e); genus as usize],
            branch_elements: Vec::new(),
        });
    }
    for _ in 0..attempts {
        let handles: Vec<(usize, usize)> = (0..genus)
            .map(|_| (rng.random_range(0..n), rng.random_range(0..n)))
            .collect();
        let mut branch: Vec<usize> = (1..branch_points).map(|_| rng.random_range(1..n)).collect();
        let partial = BranchTuple {
            base_genus: genus,
            handles,
            branch_elements: branch.clone(),
        };
        let last = group.inv(partial.relation_product(group));
        if branch_points == 0 {
            if last != e {
                continue;
            }
        } else if last == e {
            continue;
        } else {
            branch.push(last);
        }
        let tuple = BranchTuple {
            branch_elements: branch,
            ..partial
        };
        if tuple.generates(group) {
            return Ok(tuple);
        }
    }
    Err(Error::SamplingExhausted { attempts })
}

/// `Σ_i ([G:H] − orbits of ⟨g_i⟩ on G/H)`, the ramification degree of
/// `X/H → Y`.
pub fn oracle_ramification_degree(group: &PermGroup, tuple: &BranchTuple, cosets: &CosetAction) -> u64 {
    tuple
        .branch_elements
        .iter()
        .map(|&g| (cosets.len() - cosets.orbit_count(group, &[g])) as u64)
        .sum()
}

/// Genus of `X/H` from Riemann–Hurwitz on the coset action of the tuple.
pub fn oracle_genus(group: &PermGroup, tuple: &BranchTuple, cosets: &CosetAction) -> i64 {
    let n = cosets.len() as i64;
    let r = oracle_ramification_degree(group, tuple, cosets) as i64;
    1 + n * (tuple.base_genus as i64 - 1) + r.div_euclid(2)
}

/// Tallies the cyclic class of each branch element.
pub fn spec_from_tuple(galois: &Arc<GaloisGroup>, tuple: &BranchTuple) -> CoverSpec {
    let mut ram = RamificationSpec::new();
    for &g in &tuple.branch_elements {
        ram.add(galois.cyclic_class_of_element(g), 1);
    }
    CoverSpec::new(galois.clone(), tuple.base_genus, ram).expect("branch elements are nontrivial")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TupleMismatch {
    Genus { subgroup: usize, oracle: i64, formula: String },
    DoubleCoset { branch_index: usize, subgroup: usize, orbits: usize, expected: usize },
    OddRamification { subgroup: usize, degree: u64 },
    Diagnostic(Diagnostic),
}

impl fmt::Display for TupleMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Genus { subgroup, oracle, formula } => {
                write!(f, "genus of X/H{}: oracle {oracle}, formula {formula}", subgroup + 1)
            }
            Self::DoubleCoset { branch_index, subgroup, orbits, expected } => write!(
                f,
                "branch element {} has {orbits} orbits on G/H{}, expected {expected}",
                branch_index + 1,
                subgroup + 1
            ),
            Self::OddRamification { subgroup, degree } => {
                write!(f, "odd ramification degree {degree} for X/H{}", subgroup + 1)
            }
            Self::Diagnostic(d) => write!(f, "validation: {d}"),
        }
    }
}

/// Checks tuples against the character-theoretic formulas, reusing one
/// coset action per cyclic class.
#[derive(Debug, Clone)]
pub struct Oracle {
    galois: Arc<GaloisGroup>,
    actions: Vec<CosetAction>,
}

impl Oracle {
    pub fn new(galois: Arc<GaloisGroup>) -> Self {
        let group = galois.group();
        let actions = galois
            .cyclic_classes()
            .iter()
            .map(|h| {
                group
                    .coset_action(&h.subgroup_elements)
                    .expect("cyclic subgroups are subgroups")
            })
            .collect();
        Self { galois, actions }
    }

    pub fn galois(&self) -> &Arc<GaloisGroup> {
        &self.galois
    }

    /// Genus of `X/H_i` by cycle counting.
    pub fn genus(&self, tuple: &BranchTuple, i: usize) -> i64 {
        oracle_genus(self.galois.group(), tuple, &self.actions[i])
    }

    /// Compares the oracle with the formulas for `X` and every `X/H_i`.
    /// An empty result means full agreement.
    pub fn verify(&self, tuple: &BranchTuple) -> Vec<TupleMismatch> {
        let group = self.galois.group();
        let spec = spec_from_tuple(&self.galois, tuple);
        let mut out: Vec<TupleMismatch> = spec
            .validate()
            .diagnostics
            .into_iter()
            .map(TupleMismatch::Diagnostic)
            .collect();
        for (i, action) in self.actions.iter().enumerate() {
            let degree = oracle_ramification_degree(group, tuple, action);
            if degree % 2 == 1 {
                out.push(TupleMismatch::OddRamification { subgroup: i, degree });
            }
            for (b, &g) in tuple.branch_elements.iter().enumerate() {
                let orbits = action.orbit_count(group, &[g]);
                let expected = self.galois.double_coset_count(self.galois.cyclic_class_of_element(g), i);
                if orbits != expected {
                    out.push(TupleMismatch::DoubleCoset { branch_index: b, subgroup: i, orbits, expected });
                }
            }
            let oracle = oracle_genus(group, tuple, action);
            let formula = spec.genus_quotient_exact(i);
            if formula != crate::exactla::rational(oracle) {
                out.push(TupleMismatch::Genus { subgroup: i, oracle, formula: formula.to_string() });
            }
        }
        let total = spec.genus_total_exact();
        if total != spec.genus_quotient_exact(0) {
            out.push(TupleMismatch::Genus {
                subgroup: 0,
                oracle: self.genus(tuple, 0),
                formula: total.to_string(),
            });
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use crate::permgroup::DEFAULT_CAP;

    fn galois(gens: &[&str]) -> Arc<GaloisGroup> {
        let gens: Vec<Permutation> = gens.iter().map(|s| s.parse().unwrap()).collect();
        Arc::new(GaloisGroup::from_generators(&gens, DEFAULT_CAP).unwrap())
    }

    fn genus_over_whole_group(g: &GaloisGroup, t: &BranchTuple) -> i64 {
        let all: Vec<usize> = (0..g.order()).collect();
        oracle_genus(g.group(), t, &g.group().coset_action(&all).unwrap())
    }

    #[test]
    fn z2_four_involutions() {
        let g = galois(&["(0 1)"]);
        let mut rng = seeded_rng(1);
        let t = sample_tuple(g.group(), 0, 4, 10, &mut rng).unwrap();
        assert_eq!(t.branch_elements, vec![1; 4]);
        let oracle = Oracle::new(g.clone());
        assert_eq!(oracle.genus(&t, 0), 1);
        assert_eq!(oracle.genus(&t, 1), 0);
        assert_eq!(spec_from_tuple(&g, &t).ramification().count(1), 4);
        assert!(oracle.verify(&t).is_empty());
    }

    #[test]
    fn s3_tuple_matching_spec_example() {
        let g = galois(&["(0 1)", "(0 1 2)"]);
        let s = |x: &str| g.group().index_of(&x.parse().unwrap()).unwrap();
        // Four transpositions and a 3-cycle with product e.
        let t = BranchTuple {
            base_genus: 0,
            handles: vec![],
            branch_elements: vec![s("(0 1)"), s("(0 1)"), s("(0 1)"), s("(0 2)"), s("(0 1 2)")],
        };
        assert_eq!(t.relation_product(g.group()), g.group().identity());
        assert!(t.is_valid(g.group()));
        let spec = spec_from_tuple(&g, &t);
        assert_eq!(spec.ramification().count(1), 4);
        assert_eq!(spec.ramification().count(2), 1);
        assert_eq!(Oracle::new(g.clone()).genus(&t, 0), 3);
        assert!(Oracle::new(g).verify(&t).is_empty());
    }

    #[test]
    fn identity_last_element_is_rejected() {
        let g = galois(&["(0 1)", "(0 1 2)"]);
        let s = |x: &str| g.group().index_of(&x.parse().unwrap()).unwrap();
        let t = BranchTuple {
            base_genus: 0,
            handles: vec![],
            branch_elements: vec![s("(0 1)"), s("(0 1)"), 0],
        };
        assert!(!t.is_valid(g.group()));
    }

    #[test]
    fn trivial_group_gives_empty_tuple() {
        let g = galois(&[]);
        let t = sample_tuple(g.group(), 2, 3, 1, &mut seeded_rng(0)).unwrap();
        assert!(t.branch_elements.is_empty());
        assert!(t.is_valid(g.group()));
        assert!(Oracle::new(g).verify(&t).is_empty());
    }

    #[test]
    fn unbranched_tuple_has_empty_ramification() {
        let g = galois(&["(0 1)", "(0 1 2)"]);
        let t = sample_tuple(g.group(), 2, 0, 10_000, &mut seeded_rng(3)).unwrap();
        let spec = spec_from_tuple(&g, &t);
        assert_eq!(spec.ramification().branch_points(), 0);
        assert_eq!(genus_over_whole_group(&g, &t), 2);
        assert!(Oracle::new(g).verify(&t).is_empty());
    }

    #[test]
    fn sampling_can_exhaust() {
        let g = galois(&["(0 1)"]);
        assert_eq!(
            sample_tuple(g.group(), 0, 1, 5, &mut seeded_rng(0)),
            Err(Error::SamplingExhausted { attempts: 5 })
        );
    }

    #[test]
    fn random_s3_tuples_agree() {
        let g = galois(&["(0 1)", "(0 1 2)"]);
        let oracle = Oracle::new(g.clone());
        let mut rng = seeded_rng(DEFAULT_SEED);
        for i in 0..100 {
            let t = sample_tuple(g.group(), i % 2, 3 + (i as usize % 3), 1000, &mut rng).unwrap();
            assert!(t.is_valid(g.group()));
            assert_eq!(genus_over_whole_group(&g, &t), t.base_genus as i64);
            assert_eq!(oracle.verify(&t), vec![]);
        }
    }

    #[test]
    fn document_round_trip() {
        let g = galois(&["(0 1)", "(0 1 2)"]);
        let t = sample_tuple(g.group(), 1, 2, 1000, &mut seeded_rng(9)).unwrap();
        let doc = t.to_document(g.group());
        let json = serde_json::to_string(&doc).unwrap();
        let back: TupleDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(BranchTuple::from_document(g.group(), &back).unwrap(), t);
        let bad = TupleDocument { branch: vec!["(0 3)".into()], ..doc };
        assert!(BranchTuple::from_document(g.group(), &bad).is_err());
    }
}
