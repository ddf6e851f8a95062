//! Riemann–Hurwitz bookkeeping and isotypic dimensions for a Galois cover
//! `X → Y` with group `G`.
//!
//! A cover is described by the genus `g` of `Y` and, for each nontrivial
//! cyclic class `H_k`, the number `R_k` of branch points whose inertia group
//! is conjugate to `H_k`. From that data:
//!
//! * `deg R   = Σ_k (|G| − |G|/|H_k|) R_k`
//! * `g_X     = 1 + |G|(g − 1) + deg R / 2`
//! * `g_{H_i} = 1 + [G:H_i](g − 1) + Σ_k ([G:H_i] − #(H_k\G/H_i)) R_k / 2`
//!
//! The isotypic dimensions `dim V_j` (equivalently `dim Prym_{ρ_j}(X)`) are
//! obtained twice: by solving `Σ_j dim ρ_j^{H_i} · dim V_j = g_{H_i}` exactly,
//! and from the closed form
//! `(dim ρ_j)(g − 1) + Σ_k (dim ρ_j − dim ρ_j^{H_k}) R_k / 2`.
//! All arithmetic is over exact rationals; integrality is checked, never
//! assumed.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{ratio, rational, to_i64, BigRational};
use crate::galois::GaloisGroup;

/// Branch-point counts `R_k` keyed by nontrivial cyclic-class index.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RamificationSpec {
    counts: BTreeMap<usize, u64>,
}

impl RamificationSpec {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `count` branch points with inertia in cyclic class `class`.
    pub fn add(&mut self, class: usize, count: u64) -> &mut Self {
        *self.counts.entry(class).or_default() += count;
        self
    }

    pub fn with(mut self, class: usize, count: u64) -> Self {
        self.add(class, count);
        self
    }

    pub fn count(&self, class: usize) -> u64 {
        self.counts.get(&class).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts.iter().map(|(&k, &v)| (k, v))
    }

    /// Total number of branch points.
    pub fn branch_points(&self) -> u64 {
        self.counts.values().sum()
    }
}

#[derive(Debug, Clone)]
pub struct CoverSpec {
    group: Arc<GaloisGroup>,
    base_genus: u64,
    ramification: RamificationSpec,
}

impl CoverSpec {
    pub fn new(group: Arc<GaloisGroup>, base_genus: u64, ramification: RamificationSpec) -> Result<Self> {
        for (k, _) in ramification.iter() {
            if k == 0 || k >= group.class_count() {
                return Err(Error::InvalidRamificationClass(k));
            }
        }
        Ok(Self {
            group,
            base_genus,
            ramification,
        })
    }

    pub fn group(&self) -> &Arc<GaloisGroup> {
        &self.group
    }

    pub fn base_genus(&self) -> u64 {
        self.base_genus
    }

    pub fn ramification(&self) -> &RamificationSpec {
        &self.ramification
    }

    fn g_minus_one(&self) -> BigRational {
        rational(self.base_genus as i64 - 1)
    }

    /// `deg R = Σ_k (|G| − |G|/|H_k|) R_k`.
    pub fn ramification_degree_total(&self) -> u64 {
        let order = self.group.order() as u64;
        self.ramification
            .iter()
            .map(|(k, r)| (order - self.group.index_of_cyclic(k) as u64) * r)
            .sum()
    }

    /// `deg R_{H_i} = Σ_k ([G:H_i] − #(H_k\G/H_i)) R_k`.
    pub fn ramification_degree_quotient(&self, i: usize) -> u64 {
        let index = self.group.index_of_cyclic(i) as u64;
        self.ramification
            .iter()
            .map(|(k, r)| (index - self.group.double_coset_count(k, i) as u64) * r)
            .sum()
    }

    /// `g_X` as an exact rational, without integrality checks.
    pub fn genus_total_exact(&self) -> BigRational {
        rational(1)
            + rational(self.group.order() as i64) * self.g_minus_one()
            + ratio(self.ramification_degree_total() as i64, 2)
    }

    /// `g_{H_i}` as an exact rational, without integrality checks.
    pub fn genus_quotient_exact(&self, i: usize) -> BigRational {
        rational(1)
            + rational(self.group.index_of_cyclic(i) as i64) * self.g_minus_one()
            + ratio(self.ramification_degree_quotient(i) as i64, 2)
    }

    pub fn genus_total(&self) -> Result<i64> {
        if self.ramification_degree_total() % 2 != 0 {
            return Err(Error::OddRamificationDegree { quotient: None });
        }
        nonnegative_genus(self.genus_total_exact())
    }

    pub fn genus_quotient(&self, i: usize) -> Result<i64> {
        self.check_cyclic(i)?;
        if self.ramification_degree_quotient(i) % 2 != 0 {
            return Err(Error::OddRamificationDegree { quotient: Some(i) });
        }
        nonnegative_genus(self.genus_quotient_exact(i))
    }

    fn check_cyclic(&self, i: usize) -> Result<()> {
        let len = self.group.class_count();
        if i >= len {
            return Err(Error::IndexOutOfRange { index: i, len });
        }
        Ok(())
    }

    /// Exact solution of the fixed-dimension system, integral or not.
    pub fn isotypic_dims_exact(&self) -> Result<Vec<BigRational>> {
        let rhs: Vec<BigRational> = (0..self.group.class_count())
            .map(|i| self.genus_quotient_exact(i))
            .collect();
        self.group
            .fixed_dims()
            .to_rational()
            .solve(&rhs)
            .map_err(|e| match e {
                Error::Singular => Error::SingularMatrix,
                e => e,
            })
    }

    /// `dim V_j` for every irrep, by exact solve of the system
    /// `Σ_j dim ρ_j^{H_i} · dim V_j = g_{H_i}`.
    pub fn isotypic_dims_solve(&self) -> Result<Vec<i64>> {
        self.isotypic_dims_exact()?
            .iter()
            .enumerate()
            .map(|(j, q)| {
                to_i64(q).ok_or_else(|| Error::NonIntegerSolution {
                    irrep: j,
                    value: q.to_string(),
                })
            })
            .collect()
    }

    /// The closed form as an exact rational. For the trivial irrep this is
    /// `g`.
    pub fn prym_dim_formula_exact(&self, j: usize) -> BigRational {
        let table = self.group.table();
        if j == table.trivial_index() {
            return rational(self.base_genus as i64);
        }
        let deg = table.degree(j);
        let m = self.group.fixed_dims();
        let branch: i64 = self
            .ramification
            .iter()
            .map(|(k, r)| (deg - m.get(k, j)) * r as i64)
            .sum();
        rational(deg) * self.g_minus_one() + ratio(branch, 2)
    }

    /// Closed-form `dim Prym_{ρ_j}(X)`.
    pub fn prym_dim_formula(&self, j: usize) -> Result<i64> {
        let len = self.group.class_count();
        if j >= len {
            return Err(Error::IndexOutOfRange { index: j, len });
        }
        let q = self.prym_dim_formula_exact(j);
        to_i64(&q).ok_or(Error::NonIntegerDimension {
            irrep: j,
            value: q.to_string(),
        })
    }

    /// Runs both routes and every consistency check, collecting failures
    /// instead of stopping at the first.
    pub fn validate(&self) -> DimensionReport {
        let n = self.group.class_count();
        let mut diagnostics = Vec::new();

        if self.ramification_degree_total() % 2 != 0 {
            diagnostics.push(Diagnostic::OddRamificationDegree { quotient: None });
        }
        let genus_total = self.genus_total_exact();
        if genus_total.is_negative() {
            diagnostics.push(Diagnostic::NegativeGenus {
                quotient: None,
                value: genus_total.to_string(),
            });
        }
        let quotient_genera: Vec<BigRational> = (0..n).map(|i| self.genus_quotient_exact(i)).collect();
        for (i, q) in quotient_genera.iter().enumerate().skip(1) {
            if self.ramification_degree_quotient(i) % 2 != 0 {
                diagnostics.push(Diagnostic::OddRamificationDegree { quotient: Some(i) });
            }
            if q.is_negative() {
                diagnostics.push(Diagnostic::NegativeGenus {
                    quotient: Some(i),
                    value: q.to_string(),
                });
            }
        }

        let solved = self
            .isotypic_dims_exact()
            .expect("fixed-dimension matrix was certified invertible");
        let formula: Vec<BigRational> = (0..n).map(|j| self.prym_dim_formula_exact(j)).collect();
        for j in 0..n {
            if !solved[j].is_integer() {
                diagnostics.push(Diagnostic::NonIntegerSolution {
                    irrep: j,
                    value: solved[j].to_string(),
                });
            } else if solved[j].is_negative() {
                diagnostics.push(Diagnostic::NegativeDimension {
                    irrep: j,
                    value: solved[j].to_string(),
                });
            }
            if !formula[j].is_integer() {
                diagnostics.push(Diagnostic::NonIntegerDimension {
                    irrep: j,
                    value: formula[j].to_string(),
                });
            }
        }
        let method_agreement = solved == formula;
        if !method_agreement {
            for j in (0..n).filter(|&j| solved[j] != formula[j]) {
                diagnostics.push(Diagnostic::MethodDisagreement {
                    irrep: j,
                    solved: solved[j].to_string(),
                    formula: formula[j].to_string(),
                });
            }
        }
        let trivial = self.group.table().trivial_index();
        if solved[trivial] != rational(self.base_genus as i64) {
            diagnostics.push(Diagnostic::TrivialDimensionMismatch {
                value: solved[trivial].to_string(),
            });
        }
        DimensionReport {
            genus_total,
            quotient_genera,
            dims: solved,
            formula_dims: formula,
            method_agreement,
            diagnostics,
        }
    }
}

fn nonnegative_genus(q: BigRational) -> Result<i64> {
    if q.is_negative() {
        return Err(Error::NegativeGenus { value: q.to_string() });
    }
    Ok(to_i64(&q).expect("even ramification degree gives an integral genus"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Diagnostic {
    OddRamificationDegree { quotient: Option<usize> },
    NegativeGenus { quotient: Option<usize>, value: String },
    NonIntegerSolution { irrep: usize, value: String },
    NonIntegerDimension { irrep: usize, value: String },
    NegativeDimension { irrep: usize, value: String },
    MethodDisagreement { irrep: usize, solved: String, formula: String },
    TrivialDimensionMismatch { value: String },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let target = |q: &Option<usize>| match q {
            Some(i) => format!("X/H{}", i + 1),
            None => "X".to_string(),
        };
        match self {
            Self::OddRamificationDegree { quotient } => {
                write!(f, "odd ramification degree for {}", target(quotient))
            }
            Self::NegativeGenus { quotient, value } => {
                write!(f, "negative genus {value} for {}", target(quotient))
            }
            Self::NonIntegerSolution { irrep, value } => {
                write!(f, "solver gives non-integer dimension {value} for irrep {}", irrep + 1)
            }
            Self::NonIntegerDimension { irrep, value } => {
                write!(f, "closed form gives non-integer dimension {value} for irrep {}", irrep + 1)
            }
            Self::NegativeDimension { irrep, value } => {
                write!(f, "negative dimension {value} for irrep {}", irrep + 1)
            }
            Self::MethodDisagreement { irrep, solved, formula } => write!(
                f,
                "irrep {}: solver gives {solved}, closed form gives {formula}",
                irrep + 1
            ),
            Self::TrivialDimensionMismatch { value } => {
                write!(f, "trivial isotypic dimension {value} differs from the base genus")
            }
        }
    }
}

/// Output of [`CoverSpec::validate`].
#[derive(Debug, Clone, PartialEq)]
pub struct DimensionReport {
    pub genus_total: BigRational,
    /// `g_{H_i}` per cyclic class; entry 0 is `g_X` again.
    pub quotient_genera: Vec<BigRational>,
    /// `dim V_j` from the linear solve.
    pub dims: Vec<BigRational>,
    /// `dim V_j` from the closed form.
    pub formula_dims: Vec<BigRational>,
    pub method_agreement: bool,
    pub diagnostics: Vec<Diagnostic>,
}

impl DimensionReport {
    pub fn is_clean(&self) -> bool {
        self.diagnostics.is_empty()
    }

    /// Integer dimensions, when every one is integral.
    pub fn integer_dims(&self) -> Option<Vec<i64>> {
        self.dims.iter().map(to_i64).collect()
    }

    pub fn integer_genus_total(&self) -> Option<i64> {
        to_i64(&self.genus_total)
    }

    /// `Σ_j (dim ρ_j) · dim V_j`, which equals `g_X` for any solution.
    pub fn weighted_dim_sum(&self, degrees: &[i64]) -> BigRational {
        self.dims
            .iter()
            .zip(degrees)
            .fold(BigRational::zero(), |acc, (d, &deg)| acc + d * rational(deg))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use crate::permgroup::PermGroup;

    fn galois(gens: &[&str], n: usize) -> Arc<GaloisGroup> {
        let gens: Vec<Permutation> = gens
            .iter()
            .map(|s| s.parse::<Permutation>().unwrap().extended(n).unwrap())
            .collect();
        Arc::new(GaloisGroup::new(PermGroup::from_generators_with_degree(n, &gens, 1000).unwrap()).unwrap())
    }

    fn z2() -> Arc<GaloisGroup> {
        galois(&["(0 1)"], 2)
    }

    fn s3() -> Arc<GaloisGroup> {
        galois(&["(0 1)", "(0 1 2)"], 3)
    }

    fn s3_spec() -> CoverSpec {
        // R2 = 4 transposition points, R3 = 1 three-cycle point.
        CoverSpec::new(s3(), 0, RamificationSpec::new().with(1, 4).with(2, 1)).unwrap()
    }

    #[test]
    fn ramification_degrees() {
        let z = CoverSpec::new(z2(), 1, RamificationSpec::new().with(1, 4)).unwrap();
        assert_eq!(z.ramification_degree_total(), 4);
        assert_eq!(s3_spec().ramification_degree_total(), 16);
        let bare = CoverSpec::new(s3(), 2, RamificationSpec::new()).unwrap();
        assert_eq!(bare.ramification_degree_total(), 0);
    }

    #[test]
    fn total_genus() {
        let z = CoverSpec::new(z2(), 1, RamificationSpec::new().with(1, 4)).unwrap();
        assert_eq!(z.genus_total().unwrap(), 3);
        assert_eq!(s3_spec().genus_total().unwrap(), 3);
        for g in 0..4 {
            let t = CoverSpec::new(galois(&[], 1), g, RamificationSpec::new()).unwrap();
            assert_eq!(t.genus_total().unwrap(), g as i64);
        }
        let odd = CoverSpec::new(z2(), 1, RamificationSpec::new().with(1, 3)).unwrap();
        assert_eq!(odd.genus_total(), Err(Error::OddRamificationDegree { quotient: None }));
        let neg = CoverSpec::new(z2(), 0, RamificationSpec::new()).unwrap();
        assert!(matches!(neg.genus_total(), Err(Error::NegativeGenus { .. })));
    }

    #[test]
    fn quotient_genus() {
        let s = s3_spec();
        assert_eq!(s.genus_quotient(0).unwrap(), s.genus_total().unwrap());
        assert_eq!(s.group().double_coset_count(1, 1), 2);
        assert_eq!(s.group().double_coset_count(2, 1), 1);
        assert_eq!(s.genus_quotient(1).unwrap(), 1);
        // X/G = Y for G = Z/2.
        let z = CoverSpec::new(z2(), 3, RamificationSpec::new().with(1, 6)).unwrap();
        assert_eq!(z.genus_quotient(1).unwrap(), 3);
        assert!(matches!(s.genus_quotient(3), Err(Error::IndexOutOfRange { index: 3, len: 3 })));
    }

    #[test]
    fn solver_examples() {
        let z = CoverSpec::new(z2(), 1, RamificationSpec::new().with(1, 4)).unwrap();
        assert_eq!(z.isotypic_dims_solve().unwrap(), vec![1, 2]);
        assert_eq!(s3_spec().isotypic_dims_solve().unwrap(), vec![0, 1, 1]);
        let unramified = CoverSpec::new(s3(), 1, RamificationSpec::new()).unwrap();
        assert_eq!(unramified.isotypic_dims_solve().unwrap(), vec![1, 0, 0]);
    }

    #[test]
    fn closed_form_examples() {
        for g in 0..4u64 {
            for r in [2u64, 4, 6] {
                let z = CoverSpec::new(z2(), g, RamificationSpec::new().with(1, r)).unwrap();
                assert_eq!(z.prym_dim_formula(1).unwrap(), g as i64 - 1 + r as i64 / 2);
            }
        }
        assert_eq!(s3_spec().prym_dim_formula(2).unwrap(), 1);
        let unramified = CoverSpec::new(s3(), 1, RamificationSpec::new()).unwrap();
        for j in 1..3 {
            assert_eq!(unramified.prym_dim_formula(j).unwrap(), 0);
        }
        let odd = CoverSpec::new(z2(), 1, RamificationSpec::new().with(1, 3)).unwrap();
        assert!(matches!(odd.prym_dim_formula(1), Err(Error::NonIntegerDimension { irrep: 1, .. })));
    }

    #[test]
    fn validation() {
        let report = s3_spec().validate();
        assert!(report.is_clean(), "{:?}", report.diagnostics);
        assert!(report.method_agreement);
        assert_eq!(report.integer_dims().unwrap(), vec![0, 1, 1]);

        let odd = CoverSpec::new(z2(), 1, RamificationSpec::new().with(1, 3)).unwrap().validate();
        assert!(odd.diagnostics.contains(&Diagnostic::OddRamificationDegree { quotient: None }));

        let t = CoverSpec::new(galois(&[], 1), 0, RamificationSpec::new()).unwrap().validate();
        assert_eq!(t.integer_genus_total(), Some(0));
        assert_eq!(t.integer_dims().unwrap(), vec![0]);
        assert!(t.is_clean());
    }

    #[test]
    fn rejects_trivial_class_key() {
        assert_eq!(
            CoverSpec::new(s3(), 0, RamificationSpec::new().with(0, 2)).unwrap_err(),
            Error::InvalidRamificationClass(0)
        );
        assert_eq!(
            CoverSpec::new(s3(), 0, RamificationSpec::new().with(3, 2)).unwrap_err(),
            Error::InvalidRamificationClass(3)
        );
    }
}
