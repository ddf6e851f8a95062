//! Exact character tables of rational-character groups and the matrix of
//! fixed-space dimensions `dim ρ_j^{H_i}`.
//!
//! Tables are computed with the Dixon–Schneider method: the class sums act
//! on the centre of the group algebra through integer structure constants,
//! their common eigenvectors over a suitable prime field are the central
//! characters, and each character value is recovered from its eigenvalue
//! multiplicities on the cyclic subgroup generated by a class
//! representative. Every table is checked against both orthogonality
//! relations before it is returned.

mod dixon;
pub(crate) mod modp;

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exactla::{rational, to_i64, BigRational, RationalMatrix};
use crate::permgroup::{ConjugacyClasses, CyclicClass, PermGroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    group_order: usize,
    class_sizes: Vec<usize>,
    class_reps: Vec<usize>,
    inverse_class: Vec<usize>,
    /// `table[j][k] = χ_j(g_k)`; rows are irreps, columns classes.
    table: Vec<Vec<i64>>,
}

impl CharacterTable {
    /// Computes and verifies the character table of a rational group.
    pub fn compute(group: &PermGroup, classes: &ConjugacyClasses) -> Result<Self> {
        if !group.is_rational(classes) {
            return Err(Error::NotRationalGroup);
        }
        let rows = dixon::irreducible_characters(group, classes)?;
        let table = Self {
            group_order: group.order(),
            class_sizes: classes.iter().map(|c| c.size).collect(),
            class_reps: classes.iter().map(|c| c.representative).collect(),
            inverse_class: (0..classes.len())
                .map(|k| classes.inverse_class(group, k))
                .collect(),
            table: sort_rows(rows),
        };
        table.verify()?;
        Ok(table)
    }

    /// Number of irreducible characters (= number of classes).
    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn class_representatives(&self) -> &[usize] {
        &self.class_reps
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.table
    }

    pub fn value(&self, irrep: usize, class: usize) -> i64 {
        self.table[irrep][class]
    }

    /// `χ_j(e)`.
    pub fn degree(&self, irrep: usize) -> i64 {
        self.table[irrep][0]
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.table.iter().map(|r| r[0]).collect()
    }

    pub const fn trivial_index(&self) -> usize {
        0
    }

    /// Row whose values equal `values`, if any.
    pub fn find_row(&self, values: &[i64]) -> Option<usize> {
        self.table.iter().position(|r| r == values)
    }

    /// `Σ_k |C_k| χ_j(g_k) χ_j'(g_k⁻¹)` for a pair of rows.
    pub fn row_inner_product(&self, j: usize, jp: usize) -> i64 {
        (0..self.len())
            .map(|k| {
                self.class_sizes[k] as i64 * self.table[j][k] * self.table[jp][self.inverse_class[k]]
            })
            .sum()
    }

    /// `Σ_j χ_j(g_k) χ_j(g_k'⁻¹)` for a pair of columns.
    pub fn column_inner_product(&self, k: usize, kp: usize) -> i64 {
        let kp_inv = self.inverse_class[kp];
        self.table.iter().map(|r| r[k] * r[kp_inv]).sum()
    }

    /// Checks both orthogonality relations exactly.
    pub fn verify(&self) -> Result<()> {
        let n = self.len();
        let order = self.group_order as i64;
        for j in 0..n {
            if self.degree(j) <= 0 {
                return Err(Error::TableVerification(format!("row {j} has degree {}", self.degree(j))));
            }
            for jp in 0..n {
                let expect = if j == jp { order } else { 0 };
                let got = self.row_inner_product(j, jp);
                if got != expect {
                    return Err(Error::TableVerification(format!(
                        "rows {j},{jp}: inner product {got}, expected {expect}"
                    )));
                }
            }
        }
        for k in 0..n {
            for kp in 0..n {
                let expect = if k == kp {
                    order / self.class_sizes[k] as i64
                } else {
                    0
                };
                let got = self.column_inner_product(k, kp);
                if got != expect {
                    return Err(Error::TableVerification(format!(
                        "columns {k},{kp}: inner product {got}, expected {expect}"
                    )));
                }
            }
        }
        if self.table[0].iter().any(|&x| x != 1) {
            return Err(Error::TableVerification("first row is not trivial".into()));
        }
        Ok(())
    }

    /// `dim ρ_j^H = (1/|H|) Σ_{a∈H} χ_j(a)`, evaluated through the class
    /// profile of `H`.
    pub fn fixed_dim(&self, irrep: usize, cyclic: &CyclicClass, class_index: usize) -> Result<i64> {
        let sum: i64 = cyclic
            .member_class_profile
            .iter()
            .enumerate()
            .map(|(c, &count)| count as i64 * self.table[irrep][c])
            .sum();
        let h = cyclic.subgroup_order as i64;
        if sum % h != 0 || sum < 0 {
            return Err(Error::NonIntegerFixedDim {
                irrep,
                class: class_index,
            });
        }
        Ok(sum / h)
    }

    /// Tab-separated export: a header of class representatives, a row of
    /// class sizes, then one row per irreducible character.
    pub fn to_tsv(&self, group: &PermGroup) -> String {
        let mut out = String::from("class");
        for &r in &self.class_reps {
            write!(out, "\t{}", group.element(r)).unwrap();
        }
        out.push_str("\nsize");
        for s in &self.class_sizes {
            write!(out, "\t{s}").unwrap();
        }
        out.push('\n');
        for (j, row) in self.table.iter().enumerate() {
            write!(out, "{}", irrep_label(j, row[0])).unwrap();
            for v in row {
                write!(out, "\t{v}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// Stable irrep label: 1-based index and degree, e.g. `rho3[2]`.
pub fn irrep_label(index: usize, degree: i64) -> String {
    format!("rho{}[{}]", index + 1, degree)
}

fn sort_rows(mut rows: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    rows.sort_by(|a, b| {
        let ta = a.iter().all(|&x| x == 1);
        let tb = b.iter().all(|&x| x == 1);
        tb.cmp(&ta).then(a[0].cmp(&b[0])).then_with(|| a.cmp(b))
    });
    rows
}

/// `M[i][j] = dim ρ_j^{H_i}`; rows are cyclic classes, columns irreps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedDimMatrix {
    entries: Vec<Vec<i64>>,
}

impl FixedDimMatrix {
    /// Assembles the matrix and certifies that it is invertible.
    pub fn compute(table: &CharacterTable, cyclic: &[CyclicClass]) -> Result<Self> {
        if cyclic.len() != table.len() {
            return Err(Error::DimensionMismatch {
                expected: table.len(),
                found: cyclic.len(),
            });
        }
        let entries = cyclic
            .iter()
            .enumerate()
            .map(|(i, k)| (0..table.len()).map(|j| table.fixed_dim(j, k, i)).collect())
            .collect::<Result<Vec<Vec<i64>>>>()?;
        let m = Self { entries };
        let det = m.to_rational().determinant()?;
        if det == rational(0) {
            return Err(Error::SingularMatrix);
        }
        Ok(m)
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn get(&self, cyclic: usize, irrep: usize) -> i64 {
        self.entries[cyclic][irrep]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_rational(&self) -> RationalMatrix {
        RationalMatrix::from_i64_rows(&self.entries).expect("square by construction")
    }

    pub fn determinant(&self) -> BigRational {
        self.to_rational().determinant().expect("square by construction")
    }

    /// The matrix `P` with `M = P · Xᵀ`, where `Xᵀ[k][j] = χ_j(g_k)` is the
    /// character table with classes as rows. Obtained by an exact solve, not
    /// from the class profiles.
    pub fn character_basis_change(&self, table: &CharacterTable) -> Result<RationalMatrix> {
        let xt = RationalMatrix::from_fn(table.len(), table.len(), |k, j| rational(table.value(j, k)));
        let inv = xt.inverse()?;
        self.to_rational().mul(&inv)
    }

    /// Whether the change of basis against the character table is lower
    /// triangular with nonzero diagonal.
    pub fn is_triangular_against(&self, table: &CharacterTable) -> Result<bool> {
        let p = self.character_basis_change(table)?;
        let diagonal_ok = (0..p.rows()).all(|i| to_i64(&p[(i, i)]) != Some(0));
        Ok(p.is_lower_triangular() && diagonal_ok)
    }
}
