//! Serializable report documents. Every field is filled in a fixed order
//! from the pipeline, so the JSON form is byte-identical across runs.

use std::fmt;

use prym_core::chartable::irrep_label;
use prym_core::exactla::{to_i64, BigRational};
use prym_core::rhprym::Diagnostic;
use prym_core::verify::VerificationReport;
use prym_core::{CoverSpec, GaloisGroup, PermGroup, SpecDocument, WeylGroup};
use serde::{Deserialize, Serialize};

/// An exact rational: a JSON integer when integral, otherwise a string
/// such as `"17/2"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Quantity {
    Integer(i64),
    Fraction(String),
}

impl From<&BigRational> for Quantity {
    fn from(q: &BigRational) -> Self {
        match to_i64(q) {
            Some(n) => Self::Integer(n),
            None => Self::Fraction(q.to_string()),
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Integer(n) => write!(f, "{n}"),
            Self::Fraction(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub order: usize,
    pub degree: usize,
    pub classes: usize,
}

impl GroupSummary {
    pub fn of(group: &PermGroup, classes: usize) -> Self {
        Self {
            order: group.order(),
            degree: group.degree(),
            classes,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub representative: String,
    pub size: usize,
    pub order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrrepEntry {
    pub label: String,
    pub degree: i64,
    pub values: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTableSection {
    pub classes: Vec<ClassEntry>,
    pub irreps: Vec<IrrepEntry>,
}

impl CharacterTableSection {
    pub fn of(galois: &GaloisGroup) -> Self {
        let group = galois.group();
        let classes = galois
            .classes()
            .iter()
            .map(|c| ClassEntry {
                representative: group.element(c.representative).to_string(),
                size: c.size,
                order: c.element_order,
            })
            .collect();
        let irreps = galois
            .table()
            .rows()
            .iter()
            .enumerate()
            .map(|(j, row)| IrrepEntry {
                label: irrep_label(j, row[0]),
                degree: row[0],
                values: row.clone(),
            })
            .collect();
        Self { classes, irreps }
    }
}

/// Row `i` of the fixed-dimension matrix: `dim ρ_j^{H_i}` for every `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedDimRow {
    pub subgroup: String,
    pub generator: String,
    pub order: usize,
    pub dims: Vec<i64>,
}

pub fn fixed_dim_rows(galois: &GaloisGroup) -> Vec<FixedDimRow> {
    let group = galois.group();
    galois
        .cyclic_classes()
        .iter()
        .enumerate()
        .map(|(i, h)| FixedDimRow {
            subgroup: subgroup_label(i),
            generator: group.element(h.generator).to_string(),
            order: h.subgroup_order,
            dims: galois.fixed_dims().entries()[i].clone(),
        })
        .collect()
}

pub fn subgroup_label(i: usize) -> String {
    format!("H{}", i + 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusEntry {
    pub subgroup: String,
    pub generator: String,
    pub index: usize,
    pub genus: Quantity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Genera {
    pub total: Quantity,
    pub quotients: Vec<GenusEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionEntry {
    pub irrep: String,
    pub degree: i64,
    pub dim: Quantity,
    pub closed_form: Quantity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum MatchStatus {
    Match,
    Mismatch,
}

impl fmt::Display for MatchStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Match => "MATCH",
            Self::Mismatch => "MISMATCH",
        })
    }
}

/// Comparison of a preset's `Prym_𝔱` dimension with the expected value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresetCheck {
    pub kind: String,
    pub weyl: String,
    pub base_genus: u64,
    pub deg_d: u64,
    pub irrep: String,
    pub dim: Quantity,
    pub expected: Quantity,
    /// Dimension of the Hitchin base, when Riemann–Roch applies.
    pub base_dim: Option<i64>,
    pub status: MatchStatus,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub input: SpecDocument,
    pub group: GroupSummary,
    pub character_table: CharacterTableSection,
    pub fixed_dims: Vec<FixedDimRow>,
    pub genera: Genera,
    pub dimensions: Vec<DimensionEntry>,
    pub diagnostics: Vec<Diagnostic>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<PresetCheck>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl ReportDocument {
    pub fn build(input: SpecDocument, spec: &CoverSpec) -> Self {
        let galois = spec.group();
        let group = galois.group();
        let report = spec.validate();
        let quotients = galois
            .cyclic_classes()
            .iter()
            .enumerate()
            .map(|(i, h)| GenusEntry {
                subgroup: subgroup_label(i),
                generator: group.element(h.generator).to_string(),
                index: galois.index_of_cyclic(i),
                genus: Quantity::from(&report.quotient_genera[i]),
            })
            .collect();
        let degrees = galois.table().degrees();
        let dimensions = degrees
            .iter()
            .enumerate()
            .map(|(j, &d)| DimensionEntry {
                irrep: irrep_label(j, d),
                degree: d,
                dim: Quantity::from(&report.dims[j]),
                closed_form: Quantity::from(&report.formula_dims[j]),
            })
            .collect();
        Self {
            input,
            group: GroupSummary::of(group, galois.class_count()),
            character_table: CharacterTableSection::of(galois),
            fixed_dims: fixed_dim_rows(galois),
            genera: Genera {
                total: Quantity::from(&report.genus_total),
                quotients,
            },
            dimensions,
            diagnostics: report.diagnostics,
            preset: None,
            timing: None,
        }
    }

    /// No diagnostics and no preset mismatch.
    pub fn is_clean(&self) -> bool {
        self.diagnostics.is_empty() && self.preset.as_ref().is_none_or(|p| p.status == MatchStatus::Match)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylSummary {
    pub name: String,
    pub rank: usize,
    pub lie_dim: usize,
    pub reflections: usize,
    pub coxeter_element: String,
    pub coxeter_number: u64,
    pub reflection_rep: String,
    pub invariant_degrees: Vec<u64>,
}

impl WeylSummary {
    pub fn of(w: &WeylGroup) -> Self {
        let table = w.galois().table();
        let rep = w.reflection_rep();
        Self {
            name: w.name(),
            rank: w.rank(),
            lie_dim: w.lie_dim(),
            reflections: w.reflections().len(),
            coxeter_element: w.group().element(w.coxeter_element()).to_string(),
            coxeter_number: w.coxeter_number(),
            reflection_rep: irrep_label(rep, table.degree(rep)),
            invariant_degrees: w.invariant_degrees().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub group: GroupSummary,
    pub generators: Vec<String>,
    pub exponent: u64,
    pub rational: bool,
    pub classes: Vec<ClassEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weyl: Option<WeylSummary>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChartableDocument {
    pub group: GroupSummary,
    pub character_table: CharacterTableSection,
    pub fixed_dims: Vec<FixedDimRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDocument {
    pub group: GroupSummary,
    pub seed: u64,
    pub report: VerificationReport,
}
