//! Self-checks on a rational group: each one recomputes a quantity by a
//! second route and compares exactly.

use std::sync::Arc;

use num_integer::Integer;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galois::GaloisGroup;
use crate::monodromy::{sample_tuple, Oracle};
use crate::rhprym::{CoverSpec, Diagnostic, RamificationSpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, failures: &[String], ok_detail: String) -> Self {
        Self {
            name: name.to_string(),
            passed: failures.is_empty(),
            detail: if failures.is_empty() {
                ok_detail
            } else {
                let mut d = failures.iter().take(5).cloned().collect::<Vec<_>>().join("; ");
                if failures.len() > 5 {
                    d.push_str(&format!("; and {} more", failures.len() - 5));
                }
                d
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub group_order: usize,
    pub class_count: usize,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    pub specs: usize,
    pub tuples: usize,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            specs: 50,
            tuples: 50,
            seed: crate::monodromy::DEFAULT_SEED,
        }
    }
}

/// Runs every check. Randomized checks draw from one generator seeded with
/// `options.seed`, so reports are reproducible.
pub fn run_suite(galois: &Arc<GaloisGroup>, options: &SuiteOptions) -> VerificationReport {
    let mut rng = crate::monodromy::seeded_rng(options.seed);
    let mut checks = vec![
        check_orthogonality(galois),
        check_conjugate_generators(galois),
        check_fixed_dim_matrix(galois),
        check_double_cosets(galois),
        check_induced_degrees(galois),
    ];
    if options.specs > 0 {
        checks.push(check_random_specs(galois, options.specs, &mut rng));
    }
    if options.tuples > 0 {
        checks.push(check_random_tuples(galois, options.tuples, &mut rng));
    }
    VerificationReport {
        group_order: galois.order(),
        class_count: galois.class_count(),
        checks,
    }
}

/// Row and column orthogonality of the character table.
pub fn check_orthogonality(galois: &GaloisGroup) -> Check {
    let failures: Vec<String> = galois.table().verify().err().map(|e| e.to_string()).into_iter().collect();
    Check::new(
        "orthogonality",
        &failures,
        format!("{} irreducible characters", galois.table().len()),
    )
}

/// Every generator of a cyclic subgroup is conjugate to the chosen one, so
/// cyclic classes and conjugacy classes correspond one to one.
pub fn check_conjugate_generators(galois: &GaloisGroup) -> Check {
    let group = galois.group();
    let classes = galois.classes();
    let mut failures = Vec::new();
    if galois.cyclic_classes().len() != classes.len() {
        failures.push(format!(
            "{} cyclic classes but {} conjugacy classes",
            galois.cyclic_classes().len(),
            classes.len()
        ));
    }
    for (i, h) in galois.cyclic_classes().iter().enumerate() {
        let x = h.generator;
        let o = group.element_order(x);
        for k in (1..o).filter(|k| k.gcd(&o) == 1) {
            if classes.class_of(group.pow(x, k)) != classes.class_of(x) {
                failures.push(format!("H{}: generator power {k} leaves the class", i + 1));
            }
        }
    }
    Check::new(
        "conjugate_generators",
        &failures,
        format!("{} cyclic classes", galois.class_count()),
    )
}

/// The fixed-dimension matrix is invertible and triangular against the
/// character table after ordering by subgroup size.
pub fn check_fixed_dim_matrix(galois: &GaloisGroup) -> Check {
    let m = galois.fixed_dims();
    let det = m.determinant();
    let mut failures = Vec::new();
    if det == crate::exactla::rational(0) {
        failures.push("determinant is zero".to_string());
    }
    match m.is_triangular_against(galois.table()) {
        Ok(true) => {}
        Ok(false) => failures.push("change of basis is not lower triangular".to_string()),
        Err(e) => failures.push(e.to_string()),
    }
    Check::new("fixed_dim_matrix", &failures, format!("determinant {det}"))
}

/// `Σ_j dim ρ_j^{H_k} dim ρ_j^{H_i}` against orbit counts on `G/H_i` and
/// against a direct partition of `G` into double cosets.
pub fn check_double_cosets(galois: &GaloisGroup) -> Check {
    let group = galois.group();
    let m = galois.fixed_dims();
    let n = galois.class_count();
    let cyclic = galois.cyclic_classes();
    let mut failures = Vec::new();
    for k in 0..n {
        for i in 0..n {
            let character_sum: i64 = (0..n).map(|j| m.get(k, j) * m.get(i, j)).sum();
            let orbits = galois.double_coset_count(k, i);
            let partition =
                group.double_coset_count_by_partition(&cyclic[k].subgroup_elements, &cyclic[i].subgroup_elements);
            if character_sum != orbits as i64 || orbits != partition {
                failures.push(format!(
                    "(H{}, H{}): characters {character_sum}, orbits {orbits}, partition {partition}",
                    k + 1,
                    i + 1
                ));
            }
        }
    }
    Check::new("double_cosets", &failures, format!("{} pairs", n * n))
}

/// `Σ_j dim ρ_j^{H_i} · dim ρ_j = [G : H_i]`, the decomposition of the
/// permutation representation on `G/H_i`.
pub fn check_induced_degrees(galois: &GaloisGroup) -> Check {
    let m = galois.fixed_dims();
    let degrees = galois.table().degrees();
    let failures: Vec<String> = (0..galois.class_count())
        .filter_map(|i| {
            let sum: i64 = degrees.iter().enumerate().map(|(j, d)| m.get(i, j) * d).sum();
            let index = galois.index_of_cyclic(i) as i64;
            (sum != index).then(|| format!("H{}: {sum} != {index}", i + 1))
        })
        .collect();
    Check::new("induced_degrees", &failures, format!("{} subgroups", galois.class_count()))
}

/// Every validation passes apart from the comparison of the two routes.
fn is_admissible(spec: &CoverSpec) -> bool {
    spec.validate()
        .diagnostics
        .iter()
        .all(|d| matches!(d, Diagnostic::MethodDisagreement { .. }))
}

/// Draws a spec with base genus in `0..=3` and up to four branch points per
/// nontrivial class, keeping only specs whose genera and isotypic dimensions
/// are nonnegative integers. Every other draw doubles its counts, which
/// makes every ramification degree even.
pub fn random_spec<R: Rng + ?Sized>(galois: &Arc<GaloisGroup>, rng: &mut R, attempts: usize) -> Result<CoverSpec> {
    let n = galois.class_count();
    for attempt in 0..attempts {
        let genus = rng.random_range(0..=3u64);
        let mut ram = RamificationSpec::new();
        for k in 1..n {
            let count = rng.random_range(0..=4u64);
            if count > 0 {
                ram.add(k, if attempt % 2 == 1 { 2 * count } else { count });
            }
        }
        let spec = CoverSpec::new(galois.clone(), genus, ram)?;
        if is_admissible(&spec) {
            return Ok(spec);
        }
    }
    Err(Error::SamplingExhausted { attempts })
}

/// The closed form against the exact linear solve on `count` random specs.
pub fn check_random_specs<R: Rng + ?Sized>(galois: &Arc<GaloisGroup>, count: usize, rng: &mut R) -> Check {
    let mut failures = Vec::new();
    for s in 0..count {
        let spec = match random_spec(galois, rng, 1000) {
            Ok(spec) => spec,
            Err(e) => {
                failures.push(format!("spec {s}: {e}"));
                break;
            }
        };
        let report = spec.validate();
        if !report.method_agreement {
            let issues: Vec<String> = report.diagnostics.iter().map(ToString::to_string).collect();
            failures.push(format!("spec {s}: {}", issues.join(", ")));
        }
    }
    Check::new("closed_form_vs_solve", &failures, format!("{count} random specs"))
}

/// Branch-tuple oracle on `count` random tuples, alternating base genus 0
/// (3 to 6 branch points) and 1 (1 to 4 branch points).
pub fn check_random_tuples<R: Rng + ?Sized>(galois: &Arc<GaloisGroup>, count: usize, rng: &mut R) -> Check {
    let oracle = Oracle::new(galois.clone());
    let mut failures = Vec::new();
    let mut sampled = 0;
    let mut skipped = 0;
    for t in 0..count {
        let genus = (t % 2) as u64;
        let b = if genus == 0 { rng.random_range(3..=6) } else { rng.random_range(1..=4) };
        match sample_tuple(galois.group(), genus, b, 2000, rng) {
            Ok(tuple) => {
                sampled += 1;
                for m in oracle.verify(&tuple) {
                    failures.push(format!("tuple {t}: {m}"));
                }
            }
            Err(_) => skipped += 1,
        }
    }
    if sampled == 0 && count > 0 {
        failures.push("no tuple could be sampled".to_string());
    }
    Check::new(
        "monodromy_oracle",
        &failures,
        format!("{sampled} tuples agree ({skipped} draws exhausted)"),
    )
}
