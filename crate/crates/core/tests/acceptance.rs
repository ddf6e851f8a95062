//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use prym_core::exactla::rational;
use prym_core::monodromy::{sample_tuple, seeded_rng, Oracle};
use prym_core::permgroup::DEFAULT_CAP;
use prym_core::rhprym::Diagnostic;
use prym_core::verify::{check_double_cosets, check_fixed_dim_matrix, check_orthogonality, check_random_specs};
use prym_core::weyl::FLEET;
use prym_core::{CoverSpec, Error, GaloisGroup, Permutation, RamificationSpec, ReflectionSplit, WeylGroup, WeylType};

struct Outcome {
    failures: Vec<String>,
    summary: String,
}

impl Outcome {
    fn new() -> Self {
        Self {
            failures: Vec::new(),
            summary: String::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }
}

fn galois(gens: &[&str]) -> Result<Arc<GaloisGroup>, Error> {
    let gens: Vec<Permutation> = gens.iter().map(|s| s.parse().unwrap()).collect();
    GaloisGroup::from_generators(&gens, DEFAULT_CAP).map(Arc::new)
}

fn classical_prym() -> Outcome {
    let mut out = Outcome::new();
    let z2 = galois(&["(0 1)"]).unwrap();
    let sign = 1;
    let mut cases = 0;
    for g in 0..=5u64 {
        for deg_r in (0..=10u64).step_by(2) {
            let spec = CoverSpec::new(z2.clone(), g, RamificationSpec::new().with(1, deg_r)).unwrap();
            let report = spec.validate();
            if g == 0 && deg_r == 0 {
                out.check(
                    report
                        .diagnostics
                        .iter()
                        .any(|d| matches!(d, Diagnostic::NegativeGenus { quotient: None, .. })),
                    || "unramified cover of P1 was not flagged".into(),
                );
                continue;
            }
            cases += 1;
            let expected = g as i64 - 1 + deg_r as i64 / 2;
            let solved = spec.isotypic_dims_solve().map(|d| d[sign]);
            let formula = spec.prym_dim_formula(sign);
            out.check(
                solved == Ok(expected) && formula == Ok(expected) && report.is_clean(),
                || format!("g={g} deg R={deg_r}: solve {solved:?}, formula {formula:?}, expected {expected}"),
            );
        }
    }
    let headline = CoverSpec::new(z2, 1, RamificationSpec::new().with(1, 4)).unwrap();
    out.check(headline.prym_dim_formula(sign) == Ok(2), || "g=1, deg R=4 is not 2".into());
    out.summary = format!("{cases} (g, deg R) pairs plus the flagged g=0, deg R=0 case");
    out
}

fn toda(fleet: &[WeylGroup]) -> Outcome {
    let mut out = Outcome::new();
    for w in fleet {
        let spec = w.toda_preset(ReflectionSplit::Long);
        let rep = w.reflection_rep();
        let r = w.rank() as i64;
        let solved = spec.isotypic_dims_solve().map(|d| d[rep]);
        let formula = spec.prym_dim_formula(rep);
        out.check(solved == Ok(r) && formula == Ok(r), || {
            format!("{}: solve {solved:?}, formula {formula:?}, rank {r}", w.name())
        });
    }
    out.summary = format!("{} Weyl groups, dimension = rank", fleet.len());
    out
}

fn hitchin(fleet: &[WeylGroup]) -> Outcome {
    let mut out = Outcome::new();
    for w in fleet {
        for g in [2u64, 3] {
            let spec = w.hitchin_preset(g, ReflectionSplit::Long).unwrap();
            let rep = w.reflection_rep();
            let expected = w.lie_dim() as i64 * (g as i64 - 1);
            let solved = spec.isotypic_dims_solve().map(|d| d[rep]);
            let base = w.expected_base_dim(g, 0);
            out.check(solved == Ok(expected) && base == Ok(expected), || {
                format!("{} g={g}: solve {solved:?}, base {base:?}, expected {expected}", w.name())
            });
        }
    }
    out.summary = format!("{} cases, dimension = dim G (g - 1) = base dimension", 2 * fleet.len());
    out
}

fn markman(fleet: &[WeylGroup]) -> Outcome {
    let mut out = Outcome::new();
    let (mut checked, mut parity_skipped) = (0, 0);
    for w in fleet {
        for g in [1u64, 2] {
            for deg_d in [1u64, 2, 4] {
                let spec = w.markman_preset(g, deg_d, ReflectionSplit::Long).unwrap();
                let report = spec.validate();
                if report
                    .diagnostics
                    .iter()
                    .any(|d| matches!(d, Diagnostic::OddRamificationDegree { .. }))
                {
                    parity_skipped += 1;
                    continue;
                }
                checked += 1;
                let rep = w.reflection_rep();
                let expected = w.expected_twisted_dim(g, deg_d);
                let dims = report.dims[rep].clone();
                let base = w.expected_base_dim(g, deg_d).map(rational);
                out.check(dims == expected && base == Ok(expected.clone()), || {
                    format!("{} g={g} deg D={deg_d}: got {dims}, base {base:?}, expected {expected}", w.name())
                });
            }
        }
    }
    out.check(checked > 0, || "no parity-valid case".into());
    out.summary = format!("{checked} parity-valid cases ({parity_skipped} skipped for parity)");
    out
}

fn closed_form_vs_solve(fleet: &[WeylGroup]) -> Outcome {
    let mut out = Outcome::new();
    let mut rng = seeded_rng(2024);
    for w in fleet {
        let check = check_random_specs(w.galois(), 200, &mut rng);
        out.check(check.passed, || format!("{}: {}", w.name(), check.detail));
    }
    out.summary = format!("200 random specs for each of {} groups", fleet.len());
    out
}

fn double_cosets(fleet: &[WeylGroup]) -> Outcome {
    let mut out = Outcome::new();
    let mut pairs = 0;
    for w in fleet {
        let n = w.galois().class_count();
        pairs += n * n;
        let check = check_double_cosets(w.galois());
        out.check(check.passed, || format!("{}: {}", w.name(), check.detail));
    }
    out.summary = format!("{pairs} pairs of cyclic classes");
    out
}

fn orthogonality_and_triangularity(fleet: &[WeylGroup]) -> Outcome {
    let mut out = Outcome::new();
    for w in fleet {
        for check in [check_orthogonality(w.galois()), check_fixed_dim_matrix(w.galois())] {
            out.check(check.passed, || format!("{} {}: {}", w.name(), check.name, check.detail));
        }
    }
    out.summary = format!("{} character tables and fixed-dimension matrices", fleet.len());
    out
}

fn monodromy_oracle(fleet: &[WeylGroup]) -> Outcome {
    let mut out = Outcome::new();
    let find = |kind, rank| {
        fleet
            .iter()
            .find(|w| w.kind() == kind && w.rank() == rank)
            .unwrap()
            .galois()
            .clone()
    };
    let groups = [
        ("S3", galois(&["(0 1)", "(0 1 2)"]).unwrap()),
        ("S4", galois(&["(0 1)", "(0 1 2 3)"]).unwrap()),
        ("W(B2)", find(WeylType::B, 2)),
        ("W(G2)", find(WeylType::G, 2)),
    ];
    let mut rng = seeded_rng(7);
    let mut total = 0;
    for (name, g) in &groups {
        let oracle = Oracle::new(g.clone());
        let mut sampled = 0;
        while sampled < 125 {
            let genus = (sampled % 2) as u64;
            let b = if genus == 0 {
                rand::Rng::random_range(&mut rng, 3..=6)
            } else {
                rand::Rng::random_range(&mut rng, 1..=4)
            };
            let Ok(tuple) = sample_tuple(g.group(), genus, b, 5000, &mut rng) else {
                continue;
            };
            sampled += 1;
            out.check(tuple.is_valid(g.group()), || format!("{name}: invalid tuple {tuple:?}"));
            let mismatches = oracle.verify(&tuple);
            out.check(mismatches.is_empty(), || {
                let list: Vec<String> = mismatches.iter().map(ToString::to_string).collect();
                format!("{name}: {}", list.join(", "))
            });
        }
        total += sampled;
    }
    out.summary = format!("{total} tuples over S3, S4, W(B2), W(G2)");
    out
}

fn rationality(fleet: &[WeylGroup]) -> Outcome {
    let mut out = Outcome::new();
    for w in fleet {
        let group = w.group();
        let classes = group.conjugacy_classes();
        out.check(group.is_rational(&classes), || format!("{} is not rational", w.name()));
        out.check(w.galois().cyclic_classes().len() == classes.len(), || {
            format!("{}: cyclic and conjugacy class counts differ", w.name())
        });
    }
    for (name, gens) in [("Z/3", "(0 1 2)"), ("Z/5", "(0 1 2 3 4)")] {
        let g = prym_core::PermGroup::from_generators(&[gens.parse().unwrap()], DEFAULT_CAP).unwrap();
        out.check(!g.is_rational(&g.conjugacy_classes()), || format!("{name} passed the rationality test"));
        out.check(matches!(galois(&[gens]), Err(Error::NotRationalGroup)), || {
            format!("{name} was accepted as a Galois group")
        });
    }
    out.summary = format!("{} rational Weyl groups; Z/3 and Z/5 rejected", fleet.len());
    out
}

fn report(number: usize, title: &str, elapsed: Duration, limit: Option<Duration>, outcome: &Outcome) -> bool {
    let over = limit.is_some_and(|l| elapsed > l);
    let passed = outcome.failures.is_empty() && !over;
    println!(
        "[{}] criterion {number}: {title}: {} ({:.2?})",
        if passed { "PASS" } else { "FAIL" },
        outcome.summary,
        elapsed
    );
    for f in &outcome.failures {
        println!("       {f}");
    }
    if let Some(l) = limit.filter(|_| over) {
        println!("       exceeded time limit {l:?}");
    }
    passed
}

fn main() -> ExitCode {
    let start = Instant::now();
    let t = Instant::now();
    let c1 = classical_prym();
    let mut all = report(1, "classical Prym", t.elapsed(), Some(Duration::from_secs(1)), &c1);

    let t = Instant::now();
    let fleet: Vec<WeylGroup> = FLEET
        .iter()
        .map(|&(kind, rank)| WeylGroup::new(kind, rank, DEFAULT_CAP).expect("fleet group builds"))
        .collect();
    let build = t.elapsed();
    println!("       built {} Weyl groups in {build:.2?}", fleet.len());

    let t = Instant::now();
    let c2 = toda(&fleet);
    all &= report(2, "Toda", build + t.elapsed(), Some(Duration::from_secs(300)), &c2);
    let t = Instant::now();
    let c3 = hitchin(&fleet);
    all &= report(3, "Hitchin", build + t.elapsed(), Some(Duration::from_secs(300)), &c3);
    let t = Instant::now();
    let c4 = markman(&fleet);
    all &= report(4, "twisted Hitchin", t.elapsed(), None, &c4);
    let t = Instant::now();
    let c5 = closed_form_vs_solve(&fleet);
    all &= report(5, "closed form vs exact solve", t.elapsed(), None, &c5);
    let t = Instant::now();
    let c6 = double_cosets(&fleet);
    all &= report(6, "double-coset identity", t.elapsed(), None, &c6);
    let t = Instant::now();
    let c7 = orthogonality_and_triangularity(&fleet);
    all &= report(7, "orthogonality and triangularity", t.elapsed(), None, &c7);
    let t = Instant::now();
    let c8 = monodromy_oracle(&fleet);
    all &= report(8, "monodromy oracle", t.elapsed(), Some(Duration::from_secs(120)), &c8);
    let t = Instant::now();
    let c9 = rationality(&fleet);
    all &= report(9, "rationality", t.elapsed(), None, &c9);

    println!(
        "acceptance: {} ({:.2?} total)",
        if all { "all criteria pass" } else { "FAILURES" },
        start.elapsed()
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
