use std::fmt;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use prym_core::chartable::irrep_label;
use prym_core::exactla::rational;
use prym_core::monodromy::DEFAULT_SEED;
use prym_core::permgroup::DEFAULT_CAP;
use prym_core::specio::ResolvedGroup;
use prym_core::verify::{run_suite, SuiteOptions};
use prym_core::weyl::parse_weyl_name;
use prym_core::{
    Error, GaloisGroup, GroupSource, PermGroup, Permutation, ReflectionSplit, SpecDocument, WeylGroup, WeylType,
};
use serde::Serialize;

use crate::render;
use crate::report::{
    CharacterTableSection, ChartableDocument, ClassEntry, GroupInfo, GroupSummary, MatchStatus, PresetCheck,
    Quantity, ReportDocument, Timing, VerifyDocument, WeylSummary, fixed_dim_rows,
};

#[derive(Debug, Parser)]
#[command(
    name = "prym",
    version,
    about = "Dimensions of Prym varieties of Galois covers of curves",
    long_about = "Computes genera of quotient curves and the dimensions of the isotypic \
                  Prym varieties of a Galois cover X -> Y whose group has rational \
                  characters, from the base genus and the branch data."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Seed for randomized checks
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    pub seed: u64,

    /// Largest group order to enumerate
    #[arg(long, default_value_t = DEFAULT_CAP, global = true)]
    pub cap: usize,

    /// Where reflection branch points go in non-simply-laced presets:
    /// long, short, even, or roots (in proportion to the roots of each length)
    #[arg(long, default_value = "long", value_parser = parse_split, global = true)]
    pub reflection_split: ReflectionSplit,

    /// Include wall-clock timing in reports
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Genera and Prym dimensions for a cover given as a JSON spec ("-" reads stdin)
    Dims { spec: PathBuf },
    /// Toda, Hitchin and twisted Hitchin cameral covers
    Preset(PresetArgs),
    /// Run the consistency checks on a group
    Verify {
        #[command(flatten)]
        group: GroupArgs,
        /// Random branch tuples to check against the monodromy oracle
        #[arg(long, default_value_t = 50)]
        tuples: usize,
        /// Random specs on which to compare the closed form with the solver
        #[arg(long, default_value_t = 50)]
        specs: usize,
    },
    /// Character table and fixed-point dimensions
    Chartable {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Order, conjugacy classes and Weyl data
    GroupInfo {
        #[command(flatten)]
        group: GroupArgs,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GroupArgs {
    /// Weyl group such as A3, B2, G2 or F4
    #[arg(long)]
    pub weyl: Option<String>,
    /// Generators in cycle notation, e.g. "(0 1)" "(0 1 2)"
    #[arg(long, num_args = 1..)]
    pub generators: Option<Vec<String>>,
    /// Take the group from a JSON spec
    #[arg(long)]
    pub spec: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PresetKind {
    Toda,
    Hitchin,
    Markman,
}

impl fmt::Display for PresetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Toda => "toda",
            Self::Hitchin => "hitchin",
            Self::Markman => "markman",
        })
    }
}

#[derive(Debug, Args)]
pub struct PresetArgs {
    pub kind: PresetKind,
    /// Weyl type: A, B, C, D, G or F
    #[arg(value_parser = parse_type)]
    pub weyl_type: WeylType,
    pub rank: usize,
    /// Genus of the base curve (hitchin, markman)
    #[arg(long)]
    pub genus: Option<u64>,
    /// Degree of the twisting divisor (markman)
    #[arg(long = "deg-d", visible_alias = "degD")]
    pub deg_d: Option<u64>,
}

fn parse_split(s: &str) -> Result<ReflectionSplit, Error> {
    s.parse()
}

fn parse_type(s: &str) -> Result<WeylType, Error> {
    s.parse()
}

/// Process exit codes.
pub mod exit {
    pub const CLEAN: u8 = 0;
    pub const INPUT: u8 = 1;
    pub const DIAGNOSTICS: u8 = 2;
    pub const INTERNAL: u8 = 3;
}

#[derive(Debug)]
pub struct CliError {
    pub message: String,
    pub code: u8,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            code: exit::INPUT,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::LiftFailure(_)
            | Error::TableVerification(_)
            | Error::NonIntegerFixedDim { .. }
            | Error::SingularMatrix
            | Error::Singular
            | Error::NotSquare { .. }
            | Error::DimensionMismatch { .. } => exit::INTERNAL,
            Error::OddRamificationDegree { .. }
            | Error::NegativeGenus { .. }
            | Error::NonIntegerSolution { .. }
            | Error::NonIntegerDimension { .. } => exit::DIAGNOSTICS,
            _ => exit::INPUT,
        };
        Self {
            message: e.to_string(),
            code,
        }
    }
}

/// Rendered output and the exit code that goes with it.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub code: u8,
}

fn emit<T: Serialize>(
    format: Format,
    doc: &T,
    text: impl Fn(&T) -> String,
    tsv: impl Fn(&T) -> String,
    code: u8,
) -> Output {
    let text = match format {
        Format::Json => serde_json::to_string_pretty(doc).expect("reports serialize") + "\n",
        Format::Text => text(doc),
        Format::Tsv => tsv(doc),
    };
    Output { text, code }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::input(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
    }
}

fn load_spec(path: &Path) -> Result<SpecDocument, CliError> {
    let text = read_input(path)?;
    SpecDocument::parse(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn resolve_group(args: &GroupArgs, cap: usize) -> Result<ResolvedGroup, CliError> {
    let source = match (&args.weyl, &args.generators, &args.spec) {
        (Some(name), _, _) => {
            let (kind, rank) = parse_weyl_name(name)?;
            GroupSource::Weyl { kind, rank }
        }
        (_, Some(gens), _) => GroupSource::Generators(gens.clone()),
        (_, _, Some(path)) => load_spec(path)?.group,
        _ => return Err(CliError::input("one of --weyl, --generators or --spec is required")),
    };
    Ok(source.resolve(cap)?)
}

/// A plain permutation group from the arguments, without requiring
/// rational characters.
fn resolve_plain(args: &GroupArgs, cap: usize) -> Result<(PermGroup, Option<WeylGroup>), CliError> {
    let gens = match (&args.weyl, &args.generators, &args.spec) {
        (Some(_), _, _) => None,
        (_, Some(gens), _) => Some(gens.clone()),
        (_, _, Some(path)) => match load_spec(path)?.group {
            GroupSource::Generators(gens) => Some(gens),
            GroupSource::Weyl { .. } => None,
        },
        _ => None,
    };
    match gens {
        Some(gens) => {
            let perms = gens
                .iter()
                .map(|s| s.parse::<Permutation>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(Error::from)?;
            Ok((PermGroup::from_generators(&perms, cap)?, None))
        }
        None => {
            let ResolvedGroup::Weyl(w) = resolve_group(args, cap)? else {
                unreachable!("Weyl sources resolve to Weyl groups")
            };
            Ok((w.group().clone(), Some(*w)))
        }
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let started = Instant::now();
    let timing = |doc: &mut ReportDocument| {
        if cli.timing {
            doc.timing = Some(Timing {
                elapsed_ms: started.elapsed().as_secs_f64() * 1000.0,
            });
        }
    };
    match &cli.command {
        Command::Dims { spec } => {
            let input = load_spec(spec)?;
            let group = input.group.resolve(cli.cap)?;
            let cover = input.to_spec(group.galois())?;
            let mut doc = ReportDocument::build(input, &cover);
            timing(&mut doc);
            let code = if doc.is_clean() { exit::CLEAN } else { exit::DIAGNOSTICS };
            Ok(emit(cli.format, &doc, render::report_text, render::report_tsv, code))
        }
        Command::Preset(args) => {
            let mut doc = preset(args, cli)?;
            timing(&mut doc);
            let code = if doc.is_clean() { exit::CLEAN } else { exit::DIAGNOSTICS };
            Ok(emit(cli.format, &doc, render::report_text, render::report_tsv, code))
        }
        Command::Verify { group, tuples, specs } => {
            let galois = resolve_group(group, cli.cap)?.galois().clone();
            let options = SuiteOptions {
                specs: *specs,
                tuples: *tuples,
                seed: cli.seed,
            };
            let doc = VerifyDocument {
                group: GroupSummary::of(galois.group(), galois.class_count()),
                seed: cli.seed,
                report: run_suite(&galois, &options),
            };
            let code = if doc.report.passed() { exit::CLEAN } else { exit::DIAGNOSTICS };
            Ok(emit(cli.format, &doc, render::verify_text, render::verify_tsv, code))
        }
        Command::Chartable { group } => {
            let galois = resolve_group(group, cli.cap)?.galois().clone();
            let doc = chartable(&galois);
            Ok(emit(cli.format, &doc, render::chartable_text, render::chartable_tsv, exit::CLEAN))
        }
        Command::GroupInfo { group } => {
            let (group, weyl) = resolve_plain(group, cli.cap)?;
            let doc = group_info(&group, weyl.as_ref());
            Ok(emit(cli.format, &doc, render::group_info_text, render::group_info_tsv, exit::CLEAN))
        }
    }
}

fn chartable(galois: &Arc<GaloisGroup>) -> ChartableDocument {
    ChartableDocument {
        group: GroupSummary::of(galois.group(), galois.class_count()),
        character_table: CharacterTableSection::of(galois),
        fixed_dims: fixed_dim_rows(galois),
    }
}

fn group_info(group: &PermGroup, weyl: Option<&WeylGroup>) -> GroupInfo {
    let classes = group.conjugacy_classes();
    GroupInfo {
        group: GroupSummary::of(group, classes.len()),
        generators: group.generators().iter().map(ToString::to_string).collect(),
        exponent: group.exponent(),
        rational: group.is_rational(&classes),
        classes: classes
            .iter()
            .map(|c| ClassEntry {
                representative: group.element(c.representative).to_string(),
                size: c.size,
                order: c.element_order,
            })
            .collect(),
        weyl: weyl.map(WeylSummary::of),
    }
}

fn preset(args: &PresetArgs, cli: &Cli) -> Result<ReportDocument, CliError> {
    let w = WeylGroup::new(args.weyl_type, args.rank, cli.cap)?;
    let split = cli.reflection_split;
    let genus = || {
        args.genus
            .ok_or_else(|| CliError::input(format!("the {} preset needs --genus", args.kind)))
    };
    let (spec, genus, deg_d, expected) = match args.kind {
        PresetKind::Toda => (w.toda_preset(split), 0, 0, rational(w.expected_toda_dim())),
        PresetKind::Hitchin => {
            let g = genus()?;
            (w.hitchin_preset(g, split)?, g, 0, w.expected_twisted_dim(g, 0))
        }
        PresetKind::Markman => {
            let g = genus()?;
            let d = args
                .deg_d
                .ok_or_else(|| CliError::input("the markman preset needs --degD"))?;
            (w.markman_preset(g, d, split)?, g, d, w.expected_twisted_dim(g, d))
        }
    };
    let base_dim = match args.kind {
        PresetKind::Toda => None,
        _ => w.expected_base_dim(genus, deg_d).ok(),
    };
    let input = SpecDocument::from_spec(
        GroupSource::Weyl {
            kind: args.weyl_type,
            rank: args.rank,
        },
        &spec,
    );
    let mut doc = ReportDocument::build(input, &spec);
    let rep = w.reflection_rep();
    let report = spec.validate();
    let dim = &report.dims[rep];
    let matches = *dim == expected
        && report.formula_dims[rep] == expected
        && base_dim.is_none_or(|b| rational(b) == expected);
    doc.preset = Some(PresetCheck {
        kind: args.kind.to_string(),
        weyl: w.name(),
        base_genus: genus,
        deg_d,
        irrep: irrep_label(rep, w.galois().table().degree(rep)),
        dim: Quantity::from(dim),
        expected: Quantity::from(&expected),
        base_dim,
        status: if matches { MatchStatus::Match } else { MatchStatus::Mismatch },
    });
    Ok(doc)
}
