//! `tangle`: four-qubit polynomial invariants from the command line.
//!
//! Exit codes: 0 success or Inconclusive, 1 DistinctClasses or a failed
//! orbit check, 2 usage or parse error, 3 zero input state.

mod input;
mod report;

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{ArgMatches, Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use tangle_core::catalog::{self, ParamKind, ParamValue, Params};
use tangle_core::classifier::{classify, discriminate, orbit_sample, Outcome, DEFAULT_TOLERANCE};
use tangle_core::invariants::{tangle_magnitudes, Invariant};
use tangle_core::ket::format_ket;
use tangle_core::{Error, InvariantSet, PureState4};

use input::{InputFormat, Source};
use report::{CheckInfo, EntryDetail, EntryInfo, InvariantsReport, OrbitReport, ParamInfo};

#[derive(Debug, Parser)]
#[command(
    name = "tangle",
    version,
    about = "SL(2,C) invariants and SLOCC classification of four-qubit states"
)]
struct Cli {
    /// Zero threshold for classification and relative tolerance for discrimination
    #[arg(long, global = true, allow_hyphen_values = true, default_value_t = DEFAULT_TOLERANCE, value_parser = parse_tolerance)]
    tolerance: f64,

    /// Seed for orbit sampling
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print all ten invariants and their tangle magnitudes
    Invariants(Input),
    /// Print the tangle-pattern family (and symmetric level for symmetric states)
    Classify(Input),
    /// Compare two states; exits 1 when they are provably in distinct SLOCC classes
    Discriminate(PairInput),
    /// List, inspect or emit catalog representatives
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Check invariant agreement and family stability along random SL(2,C) orbit samples
    OrbitCheck(OrbitArgs),
}

#[derive(Debug, Args)]
#[group(skip)]
#[command(group(clap::ArgGroup::new("source").required(true).multiple(false)))]
struct Input {
    /// State as a ket sum, e.g. "|0000> + |1111>"
    #[arg(long, group = "source")]
    ket: Option<String>,
    /// State file (`-` for standard input)
    #[arg(long, group = "source")]
    file: Option<String>,
    /// Catalog reference NAME or NAME:k=v;k=v
    #[arg(long, group = "source")]
    catalog: Option<String>,
    /// Format of --file contents
    #[arg(long, value_enum, default_value_t = InputFormat::Json)]
    input_format: InputFormat,
}

impl Input {
    fn source(&self) -> Source {
        match (&self.ket, &self.file, &self.catalog) {
            (Some(k), _, _) => Source::Ket(k.clone()),
            (_, Some(f), _) => Source::File(f.clone()),
            (_, _, Some(c)) => Source::Catalog(c.clone()),
            _ => unreachable!("clap enforces one source"),
        }
    }
}

/// Two states given by any combination of `--ket`, `--file` and
/// `--catalog`, taken in command-line order.
#[derive(Debug, Args)]
struct PairInput {
    #[arg(long, action = clap::ArgAction::Append)]
    ket: Vec<String>,
    #[arg(long, action = clap::ArgAction::Append)]
    file: Vec<String>,
    #[arg(long, action = clap::ArgAction::Append)]
    catalog: Vec<String>,
    /// Format of --file contents
    #[arg(long, value_enum, default_value_t = InputFormat::Json)]
    input_format: InputFormat,
}

#[derive(Debug, Subcommand)]
enum CatalogCommand {
    /// List every entry with its family label and source
    List,
    /// Show one entry: parameters, state, invariants and expected relations
    Show(EntryArgs),
    /// Write the state of one entry as a JSON state file
    Emit(EntryArgs),
}

#[derive(Debug, Args)]
struct EntryArgs {
    name: String,
    /// Parameter assignment name=value (vectors as v0,v1)
    #[arg(long = "param", value_name = "NAME=VALUE")]
    params: Vec<String>,
    /// Excitation number for the D4 entry (same as --param k=N)
    #[arg(long)]
    k: Option<i64>,
}

#[derive(Debug, Args)]
struct OrbitArgs {
    #[command(flatten)]
    input: Input,
    /// Number of orbit samples
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    /// Largest accepted relative deviation of any invariant
    #[arg(long, allow_hyphen_values = true, default_value_t = 1e-8, value_parser = parse_tolerance)]
    agreement: f64,
}

fn parse_tolerance(text: &str) -> Result<f64, String> {
    let value: f64 = text.parse().map_err(|e| format!("{e}"))?;
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err("must be finite and positive".into())
    }
}

/// Why a command did not succeed, mapped onto the exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Zero,
    /// Command ran; its result is negative (exit 1). Output already printed.
    Negative,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ZeroState => Failure::Zero,
            other => Failure::Usage(other.to_string()),
        }
    }
}

struct Ctx {
    tolerance: f64,
    seed: u64,
    format: OutputFormat,
}

impl Ctx {
    fn emit<T: Serialize>(&self, value: &T, table: impl FnOnce() -> String) {
        match self.format {
            OutputFormat::Json => write_stdout(
                &(serde_json::to_string_pretty(value).expect("report serializes") + "\n"),
            ),
            OutputFormat::Table => write_stdout(&table()),
        }
    }
}

/// Writes to stdout, exiting quietly if the reader has gone away.
fn write_stdout(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: {e}");
        std::process::exit(2);
    }
}

fn main() -> ExitCode {
    let matches = Cli::command().get_matches();
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let ctx = Ctx {
        tolerance: cli.tolerance,
        seed: cli.seed,
        format: cli.format,
    };
    let result = match &cli.command {
        Command::Invariants(input) => cmd_invariants(&ctx, input),
        Command::Classify(input) => cmd_classify(&ctx, input),
        Command::Discriminate(pair) => {
            let sub = matches
                .subcommand_matches("discriminate")
                .expect("subcommand matched");
            cmd_discriminate(&ctx, pair, sub)
        }
        Command::Catalog(cmd) => cmd_catalog(&ctx, cmd),
        Command::OrbitCheck(args) => cmd_orbit_check(&ctx, args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Zero) => {
            eprintln!("error: {}", Error::ZeroState);
            ExitCode::from(3)
        }
    }
}

fn load(input: &Input) -> Result<PureState4, Failure> {
    let state = input.source().load(input.input_format)?;
    if state.is_zero() {
        return Err(Failure::Zero);
    }
    Ok(state)
}

fn cmd_invariants(ctx: &Ctx, input: &Input) -> Result<(), Failure> {
    let state = load(input)?;
    let report = InvariantsReport {
        invariants: InvariantSet::of(&state),
        magnitudes: tangle_magnitudes(&state)?,
    };
    ctx.emit(&report, || report.table());
    Ok(())
}

fn cmd_classify(ctx: &Ctx, input: &Input) -> Result<(), Failure> {
    let state = load(input)?;
    let label = classify(&state, ctx.tolerance)?;
    ctx.emit(&label, || report::label_table(&label));
    Ok(())
}

fn pair_sources(pair: &PairInput, matches: &ArgMatches) -> Result<Vec<Source>, Failure> {
    let mut indexed: Vec<(usize, Source)> = Vec::new();
    for (id, values, make) in [
        ("ket", &pair.ket, Source::Ket as fn(String) -> Source),
        ("file", &pair.file, Source::File),
        ("catalog", &pair.catalog, Source::Catalog),
    ] {
        if let Some(indices) = matches.indices_of(id) {
            indexed.extend(indices.zip(values).map(|(i, v)| (i, make(v.clone()))));
        }
    }
    indexed.sort_by_key(|(i, _)| *i);
    if indexed.len() != 2 {
        return Err(Failure::Usage(format!(
            "discriminate needs exactly two states (--ket, --file or --catalog), got {}",
            indexed.len()
        )));
    }
    Ok(indexed.into_iter().map(|(_, s)| s).collect())
}

fn cmd_discriminate(ctx: &Ctx, pair: &PairInput, matches: &ArgMatches) -> Result<(), Failure> {
    let sources = pair_sources(pair, matches)?;
    let mut states = Vec::with_capacity(2);
    for source in &sources {
        let state = source.load(pair.input_format)?;
        if state.is_zero() {
            return Err(Failure::Zero);
        }
        states.push(state);
    }
    let verdict = discriminate(&states[0], &states[1], ctx.tolerance)?;
    ctx.emit(&verdict, || report::verdict_table(&verdict));
    match verdict.outcome {
        Outcome::Inconclusive => Ok(()),
        Outcome::DistinctClasses => Err(Failure::Negative),
    }
}

fn entry_params(entry: &catalog::RepresentativeSpec, args: &EntryArgs) -> Result<Params, Failure> {
    let mut params = entry.parse_params(args.params.iter().map(String::as_str))?;
    if let Some(k) = args.k {
        if !entry.params.iter().any(|p| p.name == "k") {
            return Err(Failure::Usage(format!(
                "entry `{}` has no parameter `k`",
                entry.name
            )));
        }
        params.insert(
            "k".into(),
            ParamValue::Scalar(num_complex::Complex64::new(k as f64, 0.0)),
        );
    }
    Ok(params)
}

fn entry_info(entry: &'static catalog::RepresentativeSpec) -> EntryInfo {
    EntryInfo {
        name: entry.name,
        family: entry.family,
        source: entry.source,
        origin: entry.origin,
        params: entry
            .params
            .iter()
            .map(|p| ParamInfo {
                name: p.name,
                kind: match p.kind {
                    ParamKind::Scalar => "scalar",
                    ParamKind::Vector => "vector",
                },
                default: p.default,
            })
            .collect(),
    }
}

fn cmd_catalog(ctx: &Ctx, cmd: &CatalogCommand) -> Result<(), Failure> {
    match cmd {
        CatalogCommand::List => {
            let infos: Vec<EntryInfo> = catalog::entries().iter().map(entry_info).collect();
            ctx.emit(&infos, || {
                infos
                    .iter()
                    .map(|i| format!("{:<16} {:<24} {}\n", i.name, i.family, i.source))
                    .collect()
            });
            Ok(())
        }
        CatalogCommand::Show(args) => {
            let entry = catalog::lookup(&args.name)?;
            let params = entry_params(entry, args)?;
            let state = entry.build(&params)?;
            let resolved = entry.args(&params)?;
            let values: BTreeMap<String, String> = resolved
                .values()
                .iter()
                .map(|(k, v)| (k.clone(), v.to_string()))
                .collect();
            let checks = entry
                .expected_pattern(&params)?
                .evaluate(&state, ctx.tolerance)
                .into_iter()
                .map(|o| CheckInfo {
                    check: o.description,
                    passed: o.passed,
                    detail: o.detail,
                })
                .collect();
            let pinned = params
                .is_empty()
                .then(|| catalog::fixtures().iter().find(|f| f.name == entry.name))
                .flatten()
                .map(|f| f.expected);
            let detail = EntryDetail {
                info: entry_info(entry),
                values,
                ket: format_ket(&state),
                invariants: InvariantSet::of(&state),
                checks,
                pinned,
            };
            ctx.emit(&detail, || detail.table());
            Ok(())
        }
        CatalogCommand::Emit(args) => {
            let entry = catalog::lookup(&args.name)?;
            let state = entry.build(&entry_params(entry, args)?)?;
            write_stdout(&(state.to_json_pretty() + "\n"));
            Ok(())
        }
    }
}

struct SampleOutcome {
    index: u64,
    deviation: f64,
    worst: Invariant,
    family_matches: bool,
}

fn cmd_orbit_check(ctx: &Ctx, args: &OrbitArgs) -> Result<(), Failure> {
    let state = load(&args.input)?;
    let base = InvariantSet::of(&state);
    let family = classify(&state, ctx.tolerance)?.general;
    let norm = state.norm();
    let outcomes: Vec<SampleOutcome> = (0..args.samples)
        .into_par_iter()
        .map(|index| -> Result<SampleOutcome, Error> {
            let sample = orbit_sample(&state, ctx.seed, index)?;
            let set = InvariantSet::of(&sample);
            let (worst, deviation) = Invariant::ALL
                .iter()
                .map(|&inv| {
                    let (x, y) = (base.get(inv), set.get(inv));
                    let scale = x.norm().max(y.norm()).max(norm.powi(inv.degree() as i32));
                    (inv, (x - y).norm() / scale)
                })
                .fold(
                    (Invariant::A, 0.0),
                    |acc, cur| if cur.1 > acc.1 { cur } else { acc },
                );
            let family_matches = classify(&sample, ctx.tolerance)?.general == family;
            Ok(SampleOutcome {
                index,
                deviation,
                worst,
                family_matches,
            })
        })
        .collect::<Result<_, _>>()?;

    let worst = outcomes
        .iter()
        .fold(None::<&SampleOutcome>, |acc, o| match acc {
            Some(a) if a.deviation >= o.deviation => Some(a),
            _ => Some(o),
        })
        .expect("at least one sample");
    let deviation_failures: Vec<u64> = outcomes
        .iter()
        .filter(|o| o.deviation > args.agreement)
        .map(|o| o.index)
        .collect();
    let family_mismatches: Vec<u64> = outcomes
        .iter()
        .filter(|o| !o.family_matches)
        .map(|o| o.index)
        .collect();
    let pass = deviation_failures.is_empty() && family_mismatches.is_empty();
    let report = OrbitReport {
        samples: args.samples as usize,
        seed: ctx.seed,
        agreement: args.agreement,
        family: family.to_string(),
        max_deviation: worst.deviation,
        worst_invariant: Some(worst.worst.to_string()),
        worst_sample: Some(worst.index),
        deviation_failures,
        family_mismatches,
        pass,
    };
    ctx.emit(&report, || report.table());
    if pass {
        Ok(())
    } else {
        let offending: Vec<u64> = {
            let mut all: Vec<u64> = report
                .deviation_failures
                .iter()
                .chain(&report.family_mismatches)
                .copied()
                .collect();
            all.sort_unstable();
            all.dedup();
            all
        };
        eprintln!(
            "orbit check failed at sample indices {offending:?} (seed {})",
            ctx.seed
        );
        Err(Failure::Negative)
    }
}
