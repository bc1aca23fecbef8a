use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lattice_boundary::boundary::{edge_boundary_count, edge_boundary_formula_total};
use lattice_boundary::cli::{
    parse_point_set_bytes, render_grid, serialize_report, BoundaryReport, OutputFormat, RenderMode,
    RenderOptions, Report, SurveyTable,
};
use lattice_boundary::search::{
    min_edge_boundary, random_point_set, survey_gap_free_optima, HeuristicConfig, SearchMode,
    MAX_SETS_ENV,
};
use lattice_boundary::{compress_to_fixed_point, PointSet};

const EXIT_USAGE: u8 = 1;
const EXIT_INVARIANT: u8 = 2;

#[derive(Parser)]
#[command(
    name = "lattice-boundary",
    version,
    about = "Edge boundaries and central compression in the king graph on Z^n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Edge boundary by direct enumeration and by projections plus gaps.
    Boundary(InputArgs),
    /// Compress in every coordinate until nothing changes.
    Compress(InputArgs),
    /// Minimal edge boundary over all sets of a given size.
    Search(SearchArgs),
    /// Table of minimal boundaries and gap-freeness of optimal sets.
    Survey(SurveyArgs),
    /// Draw a planar set and its exterior neighbours.
    Render(RenderArgs),
    /// Cross-check both boundary computations on seeded random sets.
    Selftest(SelftestArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Plain,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => OutputFormat::Json,
            Format::Plain => OutputFormat::Plain,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Picture {
    Ascii,
    Svg,
}

#[derive(Args)]
struct InputArgs {
    /// Set file to read, or `-` for stdin.
    #[arg(long, default_value = "-")]
    input: String,
    /// Dimension, required for headerless empty input.
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    dim: usize,
    #[arg(long)]
    size: usize,
    /// Scan every compressed set (default).
    #[arg(long, conflicts_with = "heuristic")]
    exhaustive: bool,
    /// Randomized local search; reports an upper bound only.
    #[arg(long)]
    heuristic: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Cap on enumerated sets per size level.
    #[arg(long, env = MAX_SETS_ENV, default_value_t = lattice_boundary::search::DEFAULT_MAX_SETS)]
    max_sets: usize,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args)]
struct SurveyArgs {
    #[arg(long)]
    dim: usize,
    /// Largest set size to survey.
    #[arg(long)]
    size: usize,
    #[arg(long, env = MAX_SETS_ENV, default_value_t = lattice_boundary::search::DEFAULT_MAX_SETS)]
    max_sets: usize,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long, value_enum, default_value = "ascii")]
    render: Picture,
    /// Largest framed width or height in cells.
    #[arg(long, default_value_t = 200)]
    max_extent: u64,
}

#[derive(Args)]
struct SelftestArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random sets per dimension.
    #[arg(long, default_value_t = 200)]
    count: usize,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

enum Failure {
    Usage(String),
    Invariant(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read_input(path: &str) -> io::Result<Vec<u8>> {
    if path == "-" {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf)?;
        Ok(buf)
    } else {
        fs::read(PathBuf::from(path))
    }
}

fn load(input: &str, dim: Option<usize>) -> Result<PointSet, Failure> {
    let bytes = read_input(input).map_err(|e| Failure::Usage(format!("{input}: {e}")))?;
    Ok(parse_point_set_bytes(&bytes, dim)?)
}

fn emit(text: &str) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Boundary(args) => {
            let set = load(&args.input, args.dim)?;
            let report = BoundaryReport::for_set(&set);
            let agree = report.agree;
            let (direct, formula) = (report.direct_count, report.formula_total);
            emit(&serialize_report(
                &Report::Boundary(report),
                args.format.into(),
            ))?;
            if !agree {
                return Err(Failure::Invariant(format!(
                    "direct edge count {direct} differs from formula total {formula}"
                )));
            }
        }
        Command::Compress(args) => {
            let set = load(&args.input, args.dim)?;
            let trace = compress_to_fixed_point(&set);
            if !trace.is_monotone() {
                return Err(Failure::Invariant(
                    "compression trace violates monotonicity".into(),
                ));
            }
            emit(&serialize_report(
                &Report::Compression(trace.into()),
                args.format.into(),
            ))?;
        }
        Command::Search(args) => {
            let mode = if args.heuristic {
                SearchMode::Heuristic(HeuristicConfig {
                    seed: args.seed,
                    ..HeuristicConfig::default()
                })
            } else {
                SearchMode::Exhaustive {
                    max_sets: args.max_sets,
                }
            };
            let report = min_edge_boundary(args.dim, args.size, mode)?;
            if !report.witnesses_verify() {
                return Err(Failure::Invariant("a witness failed verification".into()));
            }
            emit(&serialize_report(
                &Report::Search(report),
                args.format.into(),
            ))?;
        }
        Command::Survey(args) => {
            let reports = survey_gap_free_optima(args.dim, args.size, args.max_sets)?;
            let table = SurveyTable::from_reports(args.dim, &reports);
            emit(&serialize_report(
                &Report::Survey(table),
                args.format.into(),
            ))?;
        }
        Command::Render(args) => {
            let set = load(&args.input, args.dim)?;
            let options = RenderOptions {
                mode: match args.render {
                    Picture::Ascii => RenderMode::Ascii,
                    Picture::Svg => RenderMode::Svg,
                },
                max_extent: args.max_extent,
                ..RenderOptions::default()
            };
            emit(&render_grid(&set, &options)?)?;
        }
        Command::Selftest(args) => selftest(&args)?,
    }
    Ok(())
}

fn selftest(args: &SelftestArgs) -> Result<(), Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let plan: [(usize, u64, usize); 4] = [(1, 30, 20), (2, 10, 20), (3, 6, 12), (4, 4, 10)];
    let mut rows = Vec::new();
    let mut failures = 0usize;
    for (n, side, k_max) in plan {
        let mut mismatches = 0usize;
        for _ in 0..args.count {
            let k = rng.gen_range(0..=k_max);
            let set = random_point_set(n, k, &vec![side; n], rng.gen())?;
            if edge_boundary_count(&set) != edge_boundary_formula_total(&set) {
                mismatches += 1;
            }
        }
        failures += mismatches;
        rows.push((n, mismatches));
    }
    let text = match args.format {
        Format::Plain => rows
            .iter()
            .map(|(n, m)| {
                format!(
                    "dimension {n}: {} sets, {m} mismatches {}\n",
                    args.count,
                    if *m == 0 { "PASS" } else { "FAIL" }
                )
            })
            .collect::<String>(),
        Format::Json => {
            let v = serde_json::json!({
                "seed": args.seed,
                "sets_per_dimension": args.count,
                "mismatches": rows.iter().map(|(n, m)| serde_json::json!({"dimension": n, "count": m})).collect::<Vec<_>>(),
            });
            format!("{v}\n")
        }
    };
    emit(&text)?;
    if failures > 0 {
        return Err(Failure::Invariant(format!(
            "{failures} boundary mismatches"
        )));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("invariant violated: {msg}");
            ExitCode::from(EXIT_INVARIANT)
        }
    }
}
