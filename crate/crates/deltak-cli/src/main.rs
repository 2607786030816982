//! Command line front end: dimension tables, generator listings, freeness
//! certificates, verification suites, and interactive squares.
//!
//! Exit codes: 0 when every requested check passes, 1 when a mathematical
//! check fails, 2 on usage or I/O errors.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use deltak::annihilated::BasisCache;
use deltak::combinatorics::binomial;
use deltak::delta0::{enumerate_sigma, sigma, sigma_descriptor};
use deltak::freeness::{certify_free, minimal_generators, Bounds};
use deltak::steenrod::{sq, sq_matrix};
use deltak::suites::{run_all, run_suite, SuiteOutcome};
use deltak::text::parse_element;

const CACHE_ENV_VAR: &str = "DELTAK_CACHE_DIR";
/// Largest ambient dimension a single bidegree may have; beyond this the
/// dense eliminations stop being a desk-scale computation.
const MAX_AMBIENT_DIM: u64 = 20_000;

#[derive(Parser)]
#[command(name = "deltak", version, about = "Annihilated subalgebras of the homology of smash powers of RP^infinity, over F2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print timing notes to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the dimension table of the level-k annihilated subspaces
    /// (rows = length s, columns = degree d).
    Dims(TableArgs),
    /// List algebra generators per bidegree: the sigma elements for k = 0,
    /// computed minimal generators for k >= 1.
    Generators(TableArgs),
    /// Run the degree-bounded freeness certificate for level k and report
    /// PASS/FAIL; exits 1 on the first failing bidegree.
    Certify(CertifyArgs),
    /// Run named verification suites; exits 1 on any failure.
    Verify(VerifyArgs),
    /// Apply Sq^K to an element given in the bracket syntax, e.g. "[2,2]".
    Sq(SqArgs),
    /// Dump the matrix of Sq^k on one bidegree as row-major 0/1 CSV
    /// (rows = source monomials of (s,d), columns = target of (s,d-k)).
    SqMatrix(SqMatrixArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct TableArgs {
    /// Annihilation level: squares up to 2^k.
    #[arg(long, default_value_t = 0)]
    k: u32,
    /// Largest length (row) to compute.
    #[arg(long)]
    s_max: u32,
    /// Largest degree (column) to compute.
    #[arg(long)]
    d_max: u32,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Directory for persistent basis caching; DELTAK_CACHE_DIR is used
    /// when the flag is absent.
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Write the table here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CertifyArgs {
    #[arg(long, default_value_t = 0)]
    k: u32,
    #[arg(long)]
    s_max: u32,
    #[arg(long)]
    d_max: u32,
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Write the full JSON report here; the summary always goes to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: action-oracle, instability, sq1-differential, ker-eq-im,
    /// S0, recurrence, reduction-formula, transduction, adem-spot.
    /// All of them when absent.
    #[arg(long)]
    suite: Option<String>,
    #[arg(long, default_value_t = 4)]
    s_max: u32,
    #[arg(long, default_value_t = 16)]
    d_max: u32,
    #[arg(long)]
    cache_dir: Option<PathBuf>,
}

#[derive(Args)]
struct SqArgs {
    /// Element in the bracket syntax; zero is "0", the unit is "[]".
    element: String,
    /// The square to apply.
    k: u32,
}

#[derive(Args)]
struct SqMatrixArgs {
    #[arg(long)]
    s: u32,
    #[arg(long)]
    d: u32,
    #[arg(long)]
    k: u32,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct DimsOutput {
    k: u32,
    bounds: Bounds,
    dims: Vec<Vec<u64>>,
}

#[derive(Serialize)]
struct GeneratorEntry {
    s: u32,
    d: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    descriptor: Option<String>,
    element: String,
}

#[derive(Serialize)]
struct GeneratorsOutput {
    k: u32,
    bounds: Bounds,
    generators: Vec<GeneratorEntry>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let started = Instant::now();
    let code = match cli.command {
        Command::Dims(args) => cmd_dims(args)?,
        Command::Generators(args) => cmd_generators(args)?,
        Command::Certify(args) => cmd_certify(args)?,
        Command::Verify(args) => cmd_verify(args)?,
        Command::Sq(args) => cmd_sq(args)?,
        Command::SqMatrix(args) => cmd_sq_matrix(args)?,
    };
    if cli.verbose {
        eprintln!("done in {:.3?}", started.elapsed());
    }
    Ok(code)
}

fn make_cache(flag: &Option<PathBuf>) -> BasisCache {
    let dir = flag
        .clone()
        .or_else(|| std::env::var_os(CACHE_ENV_VAR).map(PathBuf::from));
    match dir {
        Some(dir) => BasisCache::with_dir(dir),
        None => BasisCache::in_memory(),
    }
}

/// Rejects windows whose largest bidegree piece would not be desk scale.
fn validate_bounds(s_max: u32, d_max: u32, k: u32) -> Result<()> {
    if k > 30 {
        bail!("level k = {k} is out of range (k <= 30)");
    }
    for s in 0..=s_max {
        let dim = binomial(d_max as u64, s.saturating_sub(1) as u64);
        match dim {
            Some(dim) if dim <= MAX_AMBIENT_DIM => {}
            _ => bail!(
                "invalid bounds: bidegree ({s},{d_max}) has more than {MAX_AMBIENT_DIM} monomials"
            ),
        }
    }
    Ok(())
}

fn emit(out: &Option<PathBuf>, payload: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, payload)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{payload}"),
    }
    Ok(())
}

fn cmd_dims(args: TableArgs) -> Result<ExitCode> {
    validate_bounds(args.s_max, args.d_max, args.k)?;
    let cache = make_cache(&args.cache_dir);
    let mut dims = Vec::new();
    for s in 0..=args.s_max {
        let mut row = Vec::new();
        for d in 0..=args.d_max {
            row.push(cache.delta_dim(args.k, s, d)? as u64);
        }
        dims.push(row);
    }
    let payload = match args.format {
        Format::Csv => {
            let mut text = String::from("s");
            for d in 0..=args.d_max {
                text.push_str(&format!(",{d}"));
            }
            text.push('\n');
            for (s, row) in dims.iter().enumerate() {
                text.push_str(&s.to_string());
                for value in row {
                    text.push_str(&format!(",{value}"));
                }
                text.push('\n');
            }
            text
        }
        Format::Json => {
            let out = DimsOutput {
                k: args.k,
                bounds: Bounds {
                    s_max: args.s_max,
                    d_max: args.d_max,
                },
                dims,
            };
            let mut text = serde_json::to_string(&out)?;
            text.push('\n');
            text
        }
    };
    emit(&args.out, &payload)?;
    Ok(ExitCode::SUCCESS)
}

fn generator_entries(args: &TableArgs, cache: &BasisCache) -> Result<Vec<GeneratorEntry>> {
    let mut entries = Vec::new();
    if args.k == 0 {
        for s in 1..=args.s_max {
            for d in 1..=args.d_max {
                for ms in enumerate_sigma(s, d) {
                    let element = sigma(&ms)?;
                    entries.push(GeneratorEntry {
                        s,
                        d,
                        descriptor: Some(sigma_descriptor(&ms)),
                        element: element.to_string(),
                    });
                }
            }
        }
    } else {
        let table = minimal_generators(args.k, args.s_max, args.d_max, cache)?;
        for (bd, reps) in table.iter() {
            for rep in reps {
                entries.push(GeneratorEntry {
                    s: bd.s,
                    d: bd.d,
                    descriptor: None,
                    element: rep.to_string(),
                });
            }
        }
    }
    Ok(entries)
}

fn cmd_generators(args: TableArgs) -> Result<ExitCode> {
    validate_bounds(args.s_max, args.d_max, args.k)?;
    let cache = make_cache(&args.cache_dir);
    let entries = generator_entries(&args, &cache)?;
    let payload = match args.format {
        Format::Csv => {
            let mut text = String::from("s,d,descriptor,element\n");
            for e in &entries {
                text.push_str(&format!(
                    "{},{},\"{}\",\"{}\"\n",
                    e.s,
                    e.d,
                    e.descriptor.as_deref().unwrap_or(""),
                    e.element
                ));
            }
            text
        }
        Format::Json => {
            let out = GeneratorsOutput {
                k: args.k,
                bounds: Bounds {
                    s_max: args.s_max,
                    d_max: args.d_max,
                },
                generators: entries,
            };
            let mut text = serde_json::to_string(&out)?;
            text.push('\n');
            text
        }
    };
    emit(&args.out, &payload)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_certify(args: CertifyArgs) -> Result<ExitCode> {
    validate_bounds(args.s_max, args.d_max, args.k)?;
    let cache = make_cache(&args.cache_dir);
    let report = certify_free(args.k, args.s_max, args.d_max, &cache)?;
    if let Some(out) = &args.out {
        let mut text = serde_json::to_string(&report)?;
        text.push('\n');
        emit(&Some(out.clone()), &text)?;
    }
    match report.first_failure() {
        None => {
            println!(
                "PASS k={} s_max={} d_max={} cells={}",
                args.k,
                args.s_max,
                args.d_max,
                report.cells.len()
            );
            Ok(ExitCode::SUCCESS)
        }
        Some(cell) => {
            println!(
                "FAIL k={} at ({},{}): f = {}, dim = {}",
                args.k, cell.s, cell.d, cell.f, cell.dim
            );
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    validate_bounds(args.s_max, args.d_max, 0)?;
    let cache = make_cache(&args.cache_dir);
    let outcomes: Vec<SuiteOutcome> = match &args.suite {
        Some(name) => vec![run_suite(name, args.s_max, args.d_max, &cache)?],
        None => run_all(args.s_max, args.d_max, &cache)?,
    };
    let mut all_passed = true;
    for o in &outcomes {
        if o.passed {
            println!("{}: PASS", o.name);
        } else {
            all_passed = false;
            println!("{}: FAIL ({})", o.name, o.detail);
        }
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_sq(args: SqArgs) -> Result<ExitCode> {
    let element = parse_element(&args.element)?;
    println!("{}", sq(&element, args.k));
    Ok(ExitCode::SUCCESS)
}

fn cmd_sq_matrix(args: SqMatrixArgs) -> Result<ExitCode> {
    validate_bounds(args.s, args.d, args.k)?;
    let matrix = sq_matrix(args.s, args.d, args.k);
    emit(&args.out, &matrix.to_csv())?;
    Ok(ExitCode::SUCCESS)
}
