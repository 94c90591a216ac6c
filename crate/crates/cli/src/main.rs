use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use shuffle_forge_cli::suite::{max_k_cap, parse_k, parse_range, ConfigError, Suite, SuiteConfig};
use shuffle_forge_cli::{eval, EvalConfig, Show, Source};
use shuffle_forge_core::roots::{CartanType, RootSystem};
use shuffle_forge_core::specmaps::{dim_report, DimRow, DimSettings};
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

/// Exact verification of shuffle-algebra identities for quantum loop
/// algebras and Yangians of types C and D.
#[derive(Parser)]
#[command(name = "shuffle-forge", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and write a JSON-lines report.
    Verify(VerifyArgs),
    /// Compare wheel-space dimensions with PBWD counts per total degree.
    Dims(DimsArgs),
    /// Evaluate Ψ of an expression or a preset root vector.
    Eval(EvalArgs),
}

#[derive(Args)]
struct SystemArgs {
    /// Cartan type (C or D).
    #[arg(long = "type", value_name = "TYPE")]
    ty: CartanType,
    #[arg(long)]
    rank: usize,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    system: SystemArgs,
    /// relations, psirv, phirv, vanish, leading, dims, lusztig, rtt,
    /// yangian-relations, yangian-leading, yangian-good or yangian-integral.
    #[arg(long)]
    suite: String,
    /// Mode window `lo:hi`.
    #[arg(long, default_value = "-1:1", allow_hyphen_values = true)]
    window: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    jobs: Option<usize>,
    /// Report path; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Largest |k| swept when --k is absent.
    #[arg(long, default_value_t = 3)]
    max_k: u32,
    /// Single degree vector, e.g. `2,1`.
    #[arg(long)]
    k: Option<String>,
    /// Total degrees `lo:hi` for the dims suite.
    #[arg(long, default_value = "0:2", allow_hyphen_values = true)]
    deg: String,
    /// Random draws per instance in sampled suites.
    #[arg(long, default_value_t = 5)]
    samples: usize,
    /// Wheel-check every shuffle product.
    #[arg(long)]
    strict: bool,
    /// Add per-check wall times to the records.
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct DimsArgs {
    #[command(flatten)]
    system: SystemArgs,
    /// Degree vector, e.g. `2,1`.
    #[arg(long)]
    k: String,
    /// Total degrees `lo:hi`.
    #[arg(long, default_value = "0:2", allow_hyphen_values = true)]
    deg: String,
    /// Skip the rank of the PBWD images.
    #[arg(long)]
    no_rank: bool,
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct EvalArgs {
    /// Cartan type; C when absent.
    #[arg(long = "type", value_name = "TYPE")]
    ty: Option<CartanType>,
    /// Rank; the largest color (at least 2) when absent.
    #[arg(long)]
    rank: Option<usize>,
    /// Expression such as `comm[v](e(1,0),e(2,0))` or `y(1,1)`.
    #[arg(long, conflicts_with = "preset", required_unless_present = "preset")]
    expr: Option<String>,
    /// Preset such as `tildeE+/C3/[1,3,2]/s=1` or `rttE-/D4/[2,4]`.
    #[arg(long)]
    preset: Option<String>,
    /// numerator, element, json or membership.
    #[arg(long, default_value = "numerator")]
    show: Show,
}

fn jobs(j: Option<usize>) -> usize {
    j.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn verify(a: VerifyArgs) -> Result<bool, ConfigError> {
    let suite: Suite = a.suite.parse()?;
    let (lo, hi) = parse_range(&a.window)?;
    let window = (
        i32::try_from(lo).map_err(|_| ConfigError::InvalidWindow(a.window.clone()))?,
        i32::try_from(hi).map_err(|_| ConfigError::InvalidWindow(a.window.clone()))?,
    );
    let (dlo, dhi) = parse_range(&a.deg)?;
    let mut cfg = SuiteConfig::new(a.system.ty, a.system.rank, suite);
    cfg.window = window;
    cfg.seed = a.seed;
    cfg.jobs = jobs(a.jobs);
    cfg.max_k = a.max_k;
    cfg.k = a.k.as_deref().map(parse_k).transpose()?;
    cfg.degrees = dlo..=dhi;
    cfg.samples = a.samples;
    cfg.strict = a.strict;
    cfg.timings = a.timings;
    cfg.validate(max_k_cap()?)?;
    let out: Box<dyn Write> = match &a.out {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    };
    let report = shuffle_forge_cli::run_suite(&cfg)?;
    let mut out = out;
    report.write_jsonl(&mut out)?;
    out.flush()?;
    Ok(report.all_pass())
}

#[derive(Serialize)]
struct RowLine<'a> {
    #[serde(flatten)]
    row: &'a DimRow,
    status: &'static str,
}

#[derive(Serialize)]
struct DimsSummary<'a> {
    summary: bool,
    #[serde(rename = "type")]
    ty: String,
    rank: usize,
    k: &'a [u32],
    checks: usize,
    passed: usize,
    failed: usize,
}

fn dims(a: DimsArgs) -> Result<bool, ConfigError> {
    let k = parse_k(&a.k)?;
    let (lo, hi) = parse_range(&a.deg)?;
    let sys = RootSystem::new(a.system.ty, a.system.rank)?;
    if k.len() != sys.n {
        return Err(ConfigError::Invalid(format!("k has {} entries, rank is {}", k.len(), sys.n)));
    }
    let cap = max_k_cap()?;
    let total: u32 = k.iter().sum();
    if total > cap {
        return Err(ConfigError::CapExceeded(format!("|k| = {total} is above the cap {cap}")));
    }
    let settings = DimSettings { check_rank: !a.no_rank, ..DimSettings::default() };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs(a.jobs))
        .build()
        .map_err(|e| ConfigError::Invalid(format!("thread pool: {e}")))?;
    let rows = pool.install(|| dim_report(&sys, &k, lo..=hi, &settings))?;
    let mut out = io::stdout().lock();
    let mut failed = 0;
    for row in &rows {
        if !row.ok() {
            failed += 1;
        }
        let line = RowLine { row, status: if row.ok() { "pass" } else { "fail" } };
        writeln!(out, "{}", serde_json::to_string(&line).expect("rows serialize"))?;
    }
    let summary = DimsSummary { summary: true, ty: sys.ty.to_string(), rank: sys.n, k: &k, checks: rows.len(), passed: rows.len() - failed, failed };
    let summary = serde_json::to_string(&summary).expect("summary serializes");
    writeln!(out, "{summary}")?;
    Ok(failed == 0)
}

fn run(cli: Cli) -> Result<bool, ConfigError> {
    match cli.command {
        Command::Verify(a) => verify(a),
        Command::Dims(a) => dims(a),
        Command::Eval(a) => {
            let source = match (a.expr, a.preset) {
                (Some(e), _) => Source::Expr(e),
                (None, Some(p)) => Source::Preset(p),
                (None, None) => return Err(ConfigError::Invalid("--expr or --preset is required".into())),
            };
            let v = eval(&EvalConfig { ty: a.ty, rank: a.rank, source, show: a.show })?;
            writeln!(io::stdout().lock(), "{v}")?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("shuffle-forge: {e}");
            ExitCode::from(2)
        }
    }
}
