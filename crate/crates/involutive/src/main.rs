use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use involutive::commands::{bench, bench_table, check_report, corpus_files, report_table, run, system_name};
use involutive::{parse_system_file, Algorithm, RunError, RunOptions, RunReport, SyzMethod};
use involutive_core::siginv::CoverMode;
use involutive_core::{DivisionKind, MonomialOrder};

#[derive(Parser)]
#[command(name = "involutive", version, about = "Involutive bases with syzygies")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduced Groebner basis.
    Groebner(SysArgs),
    /// Involutive basis with syzygies.
    Invbasis(SysArgs),
    /// Classical involutive completion with criteria.
    Gerdt(SysArgs),
    /// Syzygy module generators.
    Syzygy(SysArgs),
    /// Coordinates in which the ideal has a finite Pommaret basis.
    Quasistable(SysArgs),
    /// Strong involutive basis with syzygy signatures.
    Stinvbasis(SysArgs),
    /// Krull dimension.
    Dim(SysArgs),
    /// Re-verify a JSON report.
    Check { report: PathBuf },
    /// Run algorithms over a directory of system files.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Division {
    Janet,
    Pommaret,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Lex,
    Deglex,
    Degrevlex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Wall,
    Schreyer,
    Direct,
}

#[derive(Clone, Copy, ValueEnum)]
enum Cover {
    Live,
    Basis,
}

#[derive(Args, Clone)]
struct Common {
    #[arg(long, value_enum, default_value = "janet")]
    division: Division,
    /// Overrides the order given in the file.
    #[arg(long, value_enum)]
    order: Option<Order>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    #[arg(long)]
    max_iter: Option<usize>,
    /// Re-verify the result before printing it.
    #[arg(long)]
    verify: bool,
    /// Include syzygies (invbasis).
    #[arg(long)]
    syzygies: bool,
    /// Record wall time.
    #[arg(long)]
    timing: bool,
    /// Syzygy construction (syzygy).
    #[arg(long, value_enum, default_value = "wall")]
    method: Method,
    /// Disable criterion C2 (gerdt).
    #[arg(long)]
    no_c2: bool,
    /// Pairs used for cover checks (stinvbasis).
    #[arg(long, value_enum, default_value = "live")]
    cover: Cover,
}

#[derive(Args)]
struct SysArgs {
    file: PathBuf,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct BenchArgs {
    dir: PathBuf,
    /// Comma-separated algorithm names.
    #[arg(long, value_delimiter = ',', default_value = "quasistable,stinvbasis")]
    algorithms: Vec<String>,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[command(flatten)]
    common: Common,
}

impl Common {
    fn options(&self) -> RunOptions {
        RunOptions {
            division: match self.division {
                Division::Janet => DivisionKind::Janet,
                Division::Pommaret => DivisionKind::Pommaret,
            },
            order: self.order.map(|o| match o {
                Order::Lex => MonomialOrder::Lex,
                Order::Deglex => MonomialOrder::DegLex,
                Order::Degrevlex => MonomialOrder::DegRevLex,
            }),
            seed: self.seed,
            max_iter: self.max_iter,
            syzygies: self.syzygies,
            syz_method: match self.method {
                Method::Wall => SyzMethod::Wall,
                Method::Schreyer => SyzMethod::Schreyer,
                Method::Direct => SyzMethod::Direct,
            },
            c2: !self.no_c2,
            cover: match self.cover {
                Cover::Live => CoverMode::Live,
                Cover::Basis => CoverMode::BasisOnly,
            },
            timing: self.timing,
            verify: self.verify,
        }
    }
}

fn run_one(alg: Algorithm, args: &SysArgs) -> Result<(), RunError> {
    let sys = parse_system_file(&args.file)?;
    if alg == Algorithm::QuasiStable {
        if let Some(i) = sys.polys.iter().position(|p| !p.is_homogeneous()) {
            return Err(RunError::Other(format!("polynomial {} is not homogeneous", i + 1)));
        }
    }
    let report = run(alg, &sys, Some(&system_name(&args.file)), &args.common.options())?;
    match args.common.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Table => print!("{}", report_table(&report)),
    }
    Ok(())
}

fn check(path: &PathBuf) -> Result<(), RunError> {
    let text = std::fs::read_to_string(path).map_err(|e| RunError::Other(format!("{}: {e}", path.display())))?;
    let report = RunReport::from_json(&text).map_err(|e| RunError::Other(format!("{}: {e}", path.display())))?;
    check_report(&report)?;
    println!("ok");
    Ok(())
}

fn run_bench(args: &BenchArgs) -> Result<(), RunError> {
    let mut algorithms = Vec::new();
    for name in &args.algorithms {
        algorithms
            .push(Algorithm::from_name(name).ok_or_else(|| RunError::Other(format!("unknown algorithm `{name}`")))?);
    }
    let files = corpus_files(&args.dir).map_err(|e| RunError::Other(format!("{}: {e}", args.dir.display())))?;
    if files.is_empty() {
        eprintln!("warning: no .sys files in {}", args.dir.display());
    }
    let report = bench(&files, &algorithms, &args.common.options(), args.jobs);
    match args.common.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("report serializes")),
        Format::Table => print!("{}", bench_table(&report)),
    }
    let failed: Vec<String> = report
        .runs
        .iter()
        .filter_map(|r| r.error.as_ref().map(|e| format!("{} {}: {e}", r.system, r.algorithm)))
        .collect();
    for f in &failed {
        eprintln!("{f}");
    }
    if report.runs.iter().any(|r| r.error.as_deref().is_some_and(|e| e.starts_with("verification failed"))) {
        return Err(RunError::Verify(format!("{} run(s) failed", failed.len())));
    }
    if !failed.is_empty() {
        return Err(RunError::Other(format!("{} run(s) failed", failed.len())));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.cmd {
        Cmd::Groebner(a) => run_one(Algorithm::Groebner, a),
        Cmd::Invbasis(a) => run_one(Algorithm::InvBasis, a),
        Cmd::Gerdt(a) => run_one(Algorithm::Gerdt, a),
        Cmd::Syzygy(a) => run_one(Algorithm::Syzygy, a),
        Cmd::Quasistable(a) => run_one(Algorithm::QuasiStable, a),
        Cmd::Stinvbasis(a) => run_one(Algorithm::StInvBasis, a),
        Cmd::Dim(a) => run_one(Algorithm::Dim, a),
        Cmd::Check { report } => check(report),
        Cmd::Bench(a) => run_bench(a),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}
