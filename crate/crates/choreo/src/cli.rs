//! Argument parsing, output formatting and exit codes.
//!
//! Exit codes: 0 success, 1 error, 2 search did not converge, 3 search
//! aborted on a collision. Errors are reported on stderr as JSON.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use choreo_core::action::{ActionError, Metric};
use choreo_core::GroupSpec;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::commands::{self, CommandError, SearchConfig, SearchStatus};
use crate::init::InitSource;
use crate::io::{self, LoopFile, TrajectoryFile, SCHEMA_VERSION};
use crate::report::invariant_report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_NOT_CONVERGED: i32 = 2;
pub const EXIT_COLLISION: i32 = 3;

/// Symmetric planar n-body choreographies: group catalog, action
/// minimization and topological invariants.
#[derive(Debug, Parser)]
#[command(name = "choreo", version)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Query the catalog of symmetry groups.
    Catalog {
        #[command(subcommand)]
        query: CatalogQuery,
    },
    /// Minimize the action over loops of a given symmetry type.
    Search(SearchArgs),
    /// Compute the invariants of a trajectory file.
    Analyze(AnalyzeArgs),
    /// Project a loop file onto a symmetry type.
    Project(ProjectArgs),
}

#[derive(Debug, Subcommand)]
enum CatalogQuery {
    /// Every canonical group for `n`, with its order and verdicts.
    List {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        kmax: u64,
        #[arg(long)]
        json: bool,
    },
    /// Generators, order and verdicts of one group, e.g. "D(6,4)".
    Describe {
        group: String,
        #[arg(long)]
        json: bool,
    },
    /// Subconjugacy edges `H < G`.
    Lattice {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        kmax: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MetricArg {
    Euclidean,
    Sobolev,
}

#[derive(Debug, clap::Args)]
struct SearchArgs {
    #[arg(long)]
    group: String,
    /// `random`, `builtin:fig8`, `builtin:circular` or a loop file.
    #[arg(long, default_value = "random")]
    init: String,
    /// Potential exponent.
    #[arg(long, default_value_t = 1.0)]
    a: f64,
    /// Fourier truncation order.
    #[arg(long = "R", default_value_t = 8)]
    r_max: usize,
    /// Quadrature samples (default 8(2R+1)).
    #[arg(long = "M")]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 20_000)]
    max_iter: usize,
    #[arg(long, default_value_t = 1e-7)]
    grad_tol: f64,
    #[arg(long, value_enum, default_value = "euclidean")]
    metric: MetricArg,
    /// Output directory for result.json, trajectory.json and report.json.
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Debug, clap::Args)]
struct AnalyzeArgs {
    trajectory: PathBuf,
    /// Loop file the trajectory was sampled from; adds the action.
    #[arg(long = "loop")]
    curve: Option<PathBuf>,
    /// Potential exponent used for the action.
    #[arg(long, default_value_t = 1.0)]
    a: f64,
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
struct ProjectArgs {
    #[arg(long)]
    group: String,
    #[arg(long)]
    input: PathBuf,
    /// Projected loop file (stdout if absent).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write the sampled trajectory of the projected loop.
    #[arg(long)]
    trajectory: Option<PathBuf>,
    #[arg(long = "M")]
    samples: Option<usize>,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Command(#[from] CommandError),
    #[error(transparent)]
    Format(#[from] io::FormatError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Command(CommandError::Group(_)) => "group",
            CliError::Command(CommandError::Action(ActionError::Collision { .. })) => "collision",
            CliError::Command(CommandError::Action(_)) => "action",
            CliError::Command(CommandError::Fourier(_)) => "fourier",
            CliError::Command(CommandError::Init(_)) => "init",
            CliError::Command(CommandError::Report(_)) => "topology",
            CliError::Command(CommandError::Format(_)) | CliError::Format(_) => "format",
            CliError::Command(CommandError::Config(_)) | CliError::Usage(_) => "usage",
            CliError::Output(_) => "io",
        }
    }

    fn exit_code(&self) -> i32 {
        match self {
            CliError::Command(CommandError::Action(ActionError::Collision { .. })) => EXIT_COLLISION,
            _ => EXIT_ERROR,
        }
    }

    fn to_json(&self) -> serde_json::Value {
        let field = match self {
            CliError::Format(e) | CliError::Command(CommandError::Format(e)) => e.field(),
            CliError::Command(CommandError::Init(crate::init::InitError::Format(e))) => e.field(),
            _ => None,
        };
        let mut error = json!({ "kind": self.kind(), "message": self.to_string() });
        if let Some(f) = field {
            error["field"] = json!(f);
        }
        json!({ "schema_version": SCHEMA_VERSION, "error": error })
    }
}

fn parse_group(s: &str) -> Result<GroupSpec, CliError> {
    s.parse::<GroupSpec>().map_err(|e| CliError::Command(e.into()))
}

fn emit(out: &mut dyn Write, value: &impl serde::Serialize) -> Result<(), CliError> {
    out.write_all(io::to_json(value).as_bytes())?;
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn catalog(query: CatalogQuery, out: &mut dyn Write) -> Result<i32, CliError> {
    match query {
        CatalogQuery::List { n, kmax, json } => {
            let rows = commands::catalog_list(n, kmax)?;
            if json {
                emit(out, &json!({ "schema_version": SCHEMA_VERSION, "n": n, "kmax": kmax, "groups": rows }))?;
            } else {
                writeln!(out, "{:<14} {:>6} {:>6} {:>6} {:>5} {:>4} {:>8}", "group", "order", "ker_r", "ker_s", "core", "rcc", "coercive")?;
                for r in rows {
                    writeln!(
                        out,
                        "{:<14} {:>6} {:>6} {:>6} {:>5} {:>4} {:>8}",
                        r.name, r.order, r.ker_rho, r.ker_sigma, r.core, yes_no(r.rcc), yes_no(r.coercive)
                    )?;
                }
            }
        }
        CatalogQuery::Describe { group, json } => {
            let d = commands::describe(&parse_group(&group)?)?;
            if json {
                emit(out, &d)?;
            } else {
                writeln!(out, "{}", d.name)?;
                for g in &d.generators {
                    writeln!(out, "  generator {g}")?;
                }
                match d.order {
                    Some(order) => writeln!(out, "  order {order}")?,
                    None => writeln!(out, "  order infinite")?,
                }
                if let (Some(r), Some(s), Some(c)) = (d.ker_rho, d.ker_sigma, d.core) {
                    writeln!(out, "  |ker rho| {r}, |ker sigma| {s}, core order {c}")?;
                }
                if let Some(rcc) = &d.rcc {
                    write!(out, "  rotating circle condition: {}", yes_no(rcc.holds))?;
                    if let (Some(w), Some(t)) = (&rcc.witness, &rcc.time) {
                        write!(out, " (violated by {w} at t = {t})")?;
                    }
                    writeln!(out)?;
                }
                if let Some(c) = d.coercive {
                    writeln!(out, "  coercive: {}", yes_no(c))?;
                }
            }
        }
        CatalogQuery::Lattice { n, kmax, json } => {
            let edges = commands::lattice(n, kmax)?;
            if json {
                let list: Vec<_> = edges.iter().map(|(h, g)| json!({ "sub": h, "sup": g })).collect();
                emit(out, &json!({ "schema_version": SCHEMA_VERSION, "n": n, "kmax": kmax, "edges": list }))?;
            } else {
                for (h, g) in edges {
                    writeln!(out, "{h} < {g}")?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn search(args: SearchArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let init: InitSource = args.init.parse().map_err(CliError::Usage)?;
    let config = SearchConfig {
        group: parse_group(&args.group)?,
        r_max: args.r_max,
        samples: args.samples,
        a: args.a,
        seed: args.seed,
        init,
        max_iter: args.max_iter,
        grad_tol: args.grad_tol,
        metric: match args.metric {
            MetricArg::Euclidean => Metric::Euclidean,
            MetricArg::Sobolev => Metric::Sobolev,
        },
    };
    let outcome = commands::search(&config)?;
    commands::write_search_outputs(&args.out, &outcome)?;
    let r = &outcome.result;
    let mut summary = json!({
        "schema_version": SCHEMA_VERSION,
        "group": r.config.group,
        "status": r.status,
        "action": r.action,
        "grad_norm": r.grad_norm,
        "min_distance": r.min_distance,
        "iterations": r.iterations,
        "out": args.out.display().to_string(),
    });
    match &outcome.report {
        Ok(rep) => {
            summary["winding_profile"] = json!(rep.winding_profile);
            summary["chi_full"] = json!(rep.chi_full);
            summary["mean_angular_momentum"] = json!(rep.mean_angular_momentum);
        }
        Err(e) => summary["report_error"] = json!(e),
    }
    emit(out, &summary)?;
    Ok(match r.status {
        SearchStatus::Converged => EXIT_OK,
        SearchStatus::NotConverged => EXIT_NOT_CONVERGED,
    })
}

fn analyze(args: AnalyzeArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let traj = io::read_trajectory(&args.trajectory)?;
    let curve = args.curve.as_deref().map(io::read_loop).transpose()?;
    let pot = choreo_core::PotentialSpec::new(args.a).map_err(|e| CliError::Command(e.into()))?;
    let report = invariant_report(&traj, curve.as_ref().map(|c| (c, &pot))).map_err(|e| CliError::Command(e.into()))?;
    if let Some(path) = &args.svg {
        std::fs::write(path, crate::svg::render(&traj))?;
    }
    match &args.out {
        Some(path) => io::write_json(path, &report)?,
        None => emit(out, &report)?,
    }
    Ok(EXIT_OK)
}

fn project(args: ProjectArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let spec = parse_group(&args.group)?;
    let lp = io::read_loop(&args.input)?;
    let (projected, summary) = commands::project_loop(&lp, &spec, args.samples)?;
    if let Some(path) = &args.trajectory {
        let traj = choreo_core::sample_trajectory(&projected, summary.samples).map_err(|e| CliError::Command(e.into()))?;
        io::write_json(path, &TrajectoryFile::from_trajectory(&traj))?;
    }
    match &args.out {
        Some(path) => {
            io::write_json(path, &LoopFile::from_loop(&projected))?;
            emit(out, &summary)?;
        }
        None => emit(out, &LoopFile::from_loop(&projected))?,
    }
    Ok(EXIT_OK)
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
        }
    };
    let result = match cli.command {
        Command::Catalog { query } => catalog(query, out),
        Command::Search(a) => search(a, out),
        Command::Analyze(a) => analyze(a, out),
        Command::Project(a) => project(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = err.write_all(io::to_json(&e.to_json()).as_bytes());
            e.exit_code()
        }
    }
}
