//! The work behind each CLI verb, independent of argument parsing and
//! process exit codes.

use std::path::Path;

use choreo_core::action::{ActionError, Metric, MinimizeOptions};
use choreo_core::fourier::min_samples;
use choreo_core::{
    build_group, coercivity_check, constraint_mask, kernels_and_core, minimize, project, rcc_check,
    sample_trajectory, subconjugate, symmetry_residual, FourierLoop, GroupError, GroupSpec, PotentialSpec,
    Trajectory,
};
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::init::{initial_loop, InitError, InitSource};
use crate::io::{LoopFile, SCHEMA_VERSION};
use crate::report::{invariant_report, InvariantReport, ReportError};

#[derive(Debug, thiserror::Error)]
pub enum CommandError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Init(#[from] InitError),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Fourier(#[from] choreo_core::FourierError),
    #[error(transparent)]
    Report(#[from] ReportError),
    #[error(transparent)]
    Format(#[from] crate::io::FormatError),
    #[error("invalid configuration: {0}")]
    Config(String),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CatalogRow {
    pub name: String,
    pub order: usize,
    pub ker_rho: usize,
    pub ker_sigma: usize,
    pub core: usize,
    pub rcc: bool,
    pub coercive: bool,
}

pub fn catalog_list(n: usize, kmax: u64) -> Result<Vec<CatalogRow>, CommandError> {
    if n < 3 {
        return Err(GroupError::InvalidSpec(format!("n = {n}; at least 3 particles are required")).into());
    }
    GroupSpec::catalog(n, kmax)
        .into_iter()
        .map(|spec| {
            let g = build_group(&spec)?;
            let k = kernels_and_core(&g)?;
            Ok(CatalogRow {
                name: spec.to_string(),
                order: g.order().expect("catalog groups are finite"),
                ker_rho: k.ker_rho.order(),
                ker_sigma: k.ker_sigma.order(),
                core: k.core.order(),
                rcc: rcc_check(&g)?.holds,
                coercive: coercivity_check(&g)?,
            })
        })
        .collect()
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RccReport {
    pub holds: bool,
    pub witness: Option<String>,
    pub time: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Description {
    pub schema_version: u32,
    pub name: String,
    pub n: usize,
    pub generators: Vec<String>,
    /// `null` for the infinite circular groups.
    pub order: Option<usize>,
    pub ker_rho: Option<usize>,
    pub ker_sigma: Option<usize>,
    pub core: Option<usize>,
    pub rcc: Option<RccReport>,
    pub coercive: Option<bool>,
}

pub fn describe(spec: &GroupSpec) -> Result<Description, CommandError> {
    let g = build_group(spec)?;
    let mut d = Description {
        schema_version: SCHEMA_VERSION,
        name: spec.to_string(),
        n: spec.n(),
        generators: g.generators().iter().map(|x| x.to_string()).collect(),
        order: g.order(),
        ker_rho: None,
        ker_sigma: None,
        core: None,
        rcc: None,
        coercive: None,
    };
    if g.is_finite() {
        let k = kernels_and_core(&g)?;
        let rcc = rcc_check(&g)?;
        d.ker_rho = Some(k.ker_rho.order());
        d.ker_sigma = Some(k.ker_sigma.order());
        d.core = Some(k.core.order());
        d.rcc = Some(RccReport {
            holds: rcc.holds,
            witness: rcc.witness.map(|w| w.to_string()),
            time: rcc.time.map(|t| t.to_string()),
        });
        d.coercive = Some(coercivity_check(&g)?);
    }
    Ok(d)
}

/// All `h ≺ g` with `h ≠ g` among the catalog groups (`k ≤ kmax`) and the
/// circular groups `D(n,inf/l)`.
pub fn lattice(n: usize, kmax: u64) -> Result<Vec<(String, String)>, CommandError> {
    if n < 3 {
        return Err(GroupError::InvalidSpec(format!("n = {n}; at least 3 particles are required")).into());
    }
    let mut specs = GroupSpec::catalog(n, kmax);
    specs.extend((1..=n as u64 / 2).filter(|l| l.gcd(&(n as u64)) == 1).filter_map(|l| GroupSpec::circular(n, l).ok()));
    let mut edges = Vec::new();
    for h in &specs {
        for g in &specs {
            if h != g && subconjugate(h, g)? {
                edges.push((h.to_string(), g.to_string()));
            }
        }
    }
    Ok(edges)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchConfig {
    pub group: GroupSpec,
    pub r_max: usize,
    /// Quadrature samples; `None` means `8(2R+1)`.
    pub samples: Option<usize>,
    pub a: f64,
    pub seed: u64,
    pub init: InitSource,
    pub max_iter: usize,
    pub grad_tol: f64,
    pub metric: Metric,
}

impl SearchConfig {
    pub fn new(group: GroupSpec) -> SearchConfig {
        let defaults = MinimizeOptions::for_order(8);
        SearchConfig {
            group,
            r_max: 8,
            samples: None,
            a: 1.0,
            seed: 0,
            init: InitSource::Random,
            max_iter: defaults.max_iter,
            grad_tol: defaults.grad_tol,
            metric: Metric::Euclidean,
        }
    }

    pub fn options(&self) -> Result<MinimizeOptions, CommandError> {
        if self.r_max < 1 {
            return Err(CommandError::Config("R must be at least 1".into()));
        }
        let mut opts = MinimizeOptions::for_order(self.r_max);
        if let Some(m) = self.samples {
            let min = min_samples(self.r_max);
            if m < min {
                return Err(CommandError::Config(format!("M = {m} is below 2(2R+1) = {min}")));
            }
            opts.samples = m;
        }
        if self.grad_tol.is_nan() || self.grad_tol <= 0.0 {
            return Err(CommandError::Config("grad-tol must be positive".into()));
        }
        opts.max_iter = self.max_iter;
        opts.grad_tol = self.grad_tol;
        opts.metric = self.metric;
        Ok(opts)
    }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Converged,
    NotConverged,
}

/// Everything needed to replay a search.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ReplayConfig {
    pub group: String,
    #[serde(rename = "R")]
    pub r_max: usize,
    #[serde(rename = "M")]
    pub samples: usize,
    pub a: f64,
    pub seed: u64,
    pub init: String,
    pub metric: String,
    pub max_iter: usize,
    pub grad_tol: f64,
    pub initial_step: f64,
    pub armijo: f64,
    pub shrink: f64,
    pub min_step: f64,
    pub min_dist_guard: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ResultFile {
    pub schema_version: u32,
    pub config: ReplayConfig,
    pub status: SearchStatus,
    pub converged: bool,
    pub action: f64,
    pub grad_norm: f64,
    pub min_distance: f64,
    pub iterations: usize,
    pub history: Vec<f64>,
    pub curve: LoopFile,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub result: ResultFile,
    pub curve: FourierLoop,
    pub trajectory: Trajectory,
    /// The invariants, or the reason they could not be computed.
    pub report: Result<InvariantReport, String>,
}

fn metric_name(m: Metric) -> &'static str {
    match m {
        Metric::Euclidean => "euclidean",
        Metric::Sobolev => "sobolev",
    }
}

/// Projects the initial loop, minimizes, samples the result and computes
/// its invariants.
pub fn search(config: &SearchConfig) -> Result<SearchOutcome, CommandError> {
    let opts = config.options()?;
    let pot = PotentialSpec::new(config.a)?;
    let spec = &config.group;
    let mask = constraint_mask(spec, config.r_max)?;
    let init = initial_loop(&config.init, spec, config.r_max, config.seed)?;
    let init = project(&init, &mask)?;
    let res = minimize(&init, spec, &pot, &opts)?;

    let trajectory = sample_trajectory(&res.curve, opts.samples)?;
    let report = invariant_report(&trajectory, Some((&res.curve, &pot))).map_err(|e| e.to_string());
    let result = ResultFile {
        schema_version: SCHEMA_VERSION,
        config: ReplayConfig {
            group: spec.to_string(),
            r_max: config.r_max,
            samples: opts.samples,
            a: config.a,
            seed: config.seed,
            init: config.init.to_string(),
            metric: metric_name(opts.metric).into(),
            max_iter: opts.max_iter,
            grad_tol: opts.grad_tol,
            initial_step: opts.initial_step,
            armijo: opts.armijo,
            shrink: opts.shrink,
            min_step: opts.min_step,
            min_dist_guard: opts.min_dist_guard,
        },
        status: if res.converged { SearchStatus::Converged } else { SearchStatus::NotConverged },
        converged: res.converged,
        action: res.action,
        grad_norm: res.grad_norm,
        min_distance: res.min_distance,
        iterations: res.iterations,
        history: res.history,
        curve: LoopFile::from_loop(&res.curve),
    };
    Ok(SearchOutcome { result, curve: res.curve, trajectory, report })
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ProjectSummary {
    pub schema_version: u32,
    pub group: String,
    pub dimension: usize,
    /// Largest mask violation of the input loop.
    pub violation_before: f64,
    /// Symmetry residual of the projected loop, checked on `M` samples.
    pub residual_after: f64,
    #[serde(rename = "M")]
    pub samples: usize,
}

pub fn project_loop(lp: &FourierLoop, spec: &GroupSpec, samples: Option<usize>) -> Result<(FourierLoop, ProjectSummary), CommandError> {
    if lp.n() != spec.n() {
        return Err(CommandError::Init(InitError::ParticleMismatch { found: lp.n(), expected: spec.n() }));
    }
    let mask = constraint_mask(spec, lp.r_max())?;
    let projected = project(lp, &mask)?;
    let samples = samples.unwrap_or(8 * (2 * lp.r_max() + 1));
    let min = min_samples(lp.r_max());
    if samples < min {
        return Err(CommandError::Config(format!("M = {samples} is below 2(2R+1) = {min}")));
    }
    let residual = symmetry_residual(&projected, &build_group(spec)?, samples)?;
    let summary = ProjectSummary {
        schema_version: SCHEMA_VERSION,
        group: spec.to_string(),
        dimension: mask.dimension(),
        violation_before: mask.violation(lp)?,
        residual_after: residual,
        samples,
    };
    Ok((projected, summary))
}

/// Writes `result.json`, `trajectory.json` and (when available)
/// `report.json` into `dir`.
pub fn write_search_outputs(dir: &Path, outcome: &SearchOutcome) -> Result<(), crate::io::FormatError> {
    use crate::io::{write_json, FormatError, TrajectoryFile};
    std::fs::create_dir_all(dir).map_err(|source| FormatError::Io { path: dir.display().to_string(), source })?;
    write_json(&dir.join("result.json"), &outcome.result)?;
    write_json(&dir.join("trajectory.json"), &TrajectoryFile::from_trajectory(&outcome.trajectory))?;
    if let Ok(report) = &outcome.report {
        write_json(&dir.join("report.json"), report)?;
    }
    Ok(())
}
