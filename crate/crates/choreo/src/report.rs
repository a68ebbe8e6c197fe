//! Invariant report of a sampled trajectory.

use std::collections::BTreeMap;

use choreo_core::action::{action, ActionError};
use choreo_core::group::Family;
use choreo_core::topology::total_pair_winding;
use choreo_core::{
    adjacency_necessary, braid_stats, extract_braid_generic, winding_about_origin, winding_profile, Complex,
    FourierLoop, GroupSpec, PotentialSpec, TopologyError, Trajectory,
};
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::io::SCHEMA_VERSION;

/// Largest `k` among the `C(n,k/l)` adjacency targets.
pub const ADJACENCY_KMAX: u64 = 6;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct InvariantReport {
    pub schema_version: u32,
    pub n: usize,
    #[serde(rename = "M")]
    pub samples: usize,
    pub winding_profile: Vec<i64>,
    /// `null` when particle 1 passes through the origin.
    pub winding_origin: Option<i64>,
    pub chi_full: i64,
    pub chi_generator: i64,
    /// Images of `1..n` under the generator-path permutation.
    pub perm_generator: Vec<usize>,
    /// `Σ_{i<j} w(i, j)`; equals `chi_full / 2`.
    pub pair_winding_total: i64,
    /// Rigid rotation (radians) applied before reading off crossings.
    pub braid_rotation: f64,
    pub adjacency: BTreeMap<String, bool>,
    pub min_distance: f64,
    pub mean_angular_momentum: f64,
    pub angular_momentum_deviation: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<f64>,
}

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error("braid exponent sum {chi} is not twice the pair winding total {total}")]
    ChiMismatch { chi: i64, total: i64 },
    #[error("loop has {loop_n} particles but the trajectory has {traj_n}")]
    LoopMismatch { loop_n: usize, traj_n: usize },
}

/// The `C(n,k/l)` (with `gcd(n,k) = 1`, `2 ≤ k ≤ kmax`) and `C'(n,2)` groups
/// for which the adjacency congruence is available.
pub fn adjacency_targets(n: usize, kmax: u64) -> Vec<GroupSpec> {
    GroupSpec::catalog(n, kmax)
        .into_iter()
        .filter(|s| match (s.family(), s.k()) {
            (Family::CPrime, _) => true,
            (Family::C, Some(k)) => k >= 2 && k.gcd(&(n as u64)) == 1,
            _ => false,
        })
        .collect()
}

/// Velocities by periodic central differences.
fn finite_difference_velocities(traj: &Trajectory) -> Vec<Vec<Complex>> {
    let m = traj.samples;
    let scale = m as f64 / 2.0;
    traj.positions.iter().map(|p| (0..m).map(|i| (p[(i + 1) % m] - p[(i + m - 1) % m]) * scale).collect()).collect()
}

/// Computes every invariant of `traj`. When `curve` is given, its action
/// under `pot` is included.
pub fn invariant_report(
    traj: &Trajectory,
    curve: Option<(&FourierLoop, &PotentialSpec)>,
) -> Result<InvariantReport, ReportError> {
    let n = traj.n;
    let profile = winding_profile(traj)?;
    let winding_origin = match winding_about_origin(traj) {
        Ok(w) => Some(w),
        Err(TopologyError::OriginHit { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let (word, braid_rotation) = extract_braid_generic(traj)?;
    let full = braid_stats(&word);
    let generator = braid_stats(&word.truncated(1.0 / n as f64));
    let total = total_pair_winding(traj)?;
    if full.chi != 2 * total {
        return Err(ReportError::ChiMismatch { chi: full.chi, total });
    }
    let mut adjacency = BTreeMap::new();
    for target in adjacency_targets(n, ADJACENCY_KMAX) {
        adjacency.insert(target.to_string(), adjacency_necessary(generator.chi, n, &target)?);
    }

    let velocities = traj.velocities.clone().unwrap_or_else(|| finite_difference_velocities(traj));
    let with_velocities = Trajectory { velocities: Some(velocities), ..traj.clone() };
    let diag = choreo_core::diagnostics(&with_velocities)?;

    let action = match curve {
        Some((lp, pot)) => {
            if lp.n() != n {
                return Err(ReportError::LoopMismatch { loop_n: lp.n(), traj_n: n });
            }
            Some(action(lp, pot, traj.samples)?)
        }
        None => None,
    };

    Ok(InvariantReport {
        schema_version: SCHEMA_VERSION,
        n,
        samples: traj.samples,
        winding_profile: profile.entries,
        winding_origin,
        chi_full: full.chi,
        chi_generator: generator.chi,
        perm_generator: generator.perm.images().iter().map(|i| i + 1).collect(),
        pair_winding_total: total,
        braid_rotation,
        adjacency,
        min_distance: diag.min_distance,
        mean_angular_momentum: diag.mean_angular_momentum,
        angular_momentum_deviation: diag.angular_momentum_deviation,
        action,
    })
}
