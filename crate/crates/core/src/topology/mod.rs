//! Winding numbers and braid words of sampled choreographies.

use alloc::string::String;

mod adjacency;
mod braid;
mod winding;

pub use adjacency::adjacency_necessary;
pub use braid::{braid_stats, extract_braid, extract_braid_generic, BraidStats, BraidWord, Letter};
pub use winding::{pair_winding, total_pair_winding, winding_about_origin, winding_profile, WindingProfile};

/// Largest accepted angle increment between consecutive samples. Bigger
/// jumps mean the grid is too coarse to follow the relative motion.
pub const MAX_INCREMENT: f64 = 0.75 * core::f64::consts::PI;

/// How far a winding total may sit from an integer before it is rejected.
pub const INTEGRALITY_TOL: f64 = 1e-3;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum TopologyError {
    #[error("grid too coarse: {what} (resample with more points)")]
    Resolution { what: String },
    #[error("particle 1 passes through the origin at t = {time}")]
    OriginHit { time: f64 },
    #[error("particles {i} and {j} collide at t = {time}")]
    Collision { i: usize, j: usize, time: f64 },
    #[error("winding of pair (j, j+{k}) depends on j: {first} vs {other}")]
    InconsistentProfile { k: usize, first: i64, other: i64 },
    #[error("degenerate crossing near t = {time}; apply a small global rotation")]
    Degenerate { time: f64 },
    #[error("unsupported adjacency target {0}")]
    Unsupported(String),
    #[error("need at least 3 particles, got {0}")]
    TooFewParticles(usize),
    #[error("exponent sum for n = {chi_n} checked against a group with n = {target_n}")]
    MismatchedN { chi_n: usize, target_n: usize },
}
