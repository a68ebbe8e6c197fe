//! Initial loops for the minimizer. Besides loop files there are two
//! bundled datasets and a seeded random start.

use std::path::PathBuf;
use std::str::FromStr;

use choreo_core::fourier::unit;
use choreo_core::{constraint_mask, project, sample_trajectory, Complex, FourierLoop, GroupSpec};
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::io::{parse_json, read_loop, FormatError, LoopFile};

pub const FIG8_JSON: &str = include_str!("../data/fig8.json");
pub const CIRCULAR_JSON: &str = include_str!("../data/circular.json");

/// Relative size of the random perturbation added to each candidate.
const PERTURBATION: f64 = 0.05;
/// Candidates whose minimum separation is below this fraction of the mean
/// radius are skipped.
const MIN_SEPARATION: f64 = 0.05;
/// Coefficient scale of random starts.
const RANDOM_SCALE: f64 = 0.5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InitSource {
    Random,
    Fig8,
    Circular,
    File(PathBuf),
}

impl FromStr for InitSource {
    type Err = String;

    fn from_str(s: &str) -> Result<InitSource, String> {
        match s {
            "random" => Ok(InitSource::Random),
            "builtin:fig8" => Ok(InitSource::Fig8),
            "builtin:circular" => Ok(InitSource::Circular),
            _ if s.starts_with("builtin:") => Err(format!("unknown builtin `{s}` (expected builtin:fig8 or builtin:circular)")),
            _ => Ok(InitSource::File(PathBuf::from(s))),
        }
    }
}

impl std::fmt::Display for InitSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InitSource::Random => f.write_str("random"),
            InitSource::Fig8 => f.write_str("builtin:fig8"),
            InitSource::Circular => f.write_str("builtin:circular"),
            InitSource::File(p) => write!(f, "{}", p.display()),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum InitError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("initial loop has {found} particles but the group has n = {expected}")]
    ParticleMismatch { found: usize, expected: usize },
    #[error("no collision-free random start found for {0}")]
    NoCandidate(String),
    #[error(transparent)]
    Fourier(#[from] choreo_core::FourierError),
}

/// Copy of `lp` truncated or zero-padded to order `r_max`.
pub fn resized(lp: &FourierLoop, r_max: usize) -> FourierLoop {
    let mut out = FourierLoop::zeros(lp.n(), r_max).expect("n >= 1");
    for r in lp.harmonics().filter(|r| r.unsigned_abs() as usize <= r_max) {
        out.set(r, lp.coeff(r));
    }
    out
}

pub fn fig8() -> FourierLoop {
    parse_json::<LoopFile>(FIG8_JSON, "builtin:fig8").and_then(|f| f.to_loop("builtin:fig8")).expect("bundled dataset")
}

/// The bundled circular loop with the particle count replaced by `n`.
pub fn circular(n: usize) -> FourierLoop {
    let file = parse_json::<LoopFile>(CIRCULAR_JSON, "builtin:circular").expect("bundled dataset");
    LoopFile { n, ..file }.to_loop("builtin:circular").expect("bundled dataset")
}

/// Loads or generates the initial loop for `spec` at order `r_max`. The
/// result is not yet projected.
pub fn initial_loop(source: &InitSource, spec: &GroupSpec, r_max: usize, seed: u64) -> Result<FourierLoop, InitError> {
    let lp = match source {
        InitSource::Random => return random_loop(spec, r_max, seed),
        InitSource::Fig8 => fig8(),
        InitSource::Circular => circular(spec.n()),
        InitSource::File(path) => read_loop(path)?,
    };
    if lp.n() != spec.n() {
        return Err(InitError::ParticleMismatch { found: lp.n(), expected: spec.n() });
    }
    Ok(resized(&lp, r_max))
}

/// Seeded random symmetric start. Tries circles on the admissible
/// harmonics (those coprime to `n` first), then two-harmonic Lissajous
/// curves, each with a small random perturbation, and keeps the first
/// projected candidate whose particles stay well separated.
pub fn random_loop(spec: &GroupSpec, r_max: usize, seed: u64) -> Result<FourierLoop, InitError> {
    let n = spec.n();
    let mask = constraint_mask(spec, r_max)?;
    let mut allowed: Vec<i64> = mask.allowed().to_vec();
    allowed.sort_by_key(|&r| (r.unsigned_abs(), r < 0));
    // harmonics coprime to n separate all particles on their own; the rest
    // only in combination
    let coprime = |r: &i64| r.unsigned_abs().gcd(&(n as u64)) == 1;
    let lead: Vec<i64> = allowed.iter().copied().filter(coprime).chain(allowed.iter().copied().filter(|r| !coprime(r))).take(6).collect();
    let mut candidates: Vec<(i64, Option<(i64, Complex)>)> = lead.iter().map(|&r| (r, None)).collect();
    for &a in lead.iter().take(4) {
        for &b in allowed.iter().filter(|&&b| b != a).take(8) {
            // both phases, since a relation may force real or imaginary values
            candidates.push((a, Some((b, 0.5 * unit(0.25)))));
            candidates.push((a, Some((b, Complex::new(0.5, 0.0)))));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples = choreo_core::fourier::min_samples(r_max).max(128);
    for (a, b) in candidates {
        let mut lp = FourierLoop::zeros(n, r_max)?;
        lp.set(a, Complex::new(1.0, 0.0));
        if let Some((b, value)) = b {
            lp.set(b, value);
        }
        for &r in &allowed {
            let scale = PERTURBATION / r.unsigned_abs() as f64;
            let noise = Complex::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            *lp.coeff_mut(r) += scale * noise;
        }
        let lp = project(&lp, &mask)?;
        let norm = lp.norm();
        if norm == 0.0 {
            continue;
        }
        let lp = lp.axpy(RANDOM_SCALE / norm - 1.0, lp.coeffs());
        let traj = sample_trajectory(&lp, samples)?;
        let radius = traj.positions[0].iter().map(|z| z.norm()).sum::<f64>() / samples as f64;
        if traj.min_distance() > MIN_SEPARATION * radius {
            return Ok(lp);
        }
    }
    Err(InitError::NoCandidate(spec.to_string()))
}
