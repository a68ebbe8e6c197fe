use alloc::vec::Vec;

use super::{TopologyError, INTEGRALITY_TOL, MAX_INCREMENT};
use crate::fourier::Trajectory;
use crate::Complex;

/// `w_k` = winding number of particle `j` around particle `j + k`, for
/// `k = 1..n−1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WindingProfile {
    pub entries: Vec<i64>,
}

/// Winding number of the closed sampled path `path` around 0.
fn closed_winding(path: impl Iterator<Item = Complex> + Clone, what: impl Fn() -> alloc::string::String) -> Result<i64, TopologyError> {
    let first = path.clone().next().expect("non-empty path");
    let mut prev = first;
    let mut total = 0.0;
    for z in path.skip(1).chain(core::iter::once(first)) {
        let step = (z * prev.conj()).arg();
        if step.abs() > MAX_INCREMENT {
            return Err(TopologyError::Resolution { what: alloc::format!("{}: angle step {step:.3} rad", what()) });
        }
        total += step;
        prev = z;
    }
    let turns = total / core::f64::consts::TAU;
    let rounded = libm::round(turns);
    if (turns - rounded).abs() > INTEGRALITY_TOL {
        return Err(TopologyError::Resolution { what: alloc::format!("{}: {turns:.6} turns", what()) });
    }
    Ok(rounded as i64)
}

/// Winding of particle `a` around particle `b` (0-based) over the period.
pub fn pair_winding(traj: &Trajectory, a: usize, b: usize) -> Result<i64, TopologyError> {
    let (pa, pb) = (&traj.positions[a], &traj.positions[b]);
    for m in 0..traj.samples {
        if (pa[m] - pb[m]).norm() < crate::action::COLLISION_TOL {
            return Err(TopologyError::Collision { i: a + 1, j: b + 1, time: traj.time(m) });
        }
    }
    closed_winding(pa.iter().zip(pb).map(|(x, y)| x - y), || alloc::format!("pair ({}, {})", a + 1, b + 1))
}

/// `Σ_{i<j} w(i, j)` over all unordered pairs.
pub fn total_pair_winding(traj: &Trajectory) -> Result<i64, TopologyError> {
    let mut sum = 0;
    for i in 0..traj.n {
        for j in i + 1..traj.n {
            sum += pair_winding(traj, i, j)?;
        }
    }
    Ok(sum)
}

/// Winding profile, checked to be the same for every base particle `j`.
pub fn winding_profile(traj: &Trajectory) -> Result<WindingProfile, TopologyError> {
    let n = traj.n;
    if n < 3 {
        return Err(TopologyError::TooFewParticles(n));
    }
    let mut entries = Vec::with_capacity(n - 1);
    for k in 1..n {
        let first = pair_winding(traj, 0, k)?;
        for j in 1..n {
            let other = pair_winding(traj, j, (j + k) % n)?;
            if other != first {
                return Err(TopologyError::InconsistentProfile { k, first, other });
            }
        }
        entries.push(first);
    }
    Ok(WindingProfile { entries })
}

/// A sample interval whose chord passes the origin closer than this
/// fraction of its length counts as passing through the origin.
const ORIGIN_PASS_FRACTION: f64 = 1e-2;

/// Time at which the chord from `a` to `b` passes the origin, if it turns
/// by more than [`MAX_INCREMENT`] and nearly through it.
fn origin_passage(a: Complex, b: Complex) -> Option<f64> {
    let d = b - a;
    if (b * a.conj()).arg().abs() <= MAX_INCREMENT || d.norm() == 0.0 {
        return None;
    }
    let s = (-(a.re * d.re + a.im * d.im) / d.norm_sqr()).clamp(0.0, 1.0);
    ((a + d * s).norm() < ORIGIN_PASS_FRACTION * d.norm()).then_some(s)
}

/// Winding number of particle 1's path around the origin. A path that
/// meets the origin at a sample, or whose chord between two samples runs
/// through it, has no winding number.
pub fn winding_about_origin(traj: &Trajectory) -> Result<i64, TopologyError> {
    let path = &traj.positions[0];
    if let Some(m) = path.iter().position(|z| z.norm() < crate::action::COLLISION_TOL) {
        return Err(TopologyError::OriginHit { time: traj.time(m) });
    }
    for m in 0..traj.samples {
        if let Some(s) = origin_passage(path[m], path[(m + 1) % traj.samples]) {
            return Err(TopologyError::OriginHit { time: (m as f64 + s) / traj.samples as f64 });
        }
    }
    closed_winding(path.iter().copied(), || alloc::string::String::from("path of particle 1"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourier::{sample_trajectory, FourierLoop};

    #[test]
    fn circular_profile() {
        let traj = sample_trajectory(&FourierLoop::circular(3, 2, 1, 1.0).unwrap(), 40).unwrap();
        assert_eq!(winding_profile(&traj).unwrap().entries, [1, 1]);
        assert_eq!(winding_about_origin(&traj).unwrap(), 1);
    }

    #[test]
    fn circular_speed_two() {
        let traj = sample_trajectory(&FourierLoop::circular(5, 3, 2, 1.0).unwrap(), 56).unwrap();
        assert_eq!(winding_about_origin(&traj).unwrap(), 2);
        assert_eq!(winding_profile(&traj).unwrap().entries, [2, 2, 2, 2]);
    }

    #[test]
    fn coarse_grid_is_rejected() {
        // speed-2 circle seen at 5 samples: each step turns 144 degrees
        let path: Vec<Complex> = (0..5).map(|m| crate::fourier::unit(2.0 * m as f64 / 5.0)).collect();
        let traj = Trajectory { n: 3, samples: 5, positions: alloc::vec![path; 3], velocities: None };
        assert!(matches!(winding_about_origin(&traj), Err(TopologyError::Resolution { .. })));
    }

    #[test]
    fn origin_passage_between_samples() {
        // a segment through the origin, sampled so no sample lands on it
        let path: Vec<Complex> = (0..8).map(|m| Complex::new(libm::cos(core::f64::consts::TAU * (m as f64 + 0.5) / 8.0), 0.0)).collect();
        let traj = Trajectory { n: 3, samples: 8, positions: alloc::vec![path; 3], velocities: None };
        let err = winding_about_origin(&traj).unwrap_err();
        assert!(matches!(err, TopologyError::OriginHit { time } if (time - 0.1875).abs() < 1e-12), "{err:?}");
    }

    #[test]
    fn origin_hit() {
        let mut lp = FourierLoop::zeros(3, 2).unwrap();
        lp.set(1, Complex::new(0.0, -0.5));
        lp.set(-1, Complex::new(0.0, 0.5));
        let traj = sample_trajectory(&lp, 20).unwrap();
        assert_eq!(winding_about_origin(&traj), Err(TopologyError::OriginHit { time: 0.0 }));
    }
}
