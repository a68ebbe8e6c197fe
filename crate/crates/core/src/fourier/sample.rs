use alloc::vec::Vec;

use super::{unit, FourierError, FourierLoop};
use crate::group::SymmetryGroup;
use crate::Complex;

/// Positions (and optionally velocities) of all particles on the uniform
/// grid `t_m = m/M`, `m = 0..M`.
#[derive(Clone, Debug, PartialEq)]
pub struct Trajectory {
    pub n: usize,
    pub samples: usize,
    /// `positions[j][m] = z_{j+1}(t_m)`.
    pub positions: Vec<Vec<Complex>>,
    pub velocities: Option<Vec<Vec<Complex>>>,
}

impl Trajectory {
    pub fn time(&self, m: usize) -> f64 {
        m as f64 / self.samples as f64
    }

    /// Smallest pairwise distance over all samples.
    pub fn min_distance(&self) -> f64 {
        let mut best = f64::INFINITY;
        for m in 0..self.samples {
            for i in 0..self.n {
                for j in i + 1..self.n {
                    best = best.min((self.positions[i][m] - self.positions[j][m]).norm());
                }
            }
        }
        best
    }

    pub fn is_collision_free(&self, tol: f64) -> bool {
        self.min_distance() > tol
    }

    /// The same trajectory after a global rotation by `angle` radians.
    pub fn rotated(&self, angle: f64) -> Trajectory {
        let w = Complex::new(libm::cos(angle), libm::sin(angle));
        let turn = |v: &Vec<Vec<Complex>>| v.iter().map(|p| p.iter().map(|z| z * w).collect()).collect();
        Trajectory {
            n: self.n,
            samples: self.samples,
            positions: turn(&self.positions),
            velocities: self.velocities.as_ref().map(turn),
        }
    }
}

/// Smallest sample count accepted for truncation order `r_max`.
pub fn min_samples(r_max: usize) -> usize {
    2 * (2 * r_max + 1)
}

/// Samples every particle on `samples` uniform times by direct summation.
pub fn sample_trajectory(lp: &FourierLoop, samples: usize) -> Result<Trajectory, FourierError> {
    let min = min_samples(lp.r_max());
    if samples < min {
        return Err(FourierError::TooFewSamples { samples, r_max: lp.r_max(), min });
    }
    let n = lp.n();
    let mut positions = Vec::with_capacity(n);
    let mut velocities = Vec::with_capacity(n);
    for j in 0..n {
        let (mut p, mut v) = (Vec::with_capacity(samples), Vec::with_capacity(samples));
        for m in 0..samples {
            let t = m as f64 / samples as f64 + j as f64 / n as f64;
            let (mut z, mut dz) = (Complex::new(0.0, 0.0), Complex::new(0.0, 0.0));
            for (r, c) in lp.harmonics().zip(lp.coeffs()) {
                let term = c * unit(r as f64 * t);
                z += term;
                dz += term * Complex::new(0.0, core::f64::consts::TAU * r as f64);
            }
            p.push(z);
            v.push(dz);
        }
        positions.push(p);
        velocities.push(v);
    }
    Ok(Trajectory { n, samples, positions, velocities: Some(velocities) })
}

/// `max_{g, m, j} |z_{σ(j)}(τ(t_m)) − A z_j(t_m)|` over the group and a
/// uniform grid of `samples` times.
pub fn symmetry_residual(lp: &FourierLoop, group: &SymmetryGroup, samples: usize) -> Result<f64, FourierError> {
    if lp.n() != group.n() {
        return Err(FourierError::ParticleMismatch { loop_n: lp.n(), expected: group.n() });
    }
    let elements = group.elements().map_err(|_| FourierError::InfiniteGroup)?;
    Ok(element_residual(lp, elements, samples))
}

/// Residual of `lp` against an arbitrary list of elements, e.g. the
/// multiple-cover test element `(I, e, 1/l)`.
pub fn element_residual(lp: &FourierLoop, elements: &[crate::GroupElement], samples: usize) -> f64 {
    let n = lp.n();
    let mut worst: f64 = 0.0;
    for m in 0..samples {
        let t = m as f64 / samples as f64;
        let here: Vec<Complex> = (0..n).map(|j| lp.particle(j, t)).collect();
        for g in elements {
            let tt = g.apply_time(t);
            for (j, zj) in here.iter().enumerate() {
                let lhs = lp.particle(g.perm.apply(j), tt);
                worst = worst.max((lhs - g.apply_spatial(*zj)).norm());
            }
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupElement};
    use crate::perm::Perm;
    use crate::turn::Turn;

    #[test]
    fn circular_loop_samples() {
        let lp = FourierLoop::circular(3, 2, 1, 1.0).unwrap();
        let traj = sample_trajectory(&lp, 12).unwrap();
        for j in 0..3 {
            for m in 0..12 {
                let t = m as f64 / 12.0 + j as f64 / 3.0;
                let expected = Complex::new(libm::cos(core::f64::consts::TAU * t), libm::sin(core::f64::consts::TAU * t));
                assert!((traj.positions[j][m] - expected).norm() < 1e-14);
            }
        }
        assert!((traj.min_distance() - libm::sqrt(3.0)).abs() < 1e-12);
    }

    #[test]
    fn zero_loop_is_a_collision() {
        let traj = sample_trajectory(&FourierLoop::zeros(3, 2).unwrap(), 10).unwrap();
        assert_eq!(traj.min_distance(), 0.0);
        assert!(!traj.is_collision_free(1e-9));
    }

    #[test]
    fn rejects_undersampling() {
        let lp = FourierLoop::zeros(3, 4).unwrap();
        assert_eq!(sample_trajectory(&lp, 17), Err(FourierError::TooFewSamples { samples: 17, r_max: 4, min: 18 }));
    }

    #[test]
    fn velocities_match_finite_differences() {
        let coeffs = (0..7).map(|i| Complex::new(libm::sin(i as f64), libm::cos(3.0 * i as f64))).collect();
        let lp = FourierLoop::new(4, 3, coeffs).unwrap();
        let h = 1e-6;
        for t in [0.0, 0.3, 0.77] {
            let fd = (lp.eval(t + h) - lp.eval(t - h)) / (2.0 * h);
            assert!((fd - lp.eval_velocity(t)).norm() < 1e-6);
        }
    }

    #[test]
    fn circular_loop_is_c34_symmetric() {
        let lp = FourierLoop::circular(3, 4, 1, 1.0).unwrap();
        let g = build_group(&"C(3,4)".parse().unwrap()).unwrap();
        assert!(symmetry_residual(&lp, &g, 72).unwrap() < 1e-12);
    }

    #[test]
    fn multiple_cover_residual() {
        let half = [GroupElement::new(Turn::ZERO, false, Perm::identity(3), Turn::HALF, false)];
        let once = FourierLoop::circular(3, 4, 1, 1.0).unwrap();
        assert!((element_residual(&once, &half, 40) - 2.0).abs() < 1e-12);
        let twice = FourierLoop::circular(3, 4, 2, 1.0).unwrap();
        assert!(element_residual(&twice, &half, 40) < 1e-12);
    }
}
