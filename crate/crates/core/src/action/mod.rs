//! The n-body action on choreography loops, its gradient and minimization.

use alloc::vec::Vec;

use crate::fourier::{unit, FourierError, FourierLoop, Trajectory};
use crate::Complex;

mod minimize;

pub use minimize::{minimize, Metric, MinimizeOptions, MinimizeResult};

/// Pairwise distances below this count as a collision.
pub const COLLISION_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum ActionError {
    #[error("collision: particles {i} and {j} at distance {distance:e} at t = {time}")]
    Collision { i: usize, j: usize, time: f64, distance: f64 },
    #[error("potential exponent must be a finite number >= 1, got {0}")]
    InvalidExponent(f64),
    #[error("initial loop violates the symmetry mask by {0:e}")]
    MaskViolation(f64),
    #[error("the symmetry mask admits no nonzero loop at this truncation")]
    EmptyMask,
    #[error("trajectory has no velocities")]
    MissingVelocities,
    #[error(transparent)]
    Fourier(#[from] FourierError),
}

/// Pairwise potential `coupling / r^a`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PotentialSpec {
    a: f64,
    coupling: f64,
}

impl PotentialSpec {
    pub fn new(a: f64) -> Result<PotentialSpec, ActionError> {
        if !a.is_finite() || a < 1.0 {
            return Err(ActionError::InvalidExponent(a));
        }
        Ok(PotentialSpec { a, coupling: 1.0 })
    }

    pub fn newtonian() -> PotentialSpec {
        PotentialSpec { a: 1.0, coupling: 1.0 }
    }

    /// Scales the potential; `0.0` leaves the kinetic term alone.
    pub fn with_coupling(self, coupling: f64) -> PotentialSpec {
        PotentialSpec { coupling, ..self }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn coupling(&self) -> f64 {
        self.coupling
    }
}

/// Precomputed `e^{2πir(t_m + j/n)}` for every particle, sample and harmonic.
#[derive(Clone, Debug)]
pub(crate) struct Quadrature {
    n: usize,
    samples: usize,
    width: usize,
    basis: Vec<Complex>,
}

impl Quadrature {
    pub(crate) fn new(n: usize, r_max: usize, samples: usize) -> Result<Quadrature, FourierError> {
        let min = crate::fourier::min_samples(r_max);
        if samples < min {
            return Err(FourierError::TooFewSamples { samples, r_max, min });
        }
        let width = 2 * r_max + 1;
        let mut basis = Vec::with_capacity(n * samples * width);
        for j in 0..n {
            for m in 0..samples {
                let s = m as f64 / samples as f64 + j as f64 / n as f64;
                basis.extend((-(r_max as i64)..=r_max as i64).map(|r| unit(r as f64 * s)));
            }
        }
        Ok(Quadrature { n, samples, width, basis })
    }

    fn row(&self, j: usize, m: usize) -> &[Complex] {
        let start = (j * self.samples + m) * self.width;
        &self.basis[start..start + self.width]
    }

    /// Positions indexed `[j * M + m]`.
    fn positions(&self, lp: &FourierLoop) -> Vec<Complex> {
        let mut out = Vec::with_capacity(self.n * self.samples);
        for j in 0..self.n {
            for m in 0..self.samples {
                out.push(self.row(j, m).iter().zip(lp.coeffs()).map(|(e, c)| e * c).sum());
            }
        }
        out
    }

    fn collision(&self, pos: &[Complex]) -> Option<ActionError> {
        let (n, samples) = (self.n, self.samples);
        for m in 0..samples {
            for i in 0..n {
                for j in i + 1..n {
                    let distance = (pos[i * samples + m] - pos[j * samples + m]).norm();
                    if distance < COLLISION_TOL {
                        return Some(ActionError::Collision { i: i + 1, j: j + 1, time: m as f64 / samples as f64, distance });
                    }
                }
            }
        }
        None
    }

    pub(crate) fn min_distance(&self, lp: &FourierLoop) -> f64 {
        let pos = self.positions(lp);
        let (n, samples) = (self.n, self.samples);
        let mut best = f64::INFINITY;
        for m in 0..samples {
            for i in 0..n {
                for j in i + 1..n {
                    best = best.min((pos[i * samples + m] - pos[j * samples + m]).norm());
                }
            }
        }
        best
    }

    pub(crate) fn action(&self, lp: &FourierLoop, pot: &PotentialSpec) -> Result<f64, ActionError> {
        let pos = self.positions(lp);
        if let Some(e) = self.collision(&pos) {
            return Err(e);
        }
        let (n, samples) = (self.n, self.samples);
        let mut potential = 0.0;
        for m in 0..samples {
            for i in 0..n {
                for j in i + 1..n {
                    let d = (pos[i * samples + m] - pos[j * samples + m]).norm();
                    potential += libm::pow(d, -pot.a);
                }
            }
        }
        Ok(kinetic(lp) + pot.coupling * potential / samples as f64)
    }

    /// `A(y) − A(x)`, evaluated term by term from the displacement so that
    /// small differences keep their relative accuracy.
    pub(crate) fn difference(&self, x: &FourierLoop, y: &FourierLoop, pot: &PotentialSpec) -> Result<f64, ActionError> {
        let pos_y = self.positions(y);
        if let Some(e) = self.collision(&pos_y) {
            return Err(e);
        }
        let pos_x = self.positions(x);
        let step: Vec<Complex> = y.coeffs().iter().zip(x.coeffs()).map(|(b, a)| b - a).collect();
        let step = FourierLoop::new(x.n(), x.r_max(), step)?;
        let moved = self.positions(&step);
        let kinetic: f64 = x
            .harmonics()
            .zip(x.coeffs().iter().zip(y.coeffs()))
            .map(|(r, (a, b))| kinetic_weight(r) * ((b - a) * (b + a).conj()).re)
            .sum();
        let (n, samples) = (self.n, self.samples);
        let mut potential = 0.0;
        for m in 0..samples {
            for i in 0..n {
                for j in i + 1..n {
                    let (pi, pj) = (i * samples + m, j * samples + m);
                    let d = pos_x[pi] - pos_x[pj];
                    let delta = moved[pi] - moved[pj];
                    let q = d.norm_sqr();
                    let rel = (2.0 * (d.conj() * delta).re + delta.norm_sqr()) / q;
                    potential += libm::pow(q, -pot.a / 2.0) * libm::expm1(-pot.a / 2.0 * libm::log1p(rel));
                }
            }
        }
        Ok(0.5 * n as f64 * kinetic + pot.coupling * potential / samples as f64)
    }

    /// Unprojected gradient `∂A/∂Re ζ_r + i ∂A/∂Im ζ_r`.
    pub(crate) fn gradient(&self, lp: &FourierLoop, pot: &PotentialSpec) -> Result<Vec<Complex>, ActionError> {
        let pos = self.positions(lp);
        if let Some(e) = self.collision(&pos) {
            return Err(e);
        }
        let (n, samples) = (self.n, self.samples);
        let mut force = alloc::vec![Complex::new(0.0, 0.0); n * samples];
        for m in 0..samples {
            for i in 0..n {
                for j in i + 1..n {
                    let d = pos[i * samples + m] - pos[j * samples + m];
                    let w = d * (-pot.a * libm::pow(d.norm_sqr(), -pot.a / 2.0 - 1.0));
                    force[i * samples + m] += w;
                    force[j * samples + m] -= w;
                }
            }
        }
        let scale = pot.coupling / samples as f64;
        let mut grad: Vec<Complex> = lp
            .harmonics()
            .zip(lp.coeffs())
            .map(|(r, c)| c * (n as f64 * kinetic_weight(r)))
            .collect();
        for j in 0..n {
            for m in 0..samples {
                let w = force[j * samples + m] * scale;
                for (g, e) in grad.iter_mut().zip(self.row(j, m)) {
                    *g += w * e.conj();
                }
            }
        }
        Ok(grad)
    }
}

/// `(2πr)²`.
pub(crate) fn kinetic_weight(r: i64) -> f64 {
    let w = core::f64::consts::TAU * r as f64;
    w * w
}

/// `(n/2) Σ_r (2πr)² |ζ_r|²`.
fn kinetic(lp: &FourierLoop) -> f64 {
    let sum: f64 = lp.harmonics().zip(lp.coeffs()).map(|(r, c)| kinetic_weight(r) * c.norm_sqr()).sum();
    0.5 * lp.n() as f64 * sum
}

/// `A = ∫₀¹ Σ_j ½|ż_j|² + Σ_{i<j} |z_i − z_j|^{−a} dt`, with the potential
/// integrated by the trapezoid rule on `samples` points.
pub fn action(lp: &FourierLoop, pot: &PotentialSpec, samples: usize) -> Result<f64, ActionError> {
    Quadrature::new(lp.n(), lp.r_max(), samples)?.action(lp, pot)
}

/// Gradient of the action with respect to `(Re ζ_r, Im ζ_r)`, packed as
/// complex numbers and projected onto `mask`.
pub fn gradient(
    lp: &FourierLoop,
    pot: &PotentialSpec,
    mask: &crate::fourier::ConstraintMask,
    samples: usize,
) -> Result<Vec<Complex>, ActionError> {
    let raw = Quadrature::new(lp.n(), lp.r_max(), samples)?.gradient(lp, pot)?;
    let raw = FourierLoop::new(lp.n(), lp.r_max(), raw)?;
    Ok(crate::fourier::project(&raw, mask)?.coeffs().to_vec())
}

/// Angular momentum and separation statistics of a sampled trajectory.
#[derive(Clone, Debug, PartialEq)]
pub struct Diagnostics {
    /// `L(t_m) = Σ_j Im(conj(z_j) ż_j)` at each sample.
    pub angular_momentum: Vec<f64>,
    pub mean_angular_momentum: f64,
    /// `max_m |L(t_m) − mean|`.
    pub angular_momentum_deviation: f64,
    pub min_distance: f64,
}

pub fn diagnostics(traj: &Trajectory) -> Result<Diagnostics, ActionError> {
    let vel = traj.velocities.as_ref().ok_or(ActionError::MissingVelocities)?;
    let angular_momentum: Vec<f64> = (0..traj.samples)
        .map(|m| (0..traj.n).map(|j| (traj.positions[j][m].conj() * vel[j][m]).im).sum())
        .collect();
    let mean = angular_momentum.iter().sum::<f64>() / traj.samples as f64;
    let deviation = angular_momentum.iter().map(|l| (l - mean).abs()).fold(0.0, f64::max);
    Ok(Diagnostics {
        angular_momentum,
        mean_angular_momentum: mean,
        angular_momentum_deviation: deviation,
        min_distance: traj.min_distance(),
    })
}
