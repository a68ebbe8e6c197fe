//! Truncated Fourier loops of choreographies, symmetry masks and sampling.

use alloc::vec::Vec;

use crate::group::GroupElement;
use crate::Complex;

mod mask;
mod sample;

pub use mask::{constraint_mask, invariant_dimension, project, ConstraintMask, Relation};
pub use sample::{element_residual, min_samples, sample_trajectory, symmetry_residual, Trajectory};

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum FourierError {
    #[error("circular choreographies D(n,inf/l) have no finite mask; parametrize them directly as z(t) = e^(2 pi i l t)")]
    InfiniteGroup,
    #[error("expected {expected} coefficients for R = {r_max}, got {got}")]
    Length { r_max: usize, expected: usize, got: usize },
    #[error("truncation order must be at least 1")]
    ZeroOrder,
    #[error("loop has R = {loop_r}, mask has R = {mask_r}")]
    OrderMismatch { loop_r: usize, mask_r: usize },
    #[error("loop has n = {loop_n}, expected n = {expected}")]
    ParticleMismatch { loop_n: usize, expected: usize },
    #[error("{samples} samples cannot resolve R = {r_max}; need at least {min}")]
    TooFewSamples { samples: usize, r_max: usize, min: usize },
}

/// `e^{2πix}` with the argument reduced mod 1 first.
pub fn unit(x: f64) -> Complex {
    let theta = core::f64::consts::TAU * (x - libm::floor(x));
    Complex::new(libm::cos(theta), libm::sin(theta))
}

/// One real harmonic `cos·cos(2πrt) + sin·sin(2πrt)` of a coordinate function.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Harmonic {
    pub r: usize,
    pub cos: f64,
    pub sin: f64,
}

/// The underlying curve `z(t) = Σ_{|r| ≤ R} ζ_r e^{2πirt}` of an `n`-particle
/// choreography; particle `j` (1-based) sits at `z(t + (j−1)/n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FourierLoop {
    n: usize,
    r_max: usize,
    coeffs: Vec<Complex>,
}

impl FourierLoop {
    /// `coeffs` is ordered `r = −R..=R`.
    pub fn new(n: usize, r_max: usize, coeffs: Vec<Complex>) -> Result<FourierLoop, FourierError> {
        if r_max == 0 {
            return Err(FourierError::ZeroOrder);
        }
        let expected = 2 * r_max + 1;
        if coeffs.len() != expected {
            return Err(FourierError::Length { r_max, expected, got: coeffs.len() });
        }
        Ok(FourierLoop { n, r_max, coeffs })
    }

    pub fn zeros(n: usize, r_max: usize) -> Result<FourierLoop, FourierError> {
        FourierLoop::new(n, r_max, alloc::vec![Complex::new(0.0, 0.0); 2 * r_max + 1])
    }

    /// The circular choreography `z(t) = radius · e^{2πirt}`.
    pub fn circular(n: usize, r_max: usize, r: i64, radius: f64) -> Result<FourierLoop, FourierError> {
        let mut out = FourierLoop::zeros(n, r_max)?;
        out.set(r, Complex::new(radius, 0.0));
        Ok(out)
    }

    /// Builds `z = x + iy` from real trigonometric series for `x` and `y`.
    ///
    /// # Panics
    ///
    /// Panics if a harmonic exceeds `r_max`.
    pub fn from_xy_harmonics(n: usize, r_max: usize, x: &[Harmonic], y: &[Harmonic]) -> Result<FourierLoop, FourierError> {
        let mut out = FourierLoop::zeros(n, r_max)?;
        let i = Complex::new(0.0, 1.0);
        for (terms, scale) in [(x, Complex::new(1.0, 0.0)), (y, i)] {
            for h in terms {
                let r = h.r as i64;
                let c = Complex::new(h.cos, 0.0);
                let s = Complex::new(h.sin, 0.0);
                // cos = (e + ē)/2, sin = (e − ē)/2i
                let plus = scale * (c - i * s) * 0.5;
                let minus = scale * (c + i * s) * 0.5;
                if r == 0 {
                    *out.coeff_mut(0) += scale * c;
                } else {
                    *out.coeff_mut(r) += plus;
                    *out.coeff_mut(-r) += minus;
                }
            }
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r_max(&self) -> usize {
        self.r_max
    }

    /// Coefficients ordered `r = −R..=R`.
    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [Complex] {
        &mut self.coeffs
    }

    pub fn harmonics(&self) -> core::ops::RangeInclusive<i64> {
        -(self.r_max as i64)..=self.r_max as i64
    }

    fn index(&self, r: i64) -> usize {
        assert!(r.unsigned_abs() as usize <= self.r_max, "harmonic {r} beyond R = {}", self.r_max);
        (r + self.r_max as i64) as usize
    }

    /// `ζ_r`; zero beyond the truncation order.
    pub fn coeff(&self, r: i64) -> Complex {
        if r.unsigned_abs() as usize > self.r_max {
            return Complex::new(0.0, 0.0);
        }
        self.coeffs[self.index(r)]
    }

    pub fn coeff_mut(&mut self, r: i64) -> &mut Complex {
        let i = self.index(r);
        &mut self.coeffs[i]
    }

    pub fn set(&mut self, r: i64, value: Complex) {
        *self.coeff_mut(r) = value;
    }

    /// `z(t)`.
    pub fn eval(&self, t: f64) -> Complex {
        self.harmonics().zip(&self.coeffs).map(|(r, c)| c * unit(r as f64 * t)).sum()
    }

    /// `ż(t)`.
    pub fn eval_velocity(&self, t: f64) -> Complex {
        self.harmonics()
            .zip(&self.coeffs)
            .map(|(r, c)| c * unit(r as f64 * t) * Complex::new(0.0, core::f64::consts::TAU * r as f64))
            .sum()
    }

    /// Position of particle `j` (0-based) at time `t`.
    pub fn particle(&self, j: usize, t: f64) -> Complex {
        self.eval(t + j as f64 / self.n as f64)
    }

    /// Coefficient-space 2-norm.
    pub fn norm(&self) -> f64 {
        libm::sqrt(self.coeffs.iter().map(Complex::norm_sqr).sum())
    }

    pub fn max_abs_diff(&self, other: &FourierLoop) -> f64 {
        self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// `self + s·dir`, coefficientwise.
    pub fn axpy(&self, s: f64, dir: &[Complex]) -> FourierLoop {
        let coeffs = self.coeffs.iter().zip(dir).map(|(c, d)| c + d * s).collect();
        FourierLoop { n: self.n, r_max: self.r_max, coeffs }
    }

    /// The loop `g·u`, where `(g·u)_{σ(j)}(τ(t)) = A u_j(t)`, written again
    /// through its underlying curve. `g` must normalize the choreography
    /// subgroup for the result to be a choreography (true for catalog groups).
    pub fn transformed(&self, g: &GroupElement) -> FourierLoop {
        assert_eq!(g.n(), self.n, "element acts on a different particle count");
        let inv = g.inverse();
        // τ⁻¹(t) = p + εt; particle σ⁻¹(1) is the curve shifted by d
        let p = inv.shift.to_f64();
        let eps: i64 = if inv.rev { -1 } else { 1 };
        let d = inv.perm.apply(0) as f64 / self.n as f64;
        let rot = unit(g.rot.to_f64());
        let pre = |m: i64| {
            let r = eps * m;
            self.coeff(r) * unit(r as f64 * (p + d))
        };
        let coeffs = self
            .harmonics()
            .map(|m| if g.refl { rot * pre(-m).conj() } else { rot * pre(m) })
            .collect();
        FourierLoop { n: self.n, r_max: self.r_max, coeffs }
    }
}
