use alloc::vec::Vec;

use super::{kinetic_weight, ActionError, PotentialSpec, Quadrature};
use crate::fourier::{constraint_mask, project, ConstraintMask, FourierLoop};
use crate::group::GroupSpec;
use crate::Complex;

/// Inner product used to turn the gradient into a descent direction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Metric {
    /// Plain coefficient-space gradient.
    #[default]
    Euclidean,
    /// Gradient preconditioned by the kinetic Hessian `n(2πr)²`.
    Sobolev,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MinimizeOptions {
    pub samples: usize,
    pub max_iter: usize,
    pub grad_tol: f64,
    /// First trial step; later iterations start from twice the last
    /// accepted step.
    pub initial_step: f64,
    /// Sufficient-decrease constant of the Armijo test.
    pub armijo: f64,
    /// Backtracking factor.
    pub shrink: f64,
    /// Trial steps below this are treated as a stalled line search.
    pub min_step: f64,
    /// Trial loops whose minimum sampled distance falls below this are
    /// rejected.
    pub min_dist_guard: f64,
    pub metric: Metric,
}

impl MinimizeOptions {
    /// Defaults for truncation order `r_max`: `M = 8(2R+1)` samples.
    pub fn for_order(r_max: usize) -> MinimizeOptions {
        MinimizeOptions {
            samples: 8 * (2 * r_max + 1),
            max_iter: 20_000,
            grad_tol: 1e-7,
            initial_step: 1e-3,
            armijo: 1e-4,
            shrink: 0.5,
            min_step: 1e-18,
            min_dist_guard: 1e-3,
            metric: Metric::Euclidean,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MinimizeResult {
    pub curve: FourierLoop,
    pub action: f64,
    /// Euclidean norm of the projected gradient at `curve`.
    pub grad_norm: f64,
    pub min_distance: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Action after each accepted step, starting with the initial loop,
    /// accumulated from the per-step differences.
    pub history: Vec<f64>,
}

fn masked(v: Vec<Complex>, lp: &FourierLoop, mask: &ConstraintMask) -> Result<Vec<Complex>, ActionError> {
    let wrapped = FourierLoop::new(lp.n(), lp.r_max(), v)?;
    Ok(project(&wrapped, mask)?.coeffs().to_vec())
}

fn dot(a: &[Complex], b: &[Complex]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x.re * y.re + x.im * y.im).sum()
}

/// Projected steepest descent with Armijo backtracking on the loops of
/// symmetry type `spec`.
pub fn minimize(
    init: &FourierLoop,
    spec: &GroupSpec,
    pot: &PotentialSpec,
    opts: &MinimizeOptions,
) -> Result<MinimizeResult, ActionError> {
    let mask = constraint_mask(spec, init.r_max())?;
    if init.n() != spec.n() {
        return Err(crate::fourier::FourierError::ParticleMismatch { loop_n: init.n(), expected: spec.n() }.into());
    }
    if mask.dimension() == 0 {
        return Err(ActionError::EmptyMask);
    }
    let violation = mask.violation(init)?;
    if violation > 1e-12 * init.norm().max(1.0) {
        return Err(ActionError::MaskViolation(violation));
    }
    let quad = Quadrature::new(init.n(), init.r_max(), opts.samples)?;
    let n = init.n() as f64;
    let precondition: Vec<f64> = init
        .harmonics()
        .map(|r| match opts.metric {
            Metric::Euclidean => 1.0,
            Metric::Sobolev => 1.0 / (n * kinetic_weight(r)).max(n * kinetic_weight(1)),
        })
        .collect();

    let mut x = project(init, &mask)?;
    let mut f = quad.action(&x, pot)?;
    let mut history = alloc::vec![f];
    let mut step = opts.initial_step;
    let mut iterations = 0;
    let mut grad = masked(quad.gradient(&x, pot)?, &x, &mask)?;
    let mut grad_norm = libm::sqrt(dot(&grad, &grad));

    while grad_norm >= opts.grad_tol && iterations < opts.max_iter {
        let dir: Vec<Complex> = grad.iter().zip(&precondition).map(|(g, p)| -g * *p).collect();
        let slope = dot(&grad, &dir);
        let mut trial_step = step;
        let accepted = loop {
            if trial_step < opts.min_step {
                break None;
            }
            let y = project(&x.axpy(trial_step, &dir), &mask)?;
            if quad.min_distance(&y) >= opts.min_dist_guard {
                if let Ok(delta) = quad.difference(&x, &y, pot) {
                    if delta <= opts.armijo * trial_step * slope {
                        break Some((y, delta));
                    }
                }
            }
            trial_step *= opts.shrink;
        };
        let Some((y, delta)) = accepted else { break };
        x = y;
        f += delta;
        history.push(f);
        iterations += 1;
        step = 2.0 * trial_step;
        grad = masked(quad.gradient(&x, pot)?, &x, &mask)?;
        grad_norm = libm::sqrt(dot(&grad, &grad));
    }

    Ok(MinimizeResult {
        min_distance: quad.min_distance(&x),
        action: quad.action(&x, pot)?,
        grad_norm,
        iterations,
        converged: grad_norm < opts.grad_tol,
        history,
        curve: x,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_relaxes_to_critical_radius() {
        // a = 2: A(ρ) = 6π²ρ² + 1/ρ², so ρ⁴ = 1/(6π²)
        let spec: GroupSpec = "C(3,1)".parse().unwrap();
        let init = FourierLoop::circular(3, 4, 1, 1.0).unwrap();
        let opts = MinimizeOptions { grad_tol: 1e-9, ..MinimizeOptions::for_order(4) };
        let res = minimize(&init, &spec, &PotentialSpec::new(2.0).unwrap(), &opts).unwrap();
        assert!(res.converged, "{} iterations, grad {}", res.iterations, res.grad_norm);
        let rho = libm::pow(1.0 / (6.0 * core::f64::consts::PI * core::f64::consts::PI), 0.25);
        assert!((res.curve.coeff(1).norm() - rho).abs() < 1e-9);
        assert!(res.history.windows(2).all(|w| w[1] <= w[0]));
    }

    #[test]
    fn rejects_unmasked_init() {
        let spec: GroupSpec = "C(3,4)".parse().unwrap();
        let init = FourierLoop::circular(3, 4, 2, 1.0).unwrap();
        let res = minimize(&init, &spec, &PotentialSpec::newtonian(), &MinimizeOptions::for_order(4));
        assert!(matches!(res, Err(ActionError::MaskViolation(_))));
    }

    #[test]
    fn rejects_colliding_init() {
        let spec: GroupSpec = "C(3,1)".parse().unwrap();
        let init = FourierLoop::zeros(3, 2).unwrap();
        let res = minimize(&init, &spec, &PotentialSpec::newtonian(), &MinimizeOptions::for_order(2));
        assert!(matches!(res, Err(ActionError::Collision { .. })));
    }

    #[test]
    fn rejects_empty_mask() {
        // r ≡ 3 mod 8 has no representative with |r| <= 2
        let spec: GroupSpec = "C(4,8/3)".parse().unwrap();
        let init = FourierLoop::zeros(4, 2).unwrap();
        let res = minimize(&init, &spec, &PotentialSpec::newtonian(), &MinimizeOptions::for_order(2));
        assert_eq!(res, Err(ActionError::EmptyMask));
    }
}
