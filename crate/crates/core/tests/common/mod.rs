#![allow(dead_code)]

use choreo_core::fourier::{min_samples, unit};
use choreo_core::{constraint_mask, project, sample_trajectory, Complex, FourierLoop, GroupSpec};
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every finite catalog spec with `n <= nmax`, `k <= kmax`.
pub fn catalog(nmax: usize, kmax: u64) -> Vec<GroupSpec> {
    (3..=nmax).flat_map(|n| GroupSpec::catalog(n, kmax)).collect()
}

pub fn random_loop(n: usize, r_max: usize, seed: u64) -> FourierLoop {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coeffs = (0..2 * r_max + 1).map(|_| Complex::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))).collect();
    FourierLoop::new(n, r_max, coeffs).unwrap()
}

/// A masked loop dominated by one or two low harmonics, with particles at
/// least `0.05` apart on a fine grid. `None` if the seed gives no such loop.
pub fn separated_loop(spec: &GroupSpec, r_max: usize, seed: u64) -> Option<FourierLoop> {
    let n = spec.n();
    let mask = constraint_mask(spec, r_max).unwrap();
    let mut allowed = mask.allowed().to_vec();
    allowed.sort_by_key(|&r| (r.unsigned_abs(), r < 0));
    let lead: Vec<i64> = allowed.iter().copied().filter(|r| r.unsigned_abs().gcd(&(n as u64)) == 1).take(3).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tries: Vec<(i64, Option<i64>)> = lead.iter().map(|&a| (a, None)).collect();
    for &a in &lead {
        for &b in allowed.iter().filter(|&&b| b != a).take(4) {
            tries.push((a, Some(b)));
        }
    }
    for (a, b) in tries {
        let mut lp = FourierLoop::zeros(n, r_max).unwrap();
        lp.set(a, Complex::new(0.6, 0.0));
        if let Some(b) = b {
            lp.set(b, 0.3 * unit(rng.random_range(0.0..1.0)));
        }
        for &r in &allowed {
            let noise = Complex::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            *lp.coeff_mut(r) += 0.03 / r.unsigned_abs() as f64 * noise;
        }
        let lp = project(&lp, &mask).unwrap();
        let traj = sample_trajectory(&lp, min_samples(r_max).max(200)).unwrap();
        if traj.min_distance() > 0.05 {
            return Some(lp);
        }
    }
    None
}
