use alloc::vec::Vec;

use super::{FourierError, FourierLoop};
use crate::group::{Family, GroupSpec, SymmetryGroup};
use crate::Complex;

/// A real-linear relation among Fourier coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `ζ_r ∈ ℝ`.
    Real(i64),
    /// `ζ_r ∈ iℝ`.
    Imag(i64),
    /// `ζ_{−r} = −ζ_r` (stored with `r > 0`).
    NegPair(i64),
    /// `ζ_{−r} = (−1)^r conj(ζ_r)` (stored with `r > 0`).
    ConjPair(i64),
}

/// The subspace of truncated coefficient space allowed by a symmetry type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintMask {
    n: usize,
    r_max: usize,
    allowed: Vec<i64>,
    relations: Vec<Relation>,
}

impl ConstraintMask {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r_max(&self) -> usize {
        self.r_max
    }

    /// Harmonics that may carry a nonzero coefficient, ascending.
    pub fn allowed(&self) -> &[i64] {
        &self.allowed
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn is_allowed(&self, r: i64) -> bool {
        self.allowed.binary_search(&r).is_ok()
    }

    /// Real dimension of the masked subspace (the trace of the projection).
    pub fn dimension(&self) -> usize {
        let mut probe = FourierLoop::zeros(self.n, self.r_max).expect("mask has R >= 1");
        let mut trace = 0.0;
        for idx in 0..probe.coeffs().len() {
            for unit in [Complex::new(1.0, 0.0), Complex::new(0.0, 1.0)] {
                probe.coeffs_mut()[idx] = unit;
                let image = project_raw(&probe, self);
                let c = image.coeffs()[idx];
                trace += c.re * unit.re + c.im * unit.im;
                probe.coeffs_mut()[idx] = Complex::new(0.0, 0.0);
            }
        }
        libm::round(trace) as usize
    }

    /// Largest coefficient-space distance between `lp` and its projection.
    pub fn violation(&self, lp: &FourierLoop) -> Result<f64, FourierError> {
        Ok(project(lp, self)?.max_abs_diff(lp))
    }
}

/// Coefficient mask of the symmetry type `spec` at truncation order `r_max`.
pub fn constraint_mask(spec: &GroupSpec, r_max: usize) -> Result<ConstraintMask, FourierError> {
    if r_max == 0 {
        return Err(FourierError::ZeroOrder);
    }
    let n = spec.n() as i64;
    let rm = r_max as i64;
    let positive = |keep: &dyn Fn(i64) -> bool| (1..=rm).filter(|&r| r % n != 0 && keep(r)).collect::<Vec<_>>();
    let (allowed, relations): (Vec<i64>, Vec<Relation>) = match spec.family() {
        Family::C | Family::D => {
            let k = spec.k().expect("regular family has k") as i64;
            let l = spec.l() as i64;
            let allowed: Vec<i64> = (-rm..=rm).filter(|&r| r % n != 0 && (r - l).rem_euclid(k) == 0).collect();
            let relations = if spec.family() == Family::D {
                allowed.iter().map(|&r| Relation::Real(r)).collect()
            } else {
                Vec::new()
            };
            (allowed, relations)
        }
        Family::CPrime => {
            let pos = positive(&|_| true);
            (symmetric(&pos), pos.iter().map(|&r| Relation::ConjPair(r)).collect())
        }
        Family::DPrime1 => {
            let pos = positive(&|_| true);
            (symmetric(&pos), pos.iter().map(|&r| Relation::NegPair(r)).collect())
        }
        Family::DPrime2 => {
            let pos = positive(&|_| true);
            let mut rel = Vec::new();
            for &r in &pos {
                rel.push(Relation::NegPair(r));
                for s in [r, -r] {
                    rel.push(if r % 2 == 0 { Relation::Real(s) } else { Relation::Imag(s) });
                }
            }
            (symmetric(&pos), rel)
        }
        Family::DInf => return Err(FourierError::InfiniteGroup),
    };
    Ok(ConstraintMask { n: spec.n(), r_max, allowed, relations })
}

fn symmetric(pos: &[i64]) -> Vec<i64> {
    let mut out: Vec<i64> = pos.iter().rev().map(|r| -r).chain(pos.iter().copied()).collect();
    out.sort_unstable();
    out
}

fn project_raw(lp: &FourierLoop, mask: &ConstraintMask) -> FourierLoop {
    let mut out = lp.clone();
    for r in out.harmonics() {
        if !mask.is_allowed(r) {
            out.set(r, Complex::new(0.0, 0.0));
        }
    }
    for rel in &mask.relations {
        match *rel {
            Relation::Real(r) => out.coeff_mut(r).im = 0.0,
            Relation::Imag(r) => out.coeff_mut(r).re = 0.0,
            Relation::NegPair(r) => {
                let a = (out.coeff(r) - out.coeff(-r)) * 0.5;
                out.set(r, a);
                out.set(-r, -a);
            }
            Relation::ConjPair(r) => {
                let s = if r % 2 == 0 { 1.0 } else { -1.0 };
                let a = (out.coeff(r) + out.coeff(-r).conj() * s) * 0.5;
                out.set(r, a);
                out.set(-r, a.conj() * s);
            }
        }
    }
    out
}

/// Orthogonal projection onto the masked subspace.
pub fn project(lp: &FourierLoop, mask: &ConstraintMask) -> Result<FourierLoop, FourierError> {
    if lp.r_max() != mask.r_max {
        return Err(FourierError::OrderMismatch { loop_r: lp.r_max(), mask_r: mask.r_max });
    }
    if lp.n() != mask.n {
        return Err(FourierError::ParticleMismatch { loop_n: lp.n(), expected: mask.n });
    }
    Ok(project_raw(lp, mask))
}

/// Dimension of the subspace of truncated choreography loops fixed by every
/// element of `group`, computed as the trace of the group average.
pub fn invariant_dimension(group: &SymmetryGroup, r_max: usize) -> Result<usize, FourierError> {
    let elements = group.elements().map_err(|_| FourierError::InfiniteGroup)?;
    let n = group.n();
    let mut probe = FourierLoop::zeros(n, r_max)?;
    let mut trace = 0.0;
    for r in probe.harmonics().filter(|r| r % n as i64 != 0) {
        for unit in [Complex::new(1.0, 0.0), Complex::new(0.0, 1.0)] {
            probe.set(r, unit);
            for g in elements {
                let c = probe.transformed(g).coeff(r);
                trace += c.re * unit.re + c.im * unit.im;
            }
            probe.set(r, Complex::new(0.0, 0.0));
        }
    }
    Ok(libm::round(trace / elements.len() as f64) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourier::Harmonic;
    use crate::group::build_group;

    fn mask(name: &str, r: usize) -> ConstraintMask {
        constraint_mask(&name.parse().unwrap(), r).unwrap()
    }

    #[test]
    fn c34_support() {
        assert_eq!(mask("C(3,4)", 10).allowed(), &[-7, 1, 5]);
    }

    #[test]
    fn cn1_excludes_multiples_of_n() {
        for n in 3..8i64 {
            let m = mask(&alloc::format!("C({n},1)"), n as usize + 1);
            let expected: Vec<i64> = (-n - 1..=n + 1).filter(|r| ![-n, 0, n].contains(r)).collect();
            assert_eq!(m.allowed(), expected.as_slice());
        }
    }

    #[test]
    fn d_prime1_kills_symmetric_pairs() {
        let m = mask("D'(3,1)", 2);
        let mut lp = FourierLoop::zeros(3, 2).unwrap();
        lp.set(1, Complex::new(1.0, 0.0));
        lp.set(-1, Complex::new(1.0, 0.0));
        let p = project(&lp, &m).unwrap();
        assert_eq!(p.coeff(1), Complex::new(0.0, 0.0));
        assert_eq!(p.coeff(-1), Complex::new(0.0, 0.0));
    }

    #[test]
    fn c52_support_after_projection() {
        let m = mask("C(5,2)", 6);
        let coeffs = (0..13).map(|i| Complex::new(1.0 + i as f64, 0.5 - i as f64)).collect();
        let p = project(&FourierLoop::new(5, 6, coeffs).unwrap(), &m).unwrap();
        let support: Vec<i64> = p.harmonics().filter(|&r| p.coeff(r) != Complex::new(0.0, 0.0)).collect();
        assert_eq!(support, [-3, -1, 1, 3]);
    }

    #[test]
    fn figure_eight_satisfies_d_prime2() {
        let x = [Harmonic { r: 1, cos: 0.0, sin: 1.096 }, Harmonic { r: 5, cos: 0.0, sin: -0.0252 }, Harmonic { r: 7, cos: 0.0, sin: -0.0058 }];
        let y = [Harmonic { r: 2, cos: 0.0, sin: 0.3373 }, Harmonic { r: 4, cos: 0.0, sin: 0.0557 }];
        let lp = FourierLoop::from_xy_harmonics(3, 7, &x, &y).unwrap();
        assert_eq!(mask("D'(3,2)", 7).violation(&lp).unwrap(), 0.0);
    }

    #[test]
    fn mask_dimension_matches_group_average() {
        for name in ["C(3,1)", "D(4,3)", "C(6,4)", "C'(5,2)", "D'(3,1)", "D'(5,2)", "D(5,7/2)"] {
            let spec: GroupSpec = name.parse().unwrap();
            let g = build_group(&spec).unwrap();
            for r in [1, 4, 9] {
                assert_eq!(constraint_mask(&spec, r).unwrap().dimension(), invariant_dimension(&g, r).unwrap(), "{name} R={r}");
            }
        }
    }

    #[test]
    fn circular_family_has_no_mask() {
        assert_eq!(constraint_mask(&"D(3,inf/1)".parse().unwrap(), 4), Err(FourierError::InfiniteGroup));
    }
}
