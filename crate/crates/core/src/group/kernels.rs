use alloc::vec::Vec;

use num_integer::Integer;

use super::{Family, GroupElement, GroupError, GroupSpec, SymmetryGroup};
use crate::perm::Perm;
use crate::turn::Turn;

/// A cyclic subgroup given by its sorted elements and one generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    pub elements: Vec<GroupElement>,
    /// An element whose powers exhaust `elements`; `None` if the subgroup is
    /// not cyclic.
    pub generator: Option<GroupElement>,
}

impl Subgroup {
    fn from_filter(elements: &[GroupElement], keep: impl Fn(&GroupElement) -> bool) -> Subgroup {
        let elements: Vec<GroupElement> = elements.iter().filter(|g| keep(g)).cloned().collect();
        let generator = elements.iter().find(|g| g.order() == elements.len()).cloned();
        Subgroup { elements, generator }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// `ker ρ`, `ker σ` and the core `ker τ` of a finite catalog group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kernels {
    pub ker_rho: Subgroup,
    pub ker_sigma: Subgroup,
    pub core: Subgroup,
}

pub fn kernels_and_core(group: &SymmetryGroup) -> Result<Kernels, GroupError> {
    let elements = group.elements()?;
    Ok(Kernels {
        ker_rho: Subgroup::from_filter(elements, GroupElement::is_spatially_trivial),
        ker_sigma: Subgroup::from_filter(elements, |g| g.perm.is_identity()),
        core: Subgroup::from_filter(elements, GroupElement::is_temporally_trivial),
    })
}

/// Closed-form core generator `(R_{2πl/c}, σ₁^{n/c}, 0)` with `c = gcd(n, k)`,
/// for the regular families. Exceptional families have trivial core.
pub fn core_generator(spec: &GroupSpec) -> Option<GroupElement> {
    let n = spec.n();
    match spec.family() {
        Family::C | Family::D => {
            let c = (n as u64).gcd(&spec.k()?) as i64;
            Some(GroupElement::new(
                Turn::new(spec.l() as i64, c),
                false,
                Perm::shift(n, n as i64 / c),
                Turn::ZERO,
                false,
            ))
        }
        Family::CPrime | Family::DPrime1 | Family::DPrime2 => Some(GroupElement::identity(n)),
        Family::DInf => None,
    }
}
