use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::{Family, GroupElement, GroupError, GroupSpec};
use crate::perm::Perm;
use crate::turn::Turn;

/// Closure enumeration gives up beyond this many elements.
pub const CLOSURE_LIMIT: usize = 10_000;

/// A catalog group: its spec, its defining generators, and (for finite
/// families) the full sorted element list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryGroup {
    spec: GroupSpec,
    generators: Vec<GroupElement>,
    elements: Option<Vec<GroupElement>>,
}

fn el(rot: Turn, refl: bool, perm: Perm, shift: Turn, rev: bool) -> GroupElement {
    GroupElement::new(rot, refl, perm, shift, rev)
}

/// Generators of the group named by `spec`. For `D(n,inf/l)` only the two
/// discrete generators are returned; the continuous family `(R_{lθ}, e, θ)`
/// is implicit.
fn generators(spec: &GroupSpec) -> Vec<GroupElement> {
    let n = spec.n();
    let ni = n as i64;
    let c = GroupElement::choreography(n);
    let e = Perm::identity(n);
    let s1 = Perm::reflection(n, 2);
    let reflection = el(Turn::ZERO, true, s1.clone(), Turn::ZERO, true);
    let sigma2 = || Perm::sigma(n, 2).expect("n is odd for exceptional families");
    let l = spec.l() as i64;
    match spec.family() {
        Family::C | Family::D => {
            let k = spec.k().expect("regular family has k") as i64;
            let g0 = el(Turn::new(l, k), false, e, Turn::new(1, k), false);
            let mut gens = vec![c, g0];
            if spec.family() == Family::D {
                gens.push(reflection);
            }
            gens
        }
        Family::CPrime => vec![el(Turn::ZERO, true, sigma2(), Turn::new(-1, 2 * ni), false)],
        Family::DPrime1 => vec![c, el(Turn::HALF, false, s1, Turn::ZERO, true)],
        Family::DPrime2 => vec![
            el(Turn::HALF, true, sigma2(), Turn::new(-1, 2 * ni), false),
            el(Turn::HALF, false, s1, Turn::ZERO, true),
        ],
        Family::DInf => vec![c, reflection],
    }
}

/// Breadth-first closure of `gens` under right multiplication by generators.
pub(crate) fn closure(gens: &[GroupElement], limit: usize) -> Result<Vec<GroupElement>, GroupError> {
    let Some(first) = gens.first() else {
        return Err(GroupError::InvalidSpec("empty generator set".into()));
    };
    let n = first.n();
    if let Some(g) = gens.iter().find(|g| g.n() != n) {
        return Err(GroupError::MismatchedN { left: n, right: g.n() });
    }
    let id = GroupElement::identity(n);
    let mut seen: BTreeSet<GroupElement> = BTreeSet::new();
    seen.insert(id.clone());
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.mul(g);
            if !seen.contains(&y) {
                if seen.len() >= limit {
                    return Err(GroupError::ClosureOverflow { limit });
                }
                seen.insert(y.clone());
                frontier.push(y);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Builds the catalog group named by `spec`, enumerating its elements when
/// the group is finite.
pub fn build_group(spec: &GroupSpec) -> Result<SymmetryGroup, GroupError> {
    let generators = generators(spec);
    let elements = if spec.is_finite() { Some(closure(&generators, CLOSURE_LIMIT)?) } else { None };
    Ok(SymmetryGroup { spec: *spec, generators, elements })
}

impl SymmetryGroup {
    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.spec.n()
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    /// Sorted element list, or `InfiniteGroup` for `D(n,inf/l)`.
    pub fn elements(&self) -> Result<&[GroupElement], GroupError> {
        self.elements.as_deref().ok_or(GroupError::InfiniteGroup)
    }

    pub fn order(&self) -> Option<usize> {
        self.elements.as_ref().map(Vec::len)
    }

    pub fn is_finite(&self) -> bool {
        self.elements.is_some()
    }

    pub fn contains(&self, g: &GroupElement) -> Result<bool, GroupError> {
        Ok(self.elements()?.binary_search(g).is_ok())
    }
}
