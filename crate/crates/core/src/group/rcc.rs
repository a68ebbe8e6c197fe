use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{GroupElement, GroupError, SymmetryGroup};
use crate::turn::Turn;

/// Outcome of the rotating circle condition check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RccVerdict {
    pub holds: bool,
    /// A violating element of `G_t` (smallest in the element order).
    pub witness: Option<GroupElement>,
    /// The time `t` at which the witness violates the condition.
    pub time: Option<Turn>,
}

/// Times fixed by some time-reversing element, plus one generic time fixed by
/// no reversing element (there `G_t` is the core).
fn candidate_times(elements: &[GroupElement]) -> Vec<Turn> {
    let mut times = BTreeSet::new();
    for g in elements.iter().filter(|g| g.rev) {
        let t = g.shift.halve();
        times.insert(t);
        times.insert(t + Turn::HALF);
    }
    let mut den = 2 * elements.len() as i64 + 1;
    let generic = loop {
        let t = Turn::new(1, den);
        if !times.contains(&t) && !elements.iter().any(|g| g.rev && g.fixes_time(t)) {
            break t;
        }
        den += 1;
    };
    times.insert(generic);
    times.into_iter().collect()
}

/// First violation of the two conditions at time `t`, if any.
fn violation(elements: &[GroupElement], n: usize, t: Turn) -> Option<GroupElement> {
    let stabilizer: Vec<&GroupElement> = elements.iter().filter(|g| g.fixes_time(t)).collect();
    // condition 1: ρ(G_t) < SO(2)
    if let Some(g) = stabilizer.iter().find(|g| g.refl) {
        return Some((*g).clone());
    }
    // condition 2: ρ(G_{t,i}) trivial for at least n − 1 indices i
    let bad: Vec<&GroupElement> = (0..n)
        .filter_map(|i| {
            stabilizer
                .iter()
                .filter(|g| g.perm.apply(i) == i && !g.is_spatially_trivial())
                .min()
                .copied()
        })
        .collect();
    if bad.len() > 1 {
        return bad.into_iter().min().cloned();
    }
    None
}

/// Checks the rotating circle condition at every time fixed by a group
/// element (and one generic time).
pub fn rcc_check(group: &SymmetryGroup) -> Result<RccVerdict, GroupError> {
    let elements = group.elements()?;
    for t in candidate_times(elements) {
        if let Some(w) = violation(elements, group.n(), t) {
            return Ok(RccVerdict { holds: false, witness: Some(w), time: Some(t) });
        }
    }
    Ok(RccVerdict { holds: true, witness: None, time: None })
}
