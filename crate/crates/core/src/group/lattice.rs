use super::{Family, GroupError, GroupSpec};

/// `l ≡ ±l′ (mod k)`.
fn pm_congruent(l: u64, lp: u64, k: u64) -> bool {
    let (l, lp) = (l % k, lp % k);
    l == lp || (l + lp) % k == 0
}

/// `k | k′` and `l ≡ ±l′ (mod k)`, with `k′ = None` standing for `∞`.
fn regular_le(k: u64, l: u64, kp: Option<u64>, lp: u64) -> bool {
    kp.is_none_or(|kp| kp % k == 0) && pm_congruent(l, lp, k)
}

/// Whether `h` is subconjugate to `g` (`h ≺ g`) in the lattice of catalog
/// groups with the same `n`. Reflexive and transitively closed.
pub fn subconjugate(h: &GroupSpec, g: &GroupSpec) -> Result<bool, GroupError> {
    if h.n() != g.n() {
        return Err(GroupError::MismatchedN { left: h.n(), right: g.n() });
    }
    if h == g {
        return Ok(true);
    }
    use Family::*;
    let (l, lp) = (h.l(), g.l());
    let out = match (h.family(), g.family()) {
        (C, C | D | DInf) | (D, D | DInf) => {
            let k = h.k().expect("regular family has k");
            regular_le(k, l, g.k(), lp)
        }
        (C, CPrime | DPrime1 | DPrime2) => h.k() == Some(1),
        (CPrime, DPrime2) | (DPrime1, DPrime2) => true,
        _ => false,
    };
    Ok(out)
}
