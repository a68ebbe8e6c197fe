use core::fmt;

use crate::perm::Perm;
use crate::turn::Turn;
use crate::Complex;

use super::GroupError;

/// An element `(A, σ, τ)` of `O(2) × S_n × Ŝ¹`.
///
/// * spatial part: `A = R_{2π·rot}` if `refl` is false, `R_{2π·rot} ∘ κ`
///   (κ = complex conjugation) otherwise;
/// * `perm`: the permutation `σ` of particle labels;
/// * temporal part: `t ↦ shift + t`, or `t ↦ shift − t` when `rev` is set.
///
/// Field order fixes the derived `Ord`, which the rest of the crate uses to
/// pick deterministic representatives.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub rot: Turn,
    pub refl: bool,
    pub perm: Perm,
    pub shift: Turn,
    pub rev: bool,
}

/// Composition law shared by `O(2)` and `Ŝ¹`: `(a, f)(b, g) = (a + (−1)^f b, f ⊕ g)`.
fn dihedral_mul(a: Turn, f: bool, b: Turn, g: bool) -> (Turn, bool) {
    (if f { a - b } else { a + b }, f ^ g)
}

impl GroupElement {
    pub fn new(rot: Turn, refl: bool, perm: Perm, shift: Turn, rev: bool) -> GroupElement {
        GroupElement { rot, refl, perm, shift, rev }
    }

    pub fn identity(n: usize) -> GroupElement {
        GroupElement::new(Turn::ZERO, false, Perm::identity(n), Turn::ZERO, false)
    }

    /// The choreography element `(I, σ₁, −1/n)`.
    pub fn choreography(n: usize) -> GroupElement {
        GroupElement::new(Turn::ZERO, false, Perm::shift(n, 1), Turn::new(-1, n as i64), false)
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn is_identity(&self) -> bool {
        self.rot.is_zero() && !self.refl && self.perm.is_identity() && self.shift.is_zero() && !self.rev
    }

    /// `g·h`: acting by `g·h` equals acting by `h`, then `g`.
    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement, GroupError> {
        if self.n() != other.n() {
            return Err(GroupError::MismatchedN { left: self.n(), right: other.n() });
        }
        Ok(self.mul(other))
    }

    pub(crate) fn mul(&self, other: &GroupElement) -> GroupElement {
        let (rot, refl) = dihedral_mul(self.rot, self.refl, other.rot, other.refl);
        let (shift, rev) = dihedral_mul(self.shift, self.rev, other.shift, other.rev);
        GroupElement { rot, refl, perm: self.perm.compose(&other.perm), shift, rev }
    }

    pub fn inverse(&self) -> GroupElement {
        let rot = if self.refl { self.rot } else { -self.rot };
        let shift = if self.rev { self.shift } else { -self.shift };
        GroupElement { rot, refl: self.refl, perm: self.perm.inverse(), shift, rev: self.rev }
    }

    pub fn pow(&self, k: i64) -> GroupElement {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = GroupElement::identity(self.n());
        for _ in 0..k.unsigned_abs() {
            out = base.mul(&out);
        }
        out
    }

    /// Order of the element in the group (smallest `m ≥ 1` with `g^m = e`).
    pub fn order(&self) -> usize {
        let mut acc = self.clone();
        let mut m = 1;
        while !acc.is_identity() {
            acc = self.mul(&acc);
            m += 1;
        }
        m
    }

    /// Spatial part applied to a point of the plane.
    pub fn apply_spatial(&self, z: Complex) -> Complex {
        let w = if self.refl { z.conj() } else { z };
        let theta = core::f64::consts::TAU * self.rot.to_f64();
        Complex::new(libm::cos(theta), libm::sin(theta)) * w
    }

    /// Temporal part applied to a time, reduced into `[0, 1)`.
    pub fn apply_time(&self, t: f64) -> f64 {
        let s = self.shift.to_f64() + if self.rev { -t } else { t };
        s - libm::floor(s)
    }

    /// Whether the temporal part fixes `t` exactly.
    pub fn fixes_time(&self, t: Turn) -> bool {
        if self.rev {
            self.shift - t == t
        } else {
            self.shift.is_zero()
        }
    }

    /// Spatial part is a rotation (lies in `SO(2)`).
    pub fn is_orientation_preserving(&self) -> bool {
        !self.refl
    }

    /// Spatial part is the identity.
    pub fn is_spatially_trivial(&self) -> bool {
        !self.refl && self.rot.is_zero()
    }

    /// Temporal part is the identity.
    pub fn is_temporally_trivial(&self) -> bool {
        !self.rev && self.shift.is_zero()
    }
}

fn write_signed(f: &mut fmt::Formatter<'_>, t: Turn) -> fmt::Result {
    let (num, den) = t.signed();
    if num == 0 {
        write!(f, "0")
    } else {
        write!(f, "{num}/{den}")
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        match (self.rot.is_zero(), self.refl) {
            (true, false) => write!(f, "I")?,
            (true, true) => write!(f, "kappa")?,
            (false, refl) => {
                write!(f, "R(")?;
                write_signed(f, self.rot)?;
                write!(f, ")")?;
                if refl {
                    write!(f, "kappa")?;
                }
            }
        }
        write!(f, ", {}, ", self.perm)?;
        write_signed(f, self.shift)?;
        if self.rev {
            write!(f, "bar")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn reflection(n: usize) -> GroupElement {
        GroupElement::new(Turn::ZERO, true, Perm::reflection(n, 2), Turn::ZERO, true)
    }

    #[test]
    fn choreography_element_has_order_n() {
        for n in 3..9 {
            let c = GroupElement::choreography(n);
            assert!(c.pow(n as i64).is_identity());
            assert_eq!(c.order(), n);
        }
    }

    #[test]
    fn reflection_is_an_involution() {
        let r = reflection(5);
        assert!(r.mul(&r).is_identity());
    }

    #[test]
    fn reflection_inverts_choreography_element() {
        // brute-force products of the three explicit elements
        for n in 3..8 {
            let r = reflection(n);
            let c = GroupElement::choreography(n);
            let conj = r.mul(&c).mul(&r.inverse());
            assert_eq!(conj, c.inverse());
        }
    }

    #[test]
    fn compose_rejects_mismatched_n() {
        let err = GroupElement::identity(3).compose(&GroupElement::identity(4)).unwrap_err();
        assert_eq!(err, GroupError::MismatchedN { left: 3, right: 4 });
    }

    #[test]
    fn inverse_is_two_sided() {
        let g = GroupElement::new(Turn::new(1, 4), true, Perm::shift(5, 2), Turn::new(3, 10), true);
        assert!(g.mul(&g.inverse()).is_identity());
        assert!(g.inverse().mul(&g).is_identity());
        let h = GroupElement::new(Turn::new(2, 7), false, Perm::reflection(5, 3), Turn::new(1, 3), false);
        assert!(h.mul(&h.inverse()).is_identity());
    }

    #[test]
    fn time_action_matches_composition() {
        let g = GroupElement::new(Turn::ZERO, false, Perm::identity(3), Turn::new(1, 5), true);
        let h = GroupElement::new(Turn::ZERO, false, Perm::identity(3), Turn::new(1, 7), false);
        let t = 0.123;
        let lhs = g.mul(&h).apply_time(t);
        let rhs = g.apply_time(h.apply_time(t));
        assert!((lhs - rhs).abs() < 1e-15);
    }

    #[test]
    fn spatial_action_matches_composition() {
        let g = GroupElement::new(Turn::new(1, 3), true, Perm::identity(3), Turn::ZERO, false);
        let h = GroupElement::new(Turn::new(1, 8), false, Perm::identity(3), Turn::ZERO, false);
        let z = Complex::new(0.3, -1.2);
        let lhs = g.mul(&h).apply_spatial(z);
        let rhs = g.apply_spatial(h.apply_spatial(z));
        assert!((lhs - rhs).norm() < 1e-14);
    }

    #[test]
    fn display_uses_signed_representatives() {
        let g = GroupElement::new(Turn::ZERO, true, Perm::shift(3, 2), Turn::new(-1, 6), false);
        assert_eq!(g.to_string(), "(kappa, (1 3 2), -1/6)");
        assert_eq!(reflection(3).to_string(), "(kappa, (2 3), 0bar)");
    }
}
