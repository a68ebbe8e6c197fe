//! Permutations of the particle labels.

use alloc::vec::Vec;
use core::fmt;

/// A permutation of `{1, .., n}`, stored 0-based as an image array.
///
/// Composition follows the usual left-action convention: `a.compose(&b)`
/// applies `b` first, then `a`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm { images: (0..n).collect() }
    }

    /// Builds a permutation from 0-based images, returning `None` if the
    /// array is not a bijection of `0..len`.
    pub fn from_images(images: Vec<usize>) -> Option<Perm> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Perm { images })
    }

    /// `j ↦ j + k (mod n)`; `shift(n, 1)` is the n-cycle `(1 2 .. n)`.
    pub fn shift(n: usize, k: i64) -> Perm {
        let n_i = n as i64;
        Perm { images: (0..n_i).map(|i| (i + k).rem_euclid(n_i) as usize).collect() }
    }

    /// `j ↦ c − j (mod n)` in 1-based labels shifted to 0-based: with
    /// `c = 2` this is the order-2 permutation fixing particle 1.
    pub fn reflection(n: usize, c: i64) -> Perm {
        let n_i = n as i64;
        // 1-based j -> c - j  <=>  0-based i -> c - 2 - i
        Perm { images: (0..n_i).map(|i| (c - 2 - i).rem_euclid(n_i) as usize).collect() }
    }

    /// `σ_k`: the `k`-th root of `σ₁`, i.e. `j ↦ j + k′` with `k k′ ≡ 1 (mod n)`.
    /// `None` when `gcd(n, k) ≠ 1`.
    pub fn sigma(n: usize, k: i64) -> Option<Perm> {
        let n_i = n as i64;
        let inv = (1..=n_i).find(|kp| (k * kp).rem_euclid(n_i) == 1 % n_i)?;
        Some(Perm::shift(n, inv))
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Image of the 0-based label `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len(), "permutation sizes differ");
        Perm { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = alloc::vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Perm { images: inv }
    }

    pub fn pow(&self, k: i64) -> Perm {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Perm::identity(self.len());
        for _ in 0..k.unsigned_abs() {
            out = base.compose(&out);
        }
        out
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|(i, j)| i == *j).count()
    }

    /// Whether the permutation lies in the dihedral group generated by the
    /// n-cycle `j ↦ j+1` and the reflection `j ↦ 2−j`.
    pub fn is_dihedral(&self) -> bool {
        let n = self.len() as i64;
        if n == 0 {
            return true;
        }
        let c = self.images[0] as i64;
        let rot = (0..n).all(|i| self.images[i as usize] as i64 == (c + i).rem_euclid(n));
        let refl = (0..n).all(|i| self.images[i as usize] as i64 == (c - i).rem_euclid(n));
        rot || refl
    }

    /// Disjoint cycles in 1-based labels, omitting fixed points.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "e");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, j) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{j}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn compose_applies_right_first() {
        let a = Perm::shift(3, 1);
        let b = Perm::reflection(3, 2);
        // b fixes 1 (0-based 0), then a sends it to 2
        assert_eq!(a.compose(&b).apply(0), 1);
        assert_eq!(b.compose(&a).apply(0), 2);
    }

    #[test]
    fn cycle_notation() {
        assert_eq!(Perm::shift(5, 1).to_string(), "(1 2 3 4 5)");
        assert_eq!(Perm::reflection(5, 2).to_string(), "(2 5)(3 4)");
        assert_eq!(Perm::identity(4).to_string(), "e");
    }

    #[test]
    fn dihedral_membership() {
        assert!(Perm::shift(6, 4).is_dihedral());
        assert!(Perm::reflection(6, 5).is_dihedral());
        let swap = Perm::from_images(alloc::vec![1, 0, 2, 3]).unwrap();
        assert!(!swap.is_dihedral());
    }

    #[test]
    fn sigma_k_is_a_root_of_sigma_1() {
        let s2 = Perm::sigma(7, 2).unwrap();
        assert_eq!(s2.to_string(), "(1 5 2 6 3 7 4)");
        for n in 3..12usize {
            for k in 1..10i64 {
                match Perm::sigma(n, k) {
                    Some(s) => assert_eq!(s.pow(k), Perm::shift(n, 1)),
                    None => assert_ne!(num_integer::gcd(n as i64, k), 1),
                }
            }
        }
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Perm::from_images(alloc::vec![0, 0, 1]).is_none());
        assert!(Perm::from_images(alloc::vec![0, 3, 1]).is_none());
    }
}
