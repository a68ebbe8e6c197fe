use num_integer::Integer;

use super::TopologyError;
use crate::group::{Family, GroupSpec};

/// Necessary condition for the component of a `C(n,1)` loop whose
/// generator-path braid has exponent sum `chi` to contain a loop of symmetry
/// `target`. `false` rules the target out; `true` is inconclusive.
///
/// With crossings counted counterclockwise-positive the congruence for
/// `C(n,k/l)`, `gcd(n,k) = 1`, reads `chi ≡ (n−1)l (mod k)`; `C'(n,2)` needs
/// `chi = 0`.
pub fn adjacency_necessary(chi: i64, n: usize, target: &GroupSpec) -> Result<bool, TopologyError> {
    if target.n() != n {
        return Err(TopologyError::MismatchedN { chi_n: n, target_n: target.n() });
    }
    match (target.family(), target.k()) {
        (Family::CPrime, _) => Ok(chi == 0),
        (Family::C, Some(1)) => Ok(true),
        (Family::C, Some(k)) if (n as u64).gcd(&k) == 1 => {
            let k = k as i64;
            Ok((chi - (n as i64 - 1) * target.l() as i64).rem_euclid(k) == 0)
        }
        _ => Err(TopologyError::Unsupported(alloc::format!("{target}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(chi: i64, target: &str) -> Result<bool, TopologyError> {
        let spec: GroupSpec = target.parse().unwrap();
        adjacency_necessary(chi, spec.n(), &spec)
    }

    #[test]
    fn c_prime_needs_zero() {
        assert_eq!(check(0, "C'(3,2)"), Ok(true));
        assert_eq!(check(1, "C'(3,2)"), Ok(false));
    }

    #[test]
    fn c34_congruence() {
        assert_eq!(check(2, "C(3,4)"), Ok(true));
        assert_eq!(check(-2, "C(3,4)"), Ok(true));
        assert_eq!(check(6, "C(3,4)"), Ok(true));
        assert_eq!(check(1, "C(3,4)"), Ok(false));
        assert_eq!(check(0, "C(3,4)"), Ok(false));
    }

    #[test]
    fn trivial_target() {
        for chi in -5..5 {
            assert_eq!(check(chi, "C(5,1)"), Ok(true));
        }
    }

    #[test]
    fn unsupported_targets() {
        for t in ["D(3,4)", "D'(3,1)", "D'(3,2)", "D(3,inf/1)", "C(6,4)"] {
            assert!(matches!(check(0, t), Err(TopologyError::Unsupported(_))), "{t}");
        }
    }
}
