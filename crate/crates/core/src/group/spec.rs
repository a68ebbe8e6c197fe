use alloc::string::{String, ToString};
use core::fmt;
use core::str::FromStr;

use num_integer::Integer;

use super::GroupError;

/// The symmetry-type families of planar choreographies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `C(n,k/l)`: non-reversing, curve with `k`-fold rotational symmetry.
    C,
    /// `D(n,k/l)`: `C(n,k/l)` plus a time-reversing reflection.
    D,
    /// `C'(n,2)`, `n` odd.
    CPrime,
    /// `D'(n,1)`, `n` odd.
    DPrime1,
    /// `D'(n,2)`, `n` odd.
    DPrime2,
    /// `D(n,inf/l)`: the circular choreographies.
    DInf,
}

impl Family {
    pub fn is_exceptional(self) -> bool {
        matches!(self, Family::CPrime | Family::DPrime1 | Family::DPrime2)
    }

    pub fn is_reversing(self) -> bool {
        !matches!(self, Family::C | Family::CPrime)
    }
}

/// A catalog entry `(family, n, k, l)`, validated and in canonical form.
///
/// `k` is `None` for the exceptional families and for `D(n,inf/l)`; `l` is
/// 1 for the exceptional families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSpec {
    family: Family,
    n: usize,
    k: Option<u64>,
    l: u64,
}

/// Canonical representative of `l` among `l`, `k − l` (mod k).
fn canonical_l(k: u64, l: u64) -> u64 {
    if k <= 2 {
        return 1;
    }
    let r = l % k;
    r.min(k - r)
}

impl GroupSpec {
    fn check_n(n: usize) -> Result<(), GroupError> {
        if n < 3 {
            return Err(GroupError::InvalidSpec(alloc::format!("n = {n}: need n >= 3")));
        }
        Ok(())
    }

    fn regular(family: Family, n: usize, k: u64, l: u64) -> Result<GroupSpec, GroupError> {
        Self::check_n(n)?;
        if k == 0 || l == 0 {
            return Err(GroupError::InvalidSpec("k and l must be >= 1".to_string()));
        }
        if k.gcd(&l) != 1 {
            return Err(GroupError::InvalidSpec(alloc::format!(
                "gcd(k, l) = gcd({k}, {l}) != 1"
            )));
        }
        Ok(GroupSpec { family, n, k: Some(k), l: canonical_l(k, l) })
    }

    fn exceptional(family: Family, n: usize) -> Result<GroupSpec, GroupError> {
        Self::check_n(n)?;
        if n.is_multiple_of(2) {
            return Err(GroupError::InvalidSpec(alloc::format!(
                "exceptional family requires odd n, got n = {n}"
            )));
        }
        Ok(GroupSpec { family, n, k: None, l: 1 })
    }

    /// `C(n,k/l)`.
    pub fn cyclic(n: usize, k: u64, l: u64) -> Result<GroupSpec, GroupError> {
        Self::regular(Family::C, n, k, l)
    }

    /// `D(n,k/l)`.
    pub fn dihedral(n: usize, k: u64, l: u64) -> Result<GroupSpec, GroupError> {
        Self::regular(Family::D, n, k, l)
    }

    /// `C'(n,2)`.
    pub fn c_prime(n: usize) -> Result<GroupSpec, GroupError> {
        Self::exceptional(Family::CPrime, n)
    }

    /// `D'(n,1)`.
    pub fn d_prime1(n: usize) -> Result<GroupSpec, GroupError> {
        Self::exceptional(Family::DPrime1, n)
    }

    /// `D'(n,2)`.
    pub fn d_prime2(n: usize) -> Result<GroupSpec, GroupError> {
        Self::exceptional(Family::DPrime2, n)
    }

    /// `D(n,inf/l)`, the symmetry of the speed-`l` circular choreography.
    pub fn circular(n: usize, l: u64) -> Result<GroupSpec, GroupError> {
        Self::check_n(n)?;
        if l == 0 || l.gcd(&(n as u64)) != 1 {
            return Err(GroupError::InvalidSpec(alloc::format!(
                "circular choreography needs l >= 1 coprime to n, got l = {l}, n = {n}"
            )));
        }
        Ok(GroupSpec { family: Family::DInf, n, k: None, l })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `k` for the regular families, `None` otherwise.
    pub fn k(&self) -> Option<u64> {
        self.k
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn is_finite(&self) -> bool {
        self.family != Family::DInf
    }

    /// Group order from the closed-form formulas, `None` for `D(n,inf/l)`.
    pub fn order(&self) -> Option<usize> {
        let n = self.n;
        match self.family {
            Family::C => Some(n * self.k? as usize),
            Family::D => Some(2 * n * self.k? as usize),
            Family::CPrime | Family::DPrime1 => Some(2 * n),
            Family::DPrime2 => Some(4 * n),
            Family::DInf => None,
        }
    }

    /// Order of the core (`ker τ`): `gcd(n, k)` for the regular families.
    pub fn core_order(&self) -> Option<usize> {
        match self.family {
            Family::C | Family::D => Some((self.n as u64).gcd(&self.k?) as usize),
            Family::DInf => None,
            _ => Some(1),
        }
    }

    /// All canonical finite specs with the given `n` and `k <= kmax`.
    pub fn catalog(n: usize, kmax: u64) -> alloc::vec::Vec<GroupSpec> {
        let mut out = alloc::vec::Vec::new();
        for family in [Family::C, Family::D] {
            for k in 1..=kmax {
                for l in 1..=k.max(1) {
                    if let Ok(s) = GroupSpec::regular(family, n, k, l) {
                        if s.l == l {
                            out.push(s);
                        }
                    }
                }
            }
        }
        if n >= 3 && n % 2 == 1 {
            out.push(GroupSpec { family: Family::CPrime, n, k: None, l: 1 });
            out.push(GroupSpec { family: Family::DPrime1, n, k: None, l: 1 });
            out.push(GroupSpec { family: Family::DPrime2, n, k: None, l: 1 });
        }
        out
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n;
        match (self.family, self.k) {
            (Family::C, Some(k)) | (Family::D, Some(k)) => {
                let c = if self.family == Family::C { 'C' } else { 'D' };
                if self.l == 1 {
                    write!(f, "{c}({n},{k})")
                } else {
                    write!(f, "{c}({n},{k}/{})", self.l)
                }
            }
            (Family::CPrime, _) => write!(f, "C'({n},2)"),
            (Family::DPrime1, _) => write!(f, "D'({n},1)"),
            (Family::DPrime2, _) => write!(f, "D'({n},2)"),
            (Family::DInf, _) => write!(f, "D({n},inf/{})", self.l),
            _ => unreachable!("regular family without k"),
        }
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, msg: &str) -> GroupError {
        GroupError::Parse { pos: self.pos, msg: String::from(msg) }
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.src[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<(), GroupError> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.err(&alloc::format!("expected '{s}'")))
        }
    }

    fn int(&mut self) -> Result<u64, GroupError> {
        let digits = self.src[self.pos..].bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.err("expected an integer"));
        }
        let v = self.src[self.pos..self.pos + digits]
            .parse::<u64>()
            .map_err(|_| self.err("integer out of range"))?;
        self.pos += digits;
        Ok(v)
    }

    fn end(&self) -> Result<(), GroupError> {
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(self.err("trailing characters"))
        }
    }
}

impl FromStr for GroupSpec {
    type Err = GroupError;

    /// Parses `C(n,k)`, `C(n,k/l)`, `D(n,k)`, `D(n,k/l)`, `C'(n,2)`,
    /// `D'(n,1)`, `D'(n,2)` and `D(n,inf/l)`.
    fn from_str(s: &str) -> Result<GroupSpec, GroupError> {
        let mut cur = Cursor { src: s, pos: 0 };
        let family = if cur.eat("C'") {
            Family::CPrime
        } else if cur.eat("D'") {
            Family::DPrime1
        } else if cur.eat("C") {
            Family::C
        } else if cur.eat("D") {
            Family::D
        } else {
            return Err(cur.err("expected one of C, D, C', D'"));
        };
        cur.expect("(")?;
        let n = cur.int()? as usize;
        cur.expect(",")?;
        let spec = match family {
            Family::CPrime => {
                cur.expect("2")?;
                cur.expect(")")?;
                GroupSpec::c_prime(n)
            }
            Family::DPrime1 => {
                let which = cur.int()?;
                cur.expect(")")?;
                match which {
                    1 => GroupSpec::d_prime1(n),
                    2 => GroupSpec::d_prime2(n),
                    _ => return Err(cur.err("D' takes 1 or 2")),
                }
            }
            _ => {
                if family == Family::D && cur.eat("inf") {
                    let l = if cur.eat("/") { cur.int()? } else { 1 };
                    cur.expect(")")?;
                    cur.end()?;
                    return GroupSpec::circular(n, l);
                }
                let k = cur.int()?;
                let l = if cur.eat("/") { cur.int()? } else { 1 };
                cur.expect(")")?;
                if family == Family::C {
                    GroupSpec::cyclic(n, k, l)
                } else {
                    GroupSpec::dihedral(n, k, l)
                }
            }
        };
        cur.end()?;
        spec
    }
}
