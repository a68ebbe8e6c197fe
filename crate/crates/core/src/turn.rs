//! Exact rational angles and time shifts, taken modulo one full turn.

use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_integer::Integer;

/// A rational number reduced into `[0, 1)`.
///
/// Used both for rotation angles (as a fraction of `2π`) and for time
/// shifts (as a fraction of the period).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Turn {
    num: i64,
    den: i64,
}

impl Turn {
    pub const ZERO: Turn = Turn { num: 0, den: 1 };
    pub const HALF: Turn = Turn { num: 1, den: 2 };

    /// The class of `num / den` modulo 1.
    ///
    /// # Panics
    ///
    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Turn {
        assert!(den != 0, "zero denominator");
        let (mut num, mut den) = if den < 0 { (-num, -den) } else { (num, den) };
        num = num.rem_euclid(den);
        let g = num.gcd(&den);
        if g > 1 {
            num /= g;
            den /= g;
        }
        Turn { num, den }
    }

    pub fn numer(self) -> i64 {
        self.num
    }

    pub fn denom(self) -> i64 {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `self * k` modulo 1.
    pub fn times(self, k: i64) -> Turn {
        let num = ((self.num as i128 * k as i128).rem_euclid(self.den as i128)) as i64;
        Turn::new(num, self.den)
    }

    /// Signed representative in `(-1/2, 1/2]` as `(num, den)`.
    pub fn signed(self) -> (i64, i64) {
        if 2 * self.num > self.den {
            (self.num - self.den, self.den)
        } else {
            (self.num, self.den)
        }
    }

    /// Half of this turn, choosing the representative in `[0, 1/2)`.
    pub fn halve(self) -> Turn {
        Turn::new(self.num, 2 * self.den)
    }
}

impl Add for Turn {
    type Output = Turn;

    fn add(self, rhs: Turn) -> Turn {
        let l = self.den.lcm(&rhs.den);
        let num = self.num as i128 * (l / self.den) as i128 + rhs.num as i128 * (l / rhs.den) as i128;
        Turn::new((num.rem_euclid(l as i128)) as i64, l)
    }
}

impl Neg for Turn {
    type Output = Turn;

    fn neg(self) -> Turn {
        Turn::new(-self.num, self.den)
    }
}

impl Sub for Turn {
    type Output = Turn;

    fn sub(self, rhs: Turn) -> Turn {
        self + (-rhs)
    }
}

impl fmt::Debug for Turn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Turn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num == 0 {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}
