use alloc::vec::Vec;

use super::TopologyError;
use crate::fourier::Trajectory;
use crate::perm::Perm;
use crate::Complex;

/// Bisection depth used to separate crossings inside one sample interval.
const MAX_BISECTIONS: u32 = 40;

/// Rotation angles tried by [`extract_braid_generic`], in radians.
const GENERIC_ANGLES: [f64; 6] = [0.0, 0.0123, 0.0311, 0.0571, 0.0917, 0.1301];

/// One crossing: generator `𝔟_index` (1-based) with sign `±1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Letter {
    pub index: usize,
    pub sign: i8,
    /// Crossing time in `[0, 1)`.
    pub time: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BraidWord {
    pub n: usize,
    pub letters: Vec<Letter>,
}

impl BraidWord {
    /// `δ = 𝔟₁𝔟₂…𝔟_{n−1}`.
    pub fn delta(n: usize) -> BraidWord {
        let letters = (1..n).map(|i| Letter { index: i, sign: 1, time: 0.0 }).collect();
        BraidWord { n, letters }
    }

    /// The involution flipping the sign of every letter.
    pub fn bar(&self) -> BraidWord {
        let letters = self.letters.iter().map(|l| Letter { sign: -l.sign, ..*l }).collect();
        BraidWord { n: self.n, letters }
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.n, other.n, "braids on different string counts");
        let letters = self.letters.iter().chain(&other.letters).copied().collect();
        BraidWord { n: self.n, letters }
    }

    /// Letters with crossing time below `t_end`.
    pub fn truncated(&self, t_end: f64) -> BraidWord {
        let letters = self.letters.iter().filter(|l| l.time < t_end).copied().collect();
        BraidWord { n: self.n, letters }
    }

    /// Compact text form such as `b1 b2^-1 b1`.
    pub fn to_text(&self) -> alloc::string::String {
        use core::fmt::Write;
        let mut out = alloc::string::String::new();
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                out.push(' ');
            }
            let _ = write!(out, "b{}", l.index);
            if l.sign < 0 {
                out.push_str("^-1");
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidStats {
    /// Exponent sum `χ`.
    pub chi: i64,
    /// `π(𝔟)`, with `π(𝔟𝔟′) = π(𝔟)∘π(𝔟′)`.
    pub perm: Perm,
}

pub fn braid_stats(word: &BraidWord) -> BraidStats {
    let chi = word.letters.iter().map(|l| l.sign as i64).sum();
    let perm = word.letters.iter().fold(Perm::identity(word.n), |acc, l| {
        let mut images: Vec<usize> = (0..word.n).collect();
        images.swap(l.index - 1, l.index);
        acc.compose(&Perm::from_images(images).expect("transposition"))
    });
    BraidStats { chi, perm }
}

/// Particle labels sorted by real part (ties by label).
fn order(points: &[Complex]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&a, &b| points[a].re.total_cmp(&points[b].re).then(a.cmp(&b)));
    idx
}

fn lerp(a: &[Complex], b: &[Complex], s: f64) -> Vec<Complex> {
    a.iter().zip(b).map(|(x, y)| x + (y - x) * s).collect()
}

struct Interval<'a> {
    start: &'a [Complex],
    end: &'a [Complex],
    t0: f64,
    dt: f64,
}

impl Interval<'_> {
    fn at(&self, s: f64) -> Vec<Complex> {
        lerp(self.start, self.end, s)
    }

    /// Emits the crossings on `[s0, s1]`, given the order at `s0`.
    fn crossings(&self, s0: f64, s1: f64, before: &[usize], depth: u32, out: &mut Vec<Letter>) -> Result<Vec<usize>, TopologyError> {
        let after = order(&self.at(s1));
        if after == before {
            return Ok(after);
        }
        let swaps = adjacent_swaps(before, &after);
        if let Some(swaps) = swaps.filter(|s| s.len() == 1 || depth >= MAX_BISECTIONS) {
            // disjoint adjacent swaps commute, so simultaneous ones are fine
            for pos in swaps {
                out.push(self.letter(before[pos], before[pos + 1], pos)?);
            }
            return Ok(after);
        }
        if depth >= MAX_BISECTIONS {
            return Err(TopologyError::Degenerate { time: self.t0 + s0 * self.dt });
        }
        let mid = 0.5 * (s0 + s1);
        let middle = self.crossings(s0, mid, before, depth + 1, out)?;
        self.crossings(mid, s1, &middle, depth + 1, out)
    }

    /// Letter for particle `b` overtaking particle `a` (left of it) at
    /// sorted position `pos`.
    fn letter(&self, a: usize, b: usize, pos: usize) -> Result<Letter, TopologyError> {
        let da = self.end[a] - self.start[a];
        let db = self.end[b] - self.start[b];
        let f0 = self.start[b].re - self.start[a].re;
        let f1 = f0 + db.re - da.re;
        if f0 == f1 {
            return Err(TopologyError::Degenerate { time: self.t0 });
        }
        let s = (f0 / (f0 - f1)).clamp(0.0, 1.0);
        let gap = (self.start[b] + db * s).im - (self.start[a] + da * s).im;
        let time = self.t0 + s * self.dt;
        if gap.abs() < 1e-12 {
            return Err(TopologyError::Degenerate { time });
        }
        Ok(Letter { index: pos + 1, sign: if gap > 0.0 { 1 } else { -1 }, time: time - libm::floor(time) })
    }
}

/// Positions at which `before` and `after` differ by disjoint adjacent
/// transpositions, or `None` if they differ in some other way.
fn adjacent_swaps(before: &[usize], after: &[usize]) -> Option<Vec<usize>> {
    let mut swaps = Vec::new();
    let mut i = 0;
    while i < before.len() {
        if before[i] == after[i] {
            i += 1;
        } else if i + 1 < before.len() && before[i] == after[i + 1] && before[i + 1] == after[i] {
            swaps.push(i);
            i += 2;
        } else {
            return None;
        }
    }
    Some(swaps)
}

/// Braid word of the full period, read off the piecewise-linear
/// interpolation of the samples. A letter `𝔟_i^{±1}` records the strands in
/// sorted positions `i, i+1` (by real part) exchanging; the sign is `+1`
/// when the exchange is a counterclockwise half-turn of the pair.
pub fn extract_braid(traj: &Trajectory) -> Result<BraidWord, TopologyError> {
    let (n, samples) = (traj.n, traj.samples);
    let snapshot = |m: usize| -> Vec<Complex> { (0..n).map(|j| traj.positions[j][m % samples]).collect() };
    let mut letters = Vec::new();
    let mut current = order(&snapshot(0));
    for m in 0..samples {
        let (start, end) = (snapshot(m), snapshot(m + 1));
        let interval = Interval { start: &start, end: &end, t0: traj.time(m), dt: 1.0 / samples as f64 };
        current = interval.crossings(0.0, 1.0, &current, 0, &mut letters)?;
    }
    Ok(BraidWord { n, letters })
}

/// [`extract_braid`] after the first small global rotation (from a fixed
/// list) that avoids degenerate crossings and keeps every crossing away
/// from the times `k/n`. Returns the word and the rotation used.
pub fn extract_braid_generic(traj: &Trajectory) -> Result<(BraidWord, f64), TopologyError> {
    let n = traj.n as f64;
    let mut last = None;
    for angle in GENERIC_ANGLES {
        let rotated = if angle == 0.0 { traj.clone() } else { traj.rotated(angle) };
        match extract_braid(&rotated) {
            Ok(word) => {
                let near_boundary = word.letters.iter().find(|l| {
                    let x = l.time * n;
                    (x - libm::round(x)).abs() < 1e-6
                });
                match near_boundary {
                    None => return Ok((word, angle)),
                    Some(l) => last = Some(TopologyError::Degenerate { time: l.time }),
                }
            }
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("at least one angle tried"))
}
