//! Integer partitions and the combinatorics needed to index Weyl and Schur
//! functors: dominance order, 2-regularity, alternation, the single-box
//! moves `λ_i^±`, and enumeration.

use std::fmt;
use std::str::FromStr;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("sequence {0:?} is not weakly decreasing")]
    NotDecreasing(Vec<usize>),
    #[error("dominance compares partitions of equal degree, got {0} and {1}")]
    DegreeMismatch(usize, usize),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("cannot parse partition literal {text:?} at byte {pos}: {reason}")]
    Parse { text: String, pos: usize, reason: &'static str },
}

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are dropped on construction, so a partition is identified
/// with all of its zero-padded extensions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// Outcome of comparing two partitions of the same degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    LessOrEqual,
    Greater,
    Incomparable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub regular: bool,
    pub alternating: bool,
    /// Alternation is only a meaningful notion for regular input.
    pub alternation_meaningful: bool,
}

/// A raw integer sequence obtained by moving one box; it need not be a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Neighbor {
    pub seq: Vec<usize>,
    pub valid: bool,
}

impl Neighbor {
    fn from_seq(seq: Vec<usize>) -> Self {
        let valid = is_weakly_decreasing(&seq);
        Neighbor { seq, valid }
    }

    pub fn partition(&self) -> Option<Partition> {
        self.valid.then(|| Partition::new(self.seq.clone()).expect("validated"))
    }
}

pub fn is_weakly_decreasing(seq: &[usize]) -> bool {
    seq.windows(2).all(|w| w[0] >= w[1])
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        if !is_weakly_decreasing(&parts) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` with 1-based index, zero past the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_regular(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn is_alternating(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1] && (w[0] - w[1]) % 2 == 1)
    }

    pub fn classify(&self) -> Classification {
        let regular = self.is_regular();
        let odd_steps = self.parts.windows(2).all(|w| w[0].abs_diff(w[1]) % 2 == 1);
        Classification { regular, alternating: regular && odd_steps, alternation_meaningful: regular }
    }

    /// Prefix-sum dominance test.
    pub fn dominance(&self, other: &Partition) -> Result<Dominance, PartitionError> {
        let (da, db) = (self.degree(), other.degree());
        if da != db {
            return Err(PartitionError::DegreeMismatch(da, db));
        }
        let n = self.length().max(other.length());
        let (mut sa, mut sb) = (0, 0);
        let (mut le, mut ge) = (true, true);
        for i in 1..=n {
            sa += self.part(i);
            sb += other.part(i);
            le &= sa <= sb;
            ge &= sa >= sb;
        }
        Ok(if le {
            Dominance::LessOrEqual
        } else if ge {
            Dominance::Greater
        } else {
            Dominance::Incomparable
        })
    }

    /// `self ≤ other` via tail sums: `Σ_{i≥n} λ_i ≥ Σ_{i≥n} μ_i` for all `n`.
    pub fn dominated_by_tail(&self, other: &Partition) -> Result<bool, PartitionError> {
        let (da, db) = (self.degree(), other.degree());
        if da != db {
            return Err(PartitionError::DegreeMismatch(da, db));
        }
        let n = self.length().max(other.length());
        let (mut ta, mut tb) = (0, 0);
        for i in (1..=n).rev() {
            ta += self.part(i);
            tb += other.part(i);
            if ta < tb {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn le(&self, other: &Partition) -> bool {
        matches!(self.dominance(other), Ok(Dominance::LessOrEqual))
    }

    fn padded(&self, len: usize) -> Vec<usize> {
        let mut v = self.parts.clone();
        v.resize(len.max(v.len()), 0);
        v
    }

    /// `λ_i^-`: lower the `i`-th entry by one (1-based, `i ≤ length`).
    pub fn minus(&self, i: usize) -> Result<Neighbor, PartitionError> {
        if i == 0 || i > self.length() {
            return Err(PartitionError::IndexOutOfRange { index: i, max: self.length() });
        }
        let mut v = self.parts.clone();
        v[i - 1] -= 1;
        Ok(Neighbor::from_seq(v))
    }

    /// `λ_i^+`: raise the `i`-th entry by one (1-based, zero-padded as needed).
    pub fn plus(&self, i: usize) -> Result<Neighbor, PartitionError> {
        if i == 0 {
            return Err(PartitionError::IndexOutOfRange { index: i, max: usize::MAX });
        }
        let mut v = self.padded(i);
        v[i - 1] += 1;
        Ok(Neighbor::from_seq(v))
    }

    /// `(λ_i^-, λ_i^+)`.
    pub fn neighbors(&self, i: usize) -> Result<(Neighbor, Neighbor), PartitionError> {
        Ok((self.minus(i)?, self.plus(i)?))
    }

    /// `(λ_a^+)_b^-` computed on raw sequences.
    pub fn plus_minus(&self, a: usize, b: usize) -> Result<Neighbor, PartitionError> {
        let up = self.plus(a)?;
        if b == 0 || b > up.seq.len() || up.seq[b - 1] == 0 {
            return Err(PartitionError::IndexOutOfRange { index: b, max: up.seq.len() });
        }
        let mut v = up.seq;
        v[b - 1] -= 1;
        Ok(Neighbor::from_seq(v))
    }

    /// `λ^{+,-}_{1,r}` with `r` the length.
    pub fn plus_minus_first_last(&self) -> Result<Neighbor, PartitionError> {
        self.plus_minus(1, self.length())
    }
}

/// All partitions of `n` in lexicographically decreasing order.
pub fn enumerate(n: usize, regular_only: bool) -> Vec<Partition> {
    fn rec(n: usize, max: usize, regular: bool, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for first in (1..=n.min(max)).rev() {
            prefix.push(first);
            let next_max = if regular { first - 1 } else { first };
            rec(n - first, next_max, regular, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, regular_only, &mut Vec::new(), &mut out);
    out
}

/// All partitions of every degree `0..=n`, by degree then enumeration order.
pub fn enumerate_up_to(n: usize, regular_only: bool) -> Vec<Partition> {
    (0..=n).flat_map(|d| enumerate(d, regular_only)).collect()
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Parses a comma-separated list of nonnegative integers, e.g. `"3,2,1"`.
/// Returns the raw sequence; zeros and non-decreasing runs are allowed here.
pub fn parse_sequence(text: &str) -> Result<Vec<usize>, PartitionError> {
    let t = text.trim();
    if t.is_empty() || t == "()" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut pos = text.len() - text.trim_start().len();
    for piece in t.split(',') {
        let trimmed = piece.trim();
        let lead = piece.len() - piece.trim_start().len();
        if trimmed.is_empty() {
            return Err(PartitionError::Parse { text: text.to_string(), pos: pos + lead, reason: "empty entry" });
        }
        let value = trimmed
            .parse::<usize>()
            .map_err(|_| PartitionError::Parse { text: text.to_string(), pos: pos + lead, reason: "expected a nonnegative integer" })?;
        out.push(value);
        pos += piece.len() + 1;
    }
    Ok(out)
}

impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Partition::new(parse_sequence(s)?)
    }
}
