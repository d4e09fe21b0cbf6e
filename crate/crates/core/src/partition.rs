//! Integer partitions and the lattice operations on Young diagrams.
//!
//! A [`Partition`] never stores trailing zeros, and indexed reads past its
//! length return `0`, so formulas can treat every partition as an infinite
//! zero-padded sequence.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Longest run a single `a^n` token may expand to when parsing.
const MAX_EXPONENT: usize = 1 << 16;

/// A weakly decreasing sequence of positive integers.
///
/// The derived order is lexicographic on the zero-padded parts, which is the
/// order used for every listing this crate produces (iterated in reverse for
/// descending output).
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        parts
            .iter()
            .try_fold(0usize, |acc, &p| acc.checked_add(p))
            .ok_or(Error::Overflow)?;
        Ok(Partition { parts })
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub(crate) fn from_trusted(mut parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangle `(width^height)` as a partition.
    pub fn rectangle(rect: Rectangle) -> Self {
        Partition {
            parts: vec![rect.width; rect.height],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of positive parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Zero-based part read; `0` past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Largest part, `0` for the empty partition.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let mut parts = vec![0; self.first()];
        for &p in &self.parts {
            for c in parts.iter_mut().take(p) {
                *c += 1;
            }
        }
        Partition { parts }
    }

    /// True iff the diagram of `inner` lies inside the diagram of `self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Pointwise maximum.
    pub fn union(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition::from_trusted((0..n).map(|i| self.part(i).max(other.part(i))).collect())
    }

    /// Pointwise minimum.
    pub fn intersect(&self, other: &Partition) -> Partition {
        let n = self.len().min(other.len());
        Partition::from_trusted((0..n).map(|i| self.part(i).min(other.part(i))).collect())
    }

    /// Side of the largest square `(d^d)` inside the diagram.
    pub fn durfee(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    /// The complement of `self` inside `rect`, rotated by 180 degrees back
    /// into a partition: `result[i] = width - self[height - 1 - i]`.
    pub fn complement_in(&self, rect: Rectangle) -> Result<Partition> {
        if !rect.contains(self) {
            return Err(Error::ShapeDoesNotFit {
                partition: self.clone(),
                rect,
            });
        }
        let parts = (0..rect.height)
            .map(|i| rect.width - self.part(rect.height - 1 - i))
            .collect();
        Ok(Partition::from_trusted(parts))
    }

    /// The maximal rectangles `(p_i)^i` whose union is the diagram, top row first.
    pub fn rectangle_decomposition(&self) -> Vec<Rectangle> {
        self.parts
            .iter()
            .enumerate()
            .filter(|&(i, &p)| self.part(i + 1) < p)
            .map(|(i, &p)| Rectangle {
                width: p,
                height: i + 1,
            })
            .collect()
    }
}

impl From<Rectangle> for Partition {
    fn from(rect: Rectangle) -> Self {
        Partition::rectangle(rect)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Parses `"9^3,7^2,4"`; `"-"` and the blank string are the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in trimmed.split(',') {
            let token = token.trim();
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (token, "1"),
            };
            let value: usize = base
                .parse()
                .map_err(|_| Error::parse(s, format!("bad part {token:?}")))?;
            let count: usize = exp
                .parse()
                .map_err(|_| Error::parse(s, format!("bad exponent in {token:?}")))?;
            if count > MAX_EXPONENT {
                return Err(Error::parse(s, format!("exponent in {token:?} is too large")));
            }
            parts.extend(std::iter::repeat(value).take(count));
        }
        Partition::new(parts)
    }
}

/// The rectangle `(width^height)`: `width` columns and `height` rows.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Rectangle {
    width: usize,
    height: usize,
}

impl Rectangle {
    pub fn new(width: usize, height: usize) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::DegenerateRectangle { width, height });
        }
        Ok(Rectangle { width, height })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn area(&self) -> usize {
        self.width * self.height
    }

    /// True iff `p` fits inside this rectangle.
    pub fn contains(&self, p: &Partition) -> bool {
        p.len() <= self.height && p.first() <= self.width
    }
}

impl fmt::Display for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.width, self.height)
    }
}

impl fmt::Debug for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses `"KxL"`: `K` columns, `L` rows.
impl FromStr for Rectangle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (w, h) = s
            .trim()
            .split_once(['x', 'X'])
            .ok_or_else(|| Error::parse(s, "expected KxL"))?;
        let width = w.trim().parse().map_err(|_| Error::parse(s, "bad width"))?;
        let height = h.trim().parse().map_err(|_| Error::parse(s, "bad height"))?;
        Rectangle::new(width, height)
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_trusted(prefix.clone()));
            return;
        }
        for p in (1..=max.min(remaining)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
