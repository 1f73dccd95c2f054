//! Partitions, skew shapes and horizontal strips.
//!
//! Rows and columns of a [`Box`] are 1-based, matching the usual English
//! drawing of a Young diagram (row 1 on top, column 1 on the left).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty partition is
/// a regular value.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// A cell of a Young diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", from = "[usize; 2]")]
pub struct Box {
    pub row: usize,
    pub col: usize,
}

impl Box {
    pub const fn new(row: usize, col: usize) -> Self {
        Box { row, col }
    }
}

impl From<Box> for [usize; 2] {
    fn from(b: Box) -> Self {
        [b.row, b.col]
    }
}

impl From<[usize; 2]> for Box {
    fn from([row, col]: [usize; 2]) -> Self {
        Box { row, col }
    }
}

impl fmt::Display for Box {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Shape of a list of row lengths that is already known to be a partition.
    pub(crate) fn from_row_lengths<I: IntoIterator<Item = usize>>(rows: I) -> Self {
        let parts: Vec<usize> = rows.into_iter().filter(|&r| r > 0).collect();
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The `i`-th part (1-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// `inner ⊆ self`, comparing parts with missing parts read as zero.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.length() <= self.length()
            && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn contains_box(&self, b: Box) -> bool {
        b.row >= 1 && b.col >= 1 && b.col <= self.part(b.row)
    }

    /// A box of the diagram with nothing to its right or below it.
    pub fn is_outer_corner(&self, b: Box) -> bool {
        self.contains_box(b) && self.part(b.row) == b.col && self.part(b.row + 1) < b.col
    }

    /// Cells that can be added while staying a partition.
    pub fn addable_boxes(&self) -> Vec<Box> {
        (1..=self.length() + 1)
            .filter(|&r| self.part(r) < self.part(r - 1))
            .map(|r| Box::new(r, self.part(r) + 1))
            .collect()
    }

    pub fn outer_corners(&self) -> Vec<Box> {
        (1..=self.length())
            .filter(|&r| self.part(r) > self.part(r + 1))
            .map(|r| Box::new(r, self.part(r)))
            .collect()
    }

    pub fn with_box_added(&self, b: Box) -> Result<Partition> {
        let mut parts = self.parts.clone();
        if b.row == parts.len() + 1 {
            parts.push(0);
        }
        if b.row == 0 || b.row > parts.len() || parts[b.row - 1] + 1 != b.col {
            return Err(Error::NotAPartition(self.parts.clone()));
        }
        parts[b.row - 1] += 1;
        Partition::new(parts)
    }

    pub fn with_box_removed(&self, b: Box) -> Result<Partition> {
        if !self.is_outer_corner(b) {
            return Err(Error::NotOuterCorner(b));
        }
        let mut parts = self.parts.clone();
        parts[b.row - 1] -= 1;
        Partition::new(parts)
    }

    /// Every partition contained in `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.length());
        self.subpartitions_rec(0, usize::MAX, &mut current, &mut out);
        out.sort();
        out
    }

    fn subpartitions_rec(&self, row: usize, cap: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row == self.length() {
            out.push(Partition::from_row_lengths(current.iter().copied()));
            return;
        }
        let hi = self.parts[row].min(cap);
        for v in 0..=hi {
            current.push(v);
            self.subpartitions_rec(row + 1, v, current, out);
            current.pop();
        }
    }

    /// All `μ ⊆ self` such that `self/μ` is a horizontal strip.
    pub fn strip_subshapes(&self) -> Vec<Partition> {
        // self/μ is a horizontal strip iff self_{i+1} <= μ_i <= self_i.
        let mut out = Vec::new();
        let mut current = vec![0; self.length()];
        fn rec(lambda: &Partition, row: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if row == lambda.length() {
                out.push(Partition::from_row_lengths(current.iter().copied()));
                return;
            }
            for v in lambda.part(row + 2)..=lambda.part(row + 1) {
                current[row] = v;
                rec(lambda, row + 1, current, out);
            }
        }
        rec(self, 0, &mut current, &mut out);
        out.sort();
        out
    }

    /// All `ν ⊇ self` such that `ν/self` is a horizontal strip of `size` boxes.
    pub fn strip_extensions(&self, size: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let rows = self.length() + 1;
        let mut current = vec![0; rows];
        fn rec(
            lambda: &Partition,
            row: usize,
            left: usize,
            current: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if row == current.len() {
                if left == 0 {
                    out.push(Partition::from_row_lengths(current.iter().copied()));
                }
                return;
            }
            let base = lambda.part(row + 1);
            // Row 1 may grow freely; lower rows stop under the row above in λ.
            let cap = if row == 0 { base + left } else { lambda.part(row).min(base + left) };
            for v in base..=cap {
                current[row] = v;
                rec(lambda, row + 1, left - (v - base), current, out);
            }
        }
        rec(self, 0, size, &mut current, &mut out);
        out.sort();
        out
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts; `-` or the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        let mut offset = s.len() - s.trim_start().len();
        for token in trimmed.split(',') {
            let tok = token.trim();
            let value: usize = tok
                .parse()
                .map_err(|_| Error::parse(tok, offset, "expected a nonnegative integer part"))?;
            parts.push(value);
            offset += token.len() + 1;
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::parse(trimmed, 0, "parts must be weakly decreasing"));
        }
        Partition::new(parts)
    }
}

/// The skew diagram `outer/inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer, inner });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// No two boxes share a column.
    pub fn is_horizontal_strip(&self) -> bool {
        (1..=self.outer.length()).all(|i| self.outer.part(i + 1) <= self.inner.part(i))
    }

    /// Boxes in row-major order: top to bottom, left to right within a row.
    pub fn boxes(&self) -> Vec<Box> {
        (1..=self.outer.length())
            .flat_map(|r| (self.inner.part(r) + 1..=self.outer.part(r)).map(move |c| Box::new(r, c)))
            .collect()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// Convenience for literals in tests and examples.
#[macro_export]
macro_rules! partition {
    () => { $crate::shape::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::shape::Partition::new(vec![$($p),+]).expect("literal partition")
    };
}
