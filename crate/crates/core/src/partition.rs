//! Integer partitions, skew shapes and rim hooks.
//!
//! Partitions are stored canonically: weakly decreasing, strictly positive
//! parts, no trailing zeros. The [`Ord`] implementation is the canonical
//! listing order used everywhere in the crate: graded by size, and within a
//! size reverse-lexicographic, so `(7,4)` precedes `(6,5)` precedes
//! `(4,4,3)`. Within one size this is a linear extension of dominance with
//! the dominant partitions first.
//!
//! Rim hooks are added and removed through the bead (first-column hook
//! length) encoding: with `L` beads at positions `λ_i + L - i`, adding a
//! rim hook of size `n` slides one bead from `b` to the empty slot `b + n`,
//! and the height of the hook is the number of beads jumped over.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// The empty partition, the unique partition of zero.
    pub const fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition, dropping zero parts. The remaining parts must be
    /// weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        parts.retain(|&p| p != 0);
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::MalformedPartition(alloc::format!(
                "parts increase from {} to {}",
                w[0],
                w[1]
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary non-negative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p != 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The partition `(value^count)`.
    pub fn rectangle(value: usize, count: usize) -> Self {
        if value == 0 {
            return Partition::empty();
        }
        Partition {
            parts: vec![value; count],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, 0-based, reading zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The largest part, or zero for the empty partition.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(self)
    }

    /// Strictly decreasing bead positions `λ_i + count - i` (1-based `i`).
    /// `count` must be at least the length.
    pub(crate) fn beads(&self, count: usize) -> Vec<usize> {
        debug_assert!(count >= self.len());
        (0..count).map(|i| self.part(i) + count - 1 - i).collect()
    }

    /// Inverse of [`Partition::beads`] for any set of distinct positions.
    pub(crate) fn from_beads(beads: &[usize]) -> Partition {
        let mut sorted = beads.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let count = sorted.len();
        let parts = sorted
            .iter()
            .enumerate()
            .map(|(i, &b)| b - (count - 1 - i))
            .filter(|&p| p != 0)
            .collect();
        Partition { parts }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Parses `"3,3,1"`, `"[3, 3, 1]"`, `""` or `"[]"`.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let mut body = text.trim();
    if let Some(rest) = body.strip_prefix('[') {
        body = rest
            .strip_suffix(']')
            .ok_or_else(|| Error::MalformedPartition("unbalanced bracket".to_string()))?
            .trim();
    } else if body.ends_with(']') {
        return Err(Error::MalformedPartition("unbalanced bracket".to_string()));
    }
    if body.is_empty() {
        return Ok(Partition::empty());
    }
    let parts = body
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<usize>()
                .map_err(|_| Error::MalformedPartition(alloc::format!("bad part {tok:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

/// `λ^c_i = #{j : λ_j ≥ i}`.
pub fn conjugate(lambda: &Partition) -> Partition {
    let parts = (1..=lambda.first())
        .map(|i| lambda.parts.iter().take_while(|&&p| p >= i).count())
        .collect();
    Partition { parts }
}

/// Dominance order: every prefix sum of `lambda` is at least that of `mu`.
pub fn dominates(lambda: &Partition, mu: &Partition) -> Result<bool> {
    let (left, right) = (lambda.size(), mu.size());
    if left != right {
        return Err(Error::SizeMismatch { left, right });
    }
    let len = lambda.len().max(mu.len());
    let mut acc_l = 0usize;
    let mut acc_m = 0usize;
    for i in 0..len {
        acc_l += lambda.part(i);
        acc_m += mu.part(i);
        if acc_l < acc_m {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `inner ⊆ outer`, componentwise with implicit zeros.
pub fn contains(inner: &Partition, outer: &Partition) -> bool {
    inner.len() <= outer.len() && (0..inner.len()).all(|i| inner.part(i) <= outer.part(i))
}

/// The skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !contains(&inner, &outer) {
            return Err(Error::NotContained { inner, outer });
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

    /// Half-open column ranges `[start, end)` of every row, 0-based,
    /// including empty rows.
    fn row_ranges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.outer.len()).map(|i| (self.inner.part(i), self.outer.part(i)))
    }

    /// Edge-connected with no 2×2 block. The empty shape is not a rim hook.
    pub fn is_rim_hook(&self) -> bool {
        let rows: Vec<(usize, usize, usize)> = self
            .row_ranges()
            .enumerate()
            .filter(|(_, (s, e))| s < e)
            .map(|(i, (s, e))| (i, s, e))
            .collect();
        if rows.is_empty() {
            return false;
        }
        rows.windows(2).all(|w| {
            let (r0, s0, e0) = w[0];
            let (r1, s1, e1) = w[1];
            // adjacent rows sharing exactly one column: connected, no 2×2
            r1 == r0 + 1 && e0.min(e1) > s0.max(s1) && e0.min(e1) - s0.max(s1) == 1
        })
    }

    /// Number of occupied rows minus one.
    pub fn height(&self) -> Result<usize> {
        if !self.is_rim_hook() {
            return Err(Error::NotARimHook);
        }
        Ok(self.row_ranges().filter(|(s, e)| s < e).count() - 1)
    }

    /// Number of occupied columns.
    pub fn columns(&self) -> Result<usize> {
        let (first, last) = self.column_span()?;
        Ok(last - first + 1)
    }

    /// The leftmost and rightmost occupied columns, 1-based.
    pub fn column_span(&self) -> Result<(usize, usize)> {
        if !self.is_rim_hook() {
            return Err(Error::NotARimHook);
        }
        let mut first = usize::MAX;
        let mut last = 0;
        for (s, e) in self.row_ranges().filter(|(s, e)| s < e) {
            first = first.min(s + 1);
            last = last.max(e);
        }
        Ok((first, last))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

pub fn is_rim_hook(shape: &SkewShape) -> bool {
    shape.is_rim_hook()
}

pub fn rim_hook_height(shape: &SkewShape) -> Result<usize> {
    shape.height()
}

pub fn rim_hook_columns(shape: &SkewShape) -> Result<usize> {
    shape.columns()
}

/// All `λ⁺ ⊇ λ` with `λ⁺/λ` a rim hook of size `n`, each paired with the
/// hook height, in canonical order.
pub fn add_rim_hooks_with_height(lambda: &Partition, n: usize) -> Vec<(Partition, usize)> {
    if n == 0 {
        return Vec::new();
    }
    let count = lambda.len() + n;
    let beads = lambda.beads(count);
    let occupied = occupancy(&beads, n);
    let mut out: Vec<(Partition, usize)> = beads
        .iter()
        .enumerate()
        .filter(|&(_, &b)| !occupied[b + n])
        .map(|(idx, &b)| {
            let height = occupied[b + 1..b + n].iter().filter(|&&o| o).count();
            let mut moved = beads.clone();
            moved[idx] = b + n;
            (Partition::from_beads(&moved), height)
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// All `μ ⊆ λ` with `λ/μ` a rim hook of size `n`, each paired with the
/// hook height, in canonical order.
pub fn remove_rim_hooks_with_height(lambda: &Partition, n: usize) -> Vec<(Partition, usize)> {
    if n == 0 {
        return Vec::new();
    }
    let count = lambda.len();
    let beads = lambda.beads(count);
    let occupied = occupancy(&beads, 0);
    let mut out: Vec<(Partition, usize)> = beads
        .iter()
        .enumerate()
        .filter(|&(_, &b)| b >= n && !occupied[b - n])
        .map(|(idx, &b)| {
            let height = occupied[b - n + 1..b].iter().filter(|&&o| o).count();
            let mut moved = beads.clone();
            moved[idx] = b - n;
            (Partition::from_beads(&moved), height)
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

pub fn add_rim_hooks(lambda: &Partition, n: usize) -> Vec<Partition> {
    add_rim_hooks_with_height(lambda, n)
        .into_iter()
        .map(|(p, _)| p)
        .collect()
}

pub fn remove_rim_hooks(lambda: &Partition, n: usize) -> Vec<Partition> {
    remove_rim_hooks_with_height(lambda, n)
        .into_iter()
        .map(|(p, _)| p)
        .collect()
}

fn occupancy(beads: &[usize], slack: usize) -> Vec<bool> {
    let top = beads.iter().copied().max().unwrap_or(0);
    let mut occupied = vec![false; top + slack + 1];
    for &b in beads {
        occupied[b] = true;
    }
    occupied
}

/// All partitions of `m`, optionally with every part at most `max_part`,
/// in canonical order.
pub fn partitions_of(m: usize, max_part: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(m, max_part.unwrap_or(m).min(m), &mut current, &mut out);
    out
}

fn fill(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// Renders a partition as the comma-separated text form, without brackets.
pub fn to_text(lambda: &Partition) -> String {
    let mut s = String::new();
    for (i, p) in lambda.parts.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&p.to_string());
    }
    s
}
