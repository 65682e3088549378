//! Integer partitions, dominance order and Kostka numbers.
//!
//! Throughout the crate partitions are ordered by size first and then
//! reverse-lexicographically, so `(3) < (2,1) < (1,1,1)`. Within a fixed
//! size this order is a linear extension of dominance from larger to
//! smaller, which is what the triangular basis changes rely on.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, rejecting sequences that are not weakly
    /// decreasing. Trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "parts {parts:?} contain an interior zero"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts.retain(|&p| p > 0);
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The staircase `(k, k-1, ..., 1)`.
    pub fn staircase(k: u32) -> Self {
        Partition {
            parts: (1..=k).rev().collect(),
        }
    }

    /// The single column `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The single row `(n)`.
    pub fn row(n: u32) -> Self {
        Partition::from_unsorted(vec![n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `n`. Panics if `n < self.len()`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        assert!(n >= self.len(), "cannot pad {self} to length {n}");
        let mut v = self.parts.clone();
        v.resize(n, 0);
        v
    }

    /// Whether the diagram of `other` fits inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Column lengths of the diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count() as u32)
            .collect();
        Partition { parts }
    }

    /// All partitions contained in `self`, in the crate order.
    pub fn subshapes(&self) -> Vec<Partition> {
        fn go(outer: &[u32], i: usize, bound: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if i == outer.len() {
                out.push(Partition::from_unsorted(cur.clone()));
                return;
            }
            for v in 0..=bound.min(outer[i]) {
                cur.push(v);
                go(outer, i + 1, v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.parts, 0, self.part(0), &mut Vec::new(), &mut out);
        out.sort();
        out
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

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Comma-separated parts; the empty partition is `-`.
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

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .ok()
                    .filter(|&v| v > 0)
                    .ok_or_else(|| Error::InvalidArgument(format!("bad part {tok:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
            .map_err(|_| Error::InvalidArgument(format!("{s:?} is not weakly decreasing")))
    }
}

/// All partitions of `d` with at most `max_parts` parts, largest first in
/// reverse-lexicographic order.
pub fn partitions_up_to(d: usize, max_parts: usize) -> Vec<Partition> {
    fn go(rest: u32, bound: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=bound.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d as u32, d as u32, max_parts, &mut Vec::new(), &mut out);
    out
}

/// Dominance order: partial sums of `mu` never exceed those of `lambda`.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if mu.size() != lambda.size() {
        return Err(Error::SizeMismatch {
            left: mu.size(),
            right: lambda.size(),
        });
    }
    let len = mu.len().max(lambda.len());
    let (mut a, mut b) = (0u64, 0u64);
    for i in 0..len {
        a += mu.part(i) as u64;
        b += lambda.part(i) as u64;
        if a > b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Shapes obtained from `shape` by adding a horizontal strip of `size`
/// boxes, keeping at most `max_rows` rows.
fn add_horizontal_strip(shape: &[u32], size: u32, max_rows: usize, f: &mut impl FnMut(Vec<u32>)) {
    // Row i may grow up to the old length of row i-1; row 0 is unbounded.
    fn go(
        shape: &[u32],
        rows: usize,
        i: usize,
        rest: u32,
        cur: &mut Vec<u32>,
        f: &mut impl FnMut(Vec<u32>),
    ) {
        if i == rows {
            if rest == 0 {
                f(cur.iter().copied().filter(|&r| r > 0).collect());
            }
            return;
        }
        let old = shape.get(i).copied().unwrap_or(0);
        let cap = if i == 0 {
            rest
        } else {
            (shape[i - 1] - old).min(rest)
        };
        for add in 0..=cap {
            cur.push(old + add);
            go(shape, rows, i + 1, rest - add, cur, f);
            cur.pop();
        }
    }
    let rows = (shape.len() + 1).min(max_rows).max(shape.len());
    go(shape, rows, 0, size, &mut Vec::with_capacity(rows), f);
}

/// Kostka numbers `K_{lambda, content}` for every shape `lambda`, where
/// `content` is any composition. Shapes are limited to `max_rows` rows.
pub fn kostka_column(content: &[u32], max_rows: usize) -> FxHashMap<Partition, BigUint> {
    let mut layer: FxHashMap<Vec<u32>, BigUint> = FxHashMap::default();
    layer.insert(Vec::new(), BigUint::one());
    for &c in content {
        let mut next: FxHashMap<Vec<u32>, BigUint> = FxHashMap::default();
        for (shape, count) in &layer {
            add_horizontal_strip(shape, c, max_rows, &mut |s| {
                *next.entry(s).or_insert_with(BigUint::zero) += count;
            });
        }
        layer = next;
    }
    layer
        .into_iter()
        .map(|(parts, k)| (Partition { parts }, k))
        .collect()
}

/// Number of semistandard tableaux of shape `lambda` and content `content`
/// (a composition, zeros allowed).
pub fn kostka(lambda: &Partition, content: &[u32]) -> Result<BigUint> {
    let total: usize = content.iter().map(|&c| c as usize).sum();
    if total != lambda.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: total,
        });
    }
    if lambda.len() > content.len() {
        return Ok(BigUint::zero());
    }
    Ok(kostka_column(content, lambda.len())
        .remove(lambda)
        .unwrap_or_default())
}
