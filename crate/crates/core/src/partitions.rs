//! Integer partitions, weakly decreasing integer sequences of fixed length,
//! and the box operations (complement, translation) built on them.
//!
//! A [`Partition`] never stores zero parts, so `(2,1)` and `(2,1,0,0)` are the
//! same value. A [`SignedSequence`] has an explicit length and may carry
//! negative entries; it is what the box operations produce before anyone has
//! checked whether the result is a genuine partition.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition stored without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, panicking if `parts` is not weakly decreasing.
    /// Trailing zeros are dropped.
    pub fn new(parts: Vec<u32>) -> Self {
        Self::try_new(parts).expect("parts must be weakly decreasing")
    }

    pub fn try_new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangle `(k^n)`.
    pub fn rectangle(k: u32, n: usize) -> Self {
        if k == 0 {
            return Self::empty();
        }
        Partition { parts: vec![k; n] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn first(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The `i`-th part (0-based), 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first() as usize;
        let mut out = vec![0u32; cols];
        for &p in &self.parts {
            for c in out.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition { parts: out }
    }

    /// Diagram inclusion `self ⊆ outer`.
    pub fn is_contained_in(&self, outer: &Partition) -> bool {
        self.len() <= outer.len() && self.parts.iter().zip(&outer.parts).all(|(a, b)| a <= b)
    }

    /// Zero-padded entries as a signed sequence of length `n`.
    pub fn to_signed(&self, n: usize) -> Result<SignedSequence> {
        if self.len() > n {
            return Err(Error::LengthExceedsBox {
                length: self.len(),
                height: n,
            });
        }
        let mut entries: Vec<i32> = self.parts.iter().map(|&p| p as i32).collect();
        entries.resize(n, 0);
        Ok(SignedSequence { entries })
    }

    /// Multiplicity of `i` as a part.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// Cells as `(row, col)` pairs, 0-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (0..p as usize).map(move |c| (r, c)))
    }

    /// Hook length of the cell `(row, col)`.
    pub fn hook(&self, row: usize, col: usize) -> usize {
        let arm = self.part(row) as usize - col - 1;
        let leg = self.parts[row + 1..]
            .iter()
            .take_while(|&&p| p as usize > col)
            .count();
        arm + leg + 1
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::try_new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Command-line text form: `3,1,1`; the empty partition is `0` or the empty
/// string. Parentheses and whitespace are tolerated.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(s.to_string()))?;
        Partition::try_new(parts).map_err(|_| Error::Parse(s.to_string()))
    }
}

/// A weakly decreasing integer sequence of fixed length.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct SignedSequence {
    entries: Vec<i32>,
}

impl SignedSequence {
    pub fn new(entries: Vec<i32>) -> Self {
        Self::try_new(entries).expect("entries must be weakly decreasing")
    }

    pub fn try_new(entries: Vec<i32>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{entries:?} is not weakly decreasing")));
        }
        Ok(SignedSequence { entries })
    }

    pub fn zeros(n: usize) -> Self {
        SignedSequence {
            entries: vec![0; n],
        }
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.entries.iter().map(|&e| e as i64).sum()
    }

    /// Smallest entry (the last one); 0 for the empty sequence.
    pub fn last(&self) -> i32 {
        self.entries.last().copied().unwrap_or(0)
    }

    pub fn is_partition(&self) -> bool {
        self.entries.iter().all(|&e| e >= 0)
    }

    /// The partition this sequence represents, if all entries are nonnegative.
    pub fn to_partition(&self) -> Option<Partition> {
        if !self.is_partition() {
            return None;
        }
        Some(Partition::new(self.entries.iter().map(|&e| e as u32).collect()))
    }

    /// `(k - e_n, ..., k - e_1)`.
    pub fn complement(&self, k: i32) -> SignedSequence {
        SignedSequence {
            entries: self.entries.iter().rev().map(|&e| k - e).collect(),
        }
    }

    /// Adds `k` to every entry.
    pub fn translate(&self, k: i32) -> SignedSequence {
        SignedSequence {
            entries: self.entries.iter().map(|&e| e + k).collect(),
        }
    }
}

impl TryFrom<Vec<i32>> for SignedSequence {
    type Error = Error;

    fn try_from(entries: Vec<i32>) -> Result<Self> {
        SignedSequence::try_new(entries)
    }
}

impl From<SignedSequence> for Vec<i32> {
    fn from(s: SignedSequence) -> Self {
        s.entries
    }
}

impl fmt::Display for SignedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for SignedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The rectangle `(k^n)`: width `k`, height `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoxSpec {
    pub width: i32,
    pub height: usize,
}

impl BoxSpec {
    pub fn new(width: i32, height: usize) -> Self {
        BoxSpec { width, height }
    }
}

pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

/// Complement of `p` in the box: `(k - p_n, ..., k - p_1)` after padding `p`
/// to `n` entries.
pub fn complement(p: &Partition, bx: BoxSpec) -> Result<SignedSequence> {
    Ok(p.to_signed(bx.height)?.complement(bx.width))
}

pub fn to_partition(s: &SignedSequence) -> Option<Partition> {
    s.to_partition()
}

/// `p + (k^n)`.
pub fn translate(p: &Partition, k: i32, n: usize) -> Result<SignedSequence> {
    Ok(p.to_signed(n)?.translate(k))
}

/// `p ⊆ (k^n)`.
pub fn contains(inner: &Partition, bx: BoxSpec) -> bool {
    inner.len() <= bx.height && (inner.first() as i64) <= bx.width as i64
}

/// Componentwise sum of `p` and `(k^n)` over `max(len(p), n)` positions.
///
/// Unlike [`translate`] this accepts partitions longer than `n`; the entries
/// past `n` are left alone. Returns `None` when the result is not a partition.
pub fn add_rectangle(p: &Partition, k: i64, n: usize) -> Option<Partition> {
    let len = p.len().max(n);
    let mut out = Vec::with_capacity(len);
    for i in 0..len {
        let v = p.part(i) as i64 + if i < n { k } else { 0 };
        if v < 0 || v > u32::MAX as i64 {
            return None;
        }
        out.push(v as u32);
    }
    Partition::try_new(out).ok()
}

/// Every partition of `weight` with at most `max_length` parts and largest
/// part at most `max_part`, in reverse-lexicographic order.
pub fn partitions_of(weight: usize, max_length: usize, max_part: usize) -> Vec<Partition> {
    fn rec(
        rest: usize,
        max_len: usize,
        max_part: usize,
        prefix: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if rest == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        if max_len == 0 {
            return;
        }
        // the remaining rows must be able to absorb `rest`
        let top = rest.min(max_part);
        for p in (1..=top).rev() {
            if p * max_len < rest {
                break;
            }
            prefix.push(p as u32);
            rec(rest - p, max_len - 1, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(weight, max_length, max_part, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `weight` with no constraint on length or parts.
pub fn all_partitions_of(weight: usize) -> Vec<Partition> {
    partitions_of(weight, weight, weight)
}

/// Every partition with weight at most `max_weight`, length at most
/// `max_length` and largest part at most `max_part`; graded by weight, then
/// reverse-lexicographic.
pub fn enumerate_partitions(
    max_weight: usize,
    max_length: usize,
    max_part: usize,
) -> impl Iterator<Item = Partition> {
    (0..=max_weight).flat_map(move |w| partitions_of(w, max_length, max_part))
}

/// Number of semistandard tableaux of shape `mu` with entries in `1..=n`,
/// by the hook-content formula.
pub fn count_ssyt(mu: &Partition, n: usize) -> BigUint {
    if mu.len() > n {
        return BigUint::zero();
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (r, c) in mu.cells() {
        // content c - r, and n + content > 0 because r < n
        num *= BigUint::from(n + c - r);
        den *= BigUint::from(mu.hook(r, c));
    }
    let (q, rem) = num.div_rem(&den);
    assert!(rem.is_zero(), "hook-content product is not divisible");
    q
}

/// A semistandard tableau as rows of entries (English convention: row 0 is
/// the longest row).
pub type Tableau = Vec<Vec<u32>>;

/// Calls `visit` on every semistandard tableau of the given shape with
/// entries in `1..=max_entry`.
pub fn for_each_ssyt(shape: &Partition, max_entry: u32, mut visit: impl FnMut(&Tableau)) {
    let mut tab: Tableau = shape.parts().iter().map(|&p| vec![0; p as usize]).collect();
    let cells: Vec<(usize, usize)> = shape.cells().collect();
    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        tab: &mut Tableau,
        max_entry: u32,
        visit: &mut dyn FnMut(&Tableau),
    ) {
        if idx == cells.len() {
            visit(tab);
            return;
        }
        let (r, c) = cells[idx];
        let lo_left = if c > 0 { tab[r][c - 1] } else { 1 };
        let lo_above = if r > 0 { tab[r - 1][c] + 1 } else { 1 };
        let lo = lo_left.max(lo_above);
        // leave room for the cells below in this column
        let below = tab[r + 1..].iter().take_while(|row| row.len() > c).count() as u32;
        if max_entry < below {
            return;
        }
        for v in lo..=max_entry - below {
            tab[r][c] = v;
            fill(idx + 1, cells, tab, max_entry, visit);
        }
        tab[r][c] = 0;
    }
    fill(0, &cells, &mut tab, max_entry, &mut visit);
}

/// All `inner ⊆ outer` such that `outer / inner` is a horizontal strip of
/// `size` cells.
pub fn horizontal_strips_removed(outer: &Partition, size: usize) -> Vec<Partition> {
    let len = outer.len();
    let mut out = Vec::new();
    let mut inner = vec![0u32; len];
    fn rec(
        i: usize,
        rest: usize,
        outer: &Partition,
        inner: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if i == outer.len() {
            if rest == 0 {
                out.push(Partition::new(inner.clone()));
            }
            return;
        }
        let hi = outer.part(i);
        let lo = outer.part(i + 1);
        let max_take = ((hi - lo) as usize).min(rest);
        for take in 0..=max_take {
            inner[i] = hi - take as u32;
            rec(i + 1, rest - take, outer, inner, out);
        }
    }
    rec(0, size, outer, &mut inner, &mut out);
    out
}

/// Calls `visit` on every semistandard tableau of shape `shape` and content
/// `content` (entry `i + 1` occurs `content[i]` times).
pub fn for_each_ssyt_with_content(
    shape: &Partition,
    content: &[u32],
    mut visit: impl FnMut(&Tableau),
) {
    if shape.weight() != content.iter().map(|&c| c as usize).sum::<usize>() {
        return;
    }
    // peel off the largest entry as a horizontal strip, recursively
    let mut chain: Vec<Partition> = vec![shape.clone()];
    fn rec(
        level: usize,
        content: &[u32],
        chain: &mut Vec<Partition>,
        visit: &mut dyn FnMut(&Tableau),
    ) {
        let current = chain.last().unwrap().clone();
        if level == 0 {
            if current.is_empty() {
                let outer = &chain[0];
                let mut tab: Tableau = outer.parts().iter().map(|&p| vec![0; p as usize]).collect();
                // chain[j] is the shape filled with entries <= level(j)
                let depth = chain.len() - 1;
                for j in 0..depth {
                    let entry = (depth - j) as u32;
                    let (big, small) = (&chain[j], &chain[j + 1]);
                    for (r, row) in tab.iter_mut().enumerate() {
                        for cell in row
                            .iter_mut()
                            .take(big.part(r) as usize)
                            .skip(small.part(r) as usize)
                        {
                            *cell = entry;
                        }
                    }
                }
                visit(&tab);
            }
            return;
        }
        let size = content[level - 1] as usize;
        for inner in horizontal_strips_removed(&current, size) {
            if inner.len() > level - 1 {
                continue;
            }
            chain.push(inner);
            rec(level - 1, content, chain, visit);
            chain.pop();
        }
    }
    rec(content.len(), content, &mut chain, &mut visit);
}
