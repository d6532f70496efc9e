//! Integer partitions and permutations.
//!
//! Partitions are ordered first by size and then in *reverse*
//! lexicographic order of their parts, so that `(n)` is the least partition
//! of `n` and `(1^n)` the greatest. This is the enumeration order of
//! [`partitions_of`] and every partition-indexed table in the crate.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::MalformedPartition(format_parts(&parts)));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::from_unsorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `ℓ(λ)`
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), reading missing parts as zero.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Multiplicities `m_i` keyed by part value.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// The reflected diagram: `λ'_j = #{i : λ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (1..=first).map(|j| self.parts.iter().take_while(|&&p| p >= j).count()).collect();
        Partition { parts }
    }

    /// Dominance order. Fails when the sizes differ.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        check_same_size(self, other)?;
        let mut a = 0;
        let mut b = 0;
        for k in 0..self.len().max(other.len()) {
            a += self.part(k);
            b += other.part(k);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Diagram containment `μ ⊆ λ`.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// `z_λ = ∏ i^{m_i} m_i!`
    pub fn z(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .fold(BigInt::one(), |acc, (part, mult)| acc * BigInt::from(part).pow(mult as u32) * factorial(mult))
    }

    /// Number of permutations of cycle type `λ`: `n!/z_λ`.
    pub fn class_size(&self) -> BigInt {
        factorial(self.size()) / self.z()
    }

    /// `(-1)^{n-ℓ(λ)}`, the sign of any permutation of this cycle type.
    pub fn sign(&self) -> i32 {
        if (self.size() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Multiset union of the parts, re-sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// Every part multiplied by `k`.
    pub fn scale(&self, k: usize) -> Partition {
        Partition::from_unsorted(self.parts.iter().map(|p| p * k).collect())
    }

    /// Cycle type of `π²` for `π` of this type: odd cycles stay, even
    /// cycles split in two halves.
    pub fn square_type(&self) -> Partition {
        let mut parts = Vec::with_capacity(self.len() * 2);
        for &p in &self.parts {
            if p % 2 == 1 {
                parts.push(p);
            } else {
                parts.extend([p / 2, p / 2]);
            }
        }
        Partition::from_unsorted(parts)
    }

    /// A permutation of this cycle type whose cycles are runs of
    /// consecutive integers: `(1 2 … λ_1)(λ_1+1 …)…`.
    pub fn class_representative(&self) -> Permutation {
        let n = self.size();
        let mut images = vec![0; n];
        let mut start = 0;
        for &p in &self.parts {
            for k in 0..p {
                images[start + k] = start + (k + 1) % p;
            }
            start += p;
        }
        Permutation { images }
    }
}

fn check_same_size(a: &Partition, b: &Partition) -> Result<()> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch {
            left: a.to_string(),
            left_size: a.size(),
            right: b.to_string(),
            right_size: b.size(),
        });
    }
    Ok(())
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// All partitions of `n` in canonical order: `(n)` first, `(1^n)` last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for first in (1..=max.min(remaining)).rev() {
            prefix.push(first);
            rec(remaining - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn format_parts(parts: &[usize]) -> String {
    if parts.is_empty() {
        "()".to_string()
    } else {
        parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&format_parts(&self.parts))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"3,2,1"` or `"()"`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "()" {
            return Ok(Partition::empty());
        }
        let bad = || Error::MalformedPartition(s.to_string());
        let parts = t.split(',').map(|p| p.trim().parse::<usize>().map_err(|_| bad())).collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(bad());
        }
        Partition::new(parts).map_err(|_| bad())
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// A permutation of `{1..n}`. Composition follows `(πσ)(i) = π(σ(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based images
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// From a one-line word over `1..=n`.
    pub fn from_word(word: &[usize]) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n];
        for &w in word {
            if w == 0 || w > n || seen[w - 1] {
                return Err(Error::MalformedPermutation(
                    word.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" "),
                ));
            }
            seen[w - 1] = true;
        }
        Ok(Permutation { images: word.iter().map(|w| w - 1).collect() })
    }

    /// From 0-based images; caller guarantees bijectivity.
    pub(crate) fn from_images(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v)
        });
        Permutation { images }
    }

    /// The transposition swapping `a` and `b` (1-based) in `S_n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a - 1, b - 1);
        Permutation { images }
    }

    /// The adjacent transposition `s_i = (i i+1)`, 1-based.
    pub fn adjacent(n: usize, i: usize) -> Self {
        Self::transposition(n, i, i + 1)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `π(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub(crate) fn image0(&self, i: usize) -> usize {
        self.images[i]
    }

    /// One-line word, 1-based.
    pub fn word(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "composing permutations of different degree");
        Permutation { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            lengths.push(len);
        }
        Partition::from_unsorted(lengths)
    }

    pub fn sign(&self) -> i32 {
        self.cycle_type().sign()
    }

    /// Adjacent-transposition indices `a_1..a_k` (1-based) with
    /// `π = s_{a_1} s_{a_2} ⋯ s_{a_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.images.clone();
        let mut right = Vec::new();
        // right-multiplying by s_i swaps positions i, i+1 of the one-line word
        while let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
            w.swap(i, i + 1);
            right.push(i + 1);
        }
        right.reverse();
        right
    }
}

/// All of `S_n` in lexicographic order of one-line words.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    use itertools::Itertools;
    (0..n).permutations(n).map(|images| Permutation { images }).collect()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.word().iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" ");
        f.pad(&s)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses a one-line word such as `"2 3 7 4 1 8 5 6"`.
    fn from_str(s: &str) -> Result<Self> {
        let word = s
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::MalformedPermutation(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_word(&word)
    }
}
