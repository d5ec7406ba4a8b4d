//! Words over the positive integers, compositions, permutations, and the
//! per-word statistics.
//!
//! Positions are 0-based in code and 1-based in everything printed.

mod enumerate;
mod stats;

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::combin;
use crate::error::{Error, Result};

pub use enumerate::{
    compositions, compositions_k, is_cayley, orbit, permutations, weak_compositions, words_in_box, Rule, Words,
};
pub use stats::{inversion_set, pattern_count, statistic, Digraph, StatisticId};
pub(crate) use stats::{for_each_subset, matches_pattern};

/// A finite word of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if let Some(position) = entries.iter().position(|&x| x == 0) {
            return Err(Error::NonPositiveEntry { position: position + 1 });
        }
        Ok(Word(entries))
    }

    /// Skips validation; callers guarantee every entry is positive.
    pub(crate) fn from_vec_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(entries.iter().all(|&x| x > 0));
        Word(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    pub fn max_entry(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Rejects entries above `bound`.
    pub fn check_bound(&self, bound: u32) -> Result<()> {
        match self.0.iter().position(|&x| x > bound) {
            Some(p) => Err(Error::EntryOutOfRange { position: p + 1, value: self.0[p], bound }),
            None => Ok(()),
        }
    }

    /// The word with entries sorted increasingly.
    pub fn sorted(&self) -> Word {
        let mut v = self.0.clone();
        v.sort_unstable();
        Word(v)
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.0.windows(2).all(|p| p[0] <= p[1])
    }

    /// Swaps positions `i` and `i+1` (1-based `i`).
    pub fn swap_adjacent(&self, i: usize) -> Word {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Word(v)
    }
}

impl Deref for Word {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl AsRef<[u32]> for Word {
    fn as_ref(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `(2,2,4)`, `2 2 4`, `2,2,4`, or a bare digit string `224`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() {
            return Ok(Word::default());
        }
        let entries: Vec<u32> = if t.chars().all(|c| c.is_ascii_digit()) && !t.contains(' ') && t.len() > 1 {
            t.chars().map(|c| c.to_digit(10).unwrap()).collect()
        } else {
            t.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|p| !p.is_empty())
                .map(|p| p.parse::<u32>().map_err(|e| Error::Parse(format!("{p}: {e}"))))
                .collect::<Result<_>>()?
        };
        Word::new(entries)
    }
}

impl From<Word> for Vec<u32> {
    fn from(w: Word) -> Self {
        w.0
    }
}

impl TryFrom<Vec<u32>> for Word {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Word::new(v)
    }
}

impl TryFrom<&[u32]> for Word {
    type Error = Error;
    fn try_from(v: &[u32]) -> Result<Self> {
        Word::new(v.to_vec())
    }
}

/// A sequence of nonnegative parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct WeakComposition(Vec<usize>);

impl WeakComposition {
    pub fn new(parts: Vec<usize>) -> Self {
        WeakComposition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Pads with zeros to `len` parts (never truncates).
    pub fn padded(&self, len: usize) -> WeakComposition {
        let mut v = self.0.clone();
        if v.len() < len {
            v.resize(len, 0);
        }
        WeakComposition(v)
    }

    /// Drops the zero parts.
    pub fn positive_parts(&self) -> Composition {
        Composition(self.0.iter().copied().filter(|&p| p > 0).collect())
    }

    pub fn multinomial(&self) -> BigInt {
        combin::multinomial(&self.0)
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("{parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_weak(&self) -> WeakComposition {
        WeakComposition(self.0.clone())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_weak().fmt(f)
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Multiplicities of `1, 2, ..., max(w)` in `w`.
pub fn content(w: &[u32]) -> WeakComposition {
    let m = w.iter().copied().max().unwrap_or(0) as usize;
    let mut c = vec![0; m];
    for &x in w {
        c[x as usize - 1] += 1;
    }
    WeakComposition(c)
}

/// A word containing each of `1..=n` exactly once.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct Permutation(Word);

impl Permutation {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if !is_permutation(&entries) {
            return Err(Error::NotAPermutation { n: entries.len(), word: format!("{entries:?}") });
        }
        Ok(Permutation(Word(entries)))
    }

    pub fn identity(n: usize) -> Self {
        Permutation(Word((1..=n as u32).collect()))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.n()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation(Word(inv))
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(Word(other.0.iter().map(|&j| self.0[j as usize - 1]).collect()))
    }

    /// Ascent positions `i` (1-based) with `σ_i < σ_{i+1}`.
    pub fn ascent_set(&self) -> Vec<usize> {
        self.0.windows(2).enumerate().filter(|(_, p)| p[0] < p[1]).map(|(i, _)| i + 1).collect()
    }

    /// Sign parity: true for even permutations.
    pub fn is_even(&self) -> bool {
        let inv: usize = (0..self.n())
            .map(|i| (i + 1..self.n()).filter(|&j| self.0[i] > self.0[j]).count())
            .sum();
        inv.is_multiple_of(2)
    }
}

impl Deref for Permutation {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Permutation> for Word {
    fn from(p: Permutation) -> Word {
        p.0
    }
}

pub fn is_permutation(w: &[u32]) -> bool {
    let n = w.len();
    let mut seen = vec![false; n];
    for &x in w {
        if x == 0 || x as usize > n || seen[x as usize - 1] {
            return false;
        }
        seen[x as usize - 1] = true;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn content_examples() {
        assert_eq!(content(&[1, 1, 2, 2, 2, 6, 7, 7]).parts(), &[2, 3, 0, 0, 0, 1, 2]);
        assert_eq!(content(&[1, 1, 1]).parts(), &[3]);
        assert_eq!(content(&[2, 2, 4]).parts(), &[0, 2, 0, 1]);
        assert!(content(&[]).is_empty());
    }

    #[test]
    fn parse_forms() {
        let w: Word = "224521435".parse().unwrap();
        assert_eq!(w.entries(), &[2, 2, 4, 5, 2, 1, 4, 3, 5]);
        let w: Word = "(14,3,2)".parse().unwrap();
        assert_eq!(w.entries(), &[14, 3, 2]);
        let w: Word = "1 2 10".parse().unwrap();
        assert_eq!(w.entries(), &[1, 2, 10]);
        assert!("1 0 2".parse::<Word>().is_err());
        assert_eq!("()".parse::<Word>().unwrap().len(), 0);
    }

    #[test]
    fn permutation_basics() {
        let s = Permutation::new(vec![2, 3, 6, 8, 4, 1, 7, 5, 9]).unwrap();
        assert_eq!(s.inverse().entries(), &[6, 1, 2, 5, 8, 3, 7, 4, 9]);
        assert_eq!(s.inverse().ascent_set(), vec![2, 3, 4, 6, 8]);
        assert_eq!(s.compose(&s.inverse()), Permutation::identity(9));
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![2, 3, 1]).unwrap().is_even());
    }
}
