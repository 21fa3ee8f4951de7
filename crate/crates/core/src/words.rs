//! Words over bytes, Thue-Morse generation and occurrence scanning.
//!
//! Positions are 1-based throughout: a word `w` of length `n` has symbols
//! `w[1], ..., w[n]` and `w[i..j]` denotes the inclusive range.

use std::fmt;
use std::ops::RangeInclusive;
use std::sync::Arc;

use crate::error::{domain, Error, Result};

/// Default bound on the index of a materialized Thue-Morse word.
pub const DEFAULT_CAP: u32 = 30;

/// Immutable finite sequence of byte symbols.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Arc<[u8]>);

impl Word {
    pub fn new(symbols: impl Into<Vec<u8>>) -> Self {
        Word(symbols.into().into())
    }

    pub fn empty() -> Self {
        Word(Arc::from(&[][..]))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The symbol `w[i]`, or `None` outside `1..=len`.
    pub fn symbol(&self, i: usize) -> Option<u8> {
        i.checked_sub(1).and_then(|k| self.0.get(k)).copied()
    }

    /// The substring `w[i..j]` (inclusive). Empty when `j < i`.
    ///
    /// # Panics
    ///
    /// Panics if `i == 0` or `j > len` with `j >= i`.
    pub fn slice(&self, i: usize, j: usize) -> &[u8] {
        if j < i {
            return &[];
        }
        assert!(i >= 1 && j <= self.len(), "range {i}..={j} outside 1..={}", self.len());
        &self.0[i - 1..j]
    }

    /// Number of distinct symbols.
    pub fn alphabet_size(&self) -> usize {
        let mut seen = [false; 256];
        self.0.iter().for_each(|&c| seen[c as usize] = true);
        seen.iter().filter(|&&s| s).count()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(self.as_bytes());
        v.extend_from_slice(other.as_bytes());
        Word::new(v)
    }
}

impl From<&[u8]> for Word {
    fn from(s: &[u8]) -> Self {
        Word(Arc::from(s))
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word::from(s.as_bytes())
    }
}

impl From<Vec<u8>> for Word {
    fn from(v: Vec<u8>) -> Self {
        Word::new(v)
    }
}

impl AsRef<[u8]> for Word {
    fn as_ref(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&String::from_utf8_lossy(&self.0))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", String::from_utf8_lossy(&self.0))
    }
}

/// Index `n` of the Thue-Morse word `t_n`, checked against a cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ThueMorseIndex(u32);

impl ThueMorseIndex {
    /// Checks `n` against [`DEFAULT_CAP`].
    pub fn new(n: u32) -> Result<Self> {
        Self::with_cap(n, DEFAULT_CAP)
    }

    /// Checks `n` against `cap`. The cap itself is clamped so that `2^n`
    /// fits in a `usize`.
    pub fn with_cap(n: u32, cap: u32) -> Result<Self> {
        let cap = cap.min(usize::BITS - 2);
        if n > cap {
            return Err(Error::Capacity { n, cap });
        }
        Ok(ThueMorseIndex(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// `|t_n| = 2^n`.
    pub fn word_length(self) -> usize {
        1usize << self.0
    }
}

/// Materializes `t_n`: `t_0 = a` and `t_n = t_{n-1} · complement(t_{n-1})`.
pub fn thue_morse(n: ThueMorseIndex) -> Word {
    let len = n.word_length();
    let mut v = Vec::with_capacity(len);
    v.push(b'a');
    while v.len() < len {
        let doubled = v.len();
        for k in 0..doubled {
            v.push(swap(v[k]));
        }
    }
    Word::new(v)
}

/// Shorthand for `thue_morse` with the default cap, panicking above it.
/// Intended for tests and examples.
pub fn tm(n: u32) -> Word {
    thue_morse(ThueMorseIndex::new(n).expect("index above default cap"))
}

#[inline]
fn swap(c: u8) -> u8 {
    if c == b'a' {
        b'b'
    } else {
        b'a'
    }
}

/// Swaps every `a` with `b`. Fails on any other symbol.
pub fn complement(w: &Word) -> Result<Word> {
    w.as_bytes()
        .iter()
        .enumerate()
        .map(|(k, &c)| match c {
            b'a' => Ok(b'b'),
            b'b' => Ok(b'a'),
            symbol => Err(Error::Alphabet { symbol, position: k + 1 }),
        })
        .collect::<Result<Vec<u8>>>()
        .map(Word::new)
}

/// All 1-based inclusive intervals `[i, i+|x|-1]` with `w[i..i+|x|-1] = x`,
/// in increasing order of `i`. Overlapping occurrences are included.
pub fn occurrences(w: &Word, x: &[u8]) -> Result<Vec<RangeInclusive<usize>>> {
    if x.is_empty() {
        return Err(domain("pattern must be non-empty"));
    }
    if x.len() > w.len() {
        return Ok(Vec::new());
    }
    Ok(w.as_bytes()
        .windows(x.len())
        .enumerate()
        .filter(|(_, win)| *win == x)
        .map(|(k, _)| k + 1..=k + x.len())
        .collect())
}

/// If `w` equals some `t_n`, returns `n`.
pub fn thue_morse_index_of(w: &Word) -> Option<u32> {
    let len = w.len();
    if len == 0 || !len.is_power_of_two() {
        return None;
    }
    let n = len.trailing_zeros();
    // t_n[i] (0-based) is 'b' iff popcount(i) is odd.
    w.as_bytes()
        .iter()
        .enumerate()
        .all(|(i, &c)| c == if i.count_ones() % 2 == 0 { b'a' } else { b'b' })
        .then_some(n)
}
