//! Brute-force reference implementations.
//!
//! Each function here follows the textbook definition directly and shares no
//! code with the indexed implementations elsewhere in the crate, so the two
//! can be checked against each other. They are quadratic or worse; keep
//! inputs small.

use std::collections::HashSet;

use crate::attractors::{AttractorCheck, AttractorSet};
use crate::error::{domain, Result};
use crate::factorizations::{count_runs, BwtResult, FactorKind, LzFactor, LzFactorization};
use crate::words::Word;

/// Distinct length-`k` substrings by hashing every window.
pub fn subword_complexity(w: &Word, k: usize) -> u64 {
    if k == 0 || k > w.len() {
        return 0;
    }
    w.as_bytes().windows(k).collect::<HashSet<_>>().len() as u64
}

/// `P(k)` for `k = 1..=|w|`.
pub fn complexity_counts(w: &Word) -> Vec<u64> {
    (1..=w.len()).map(|k| subword_complexity(w, k)).collect()
}

/// LZ factorization by scanning every earlier start for the longest match,
/// keeping the leftmost on ties. Matches may overlap the factor.
pub fn lz_factorize(w: &Word) -> LzFactorization {
    let s = w.as_bytes();
    let n = s.len();
    let mut factors = Vec::new();
    let mut i = 0;
    while i < n {
        let (mut best_len, mut best_src) = (0, None);
        for p in 0..i {
            let mut l = 0;
            while i + l < n && s[p + l] == s[i + l] {
                l += 1;
            }
            if l > best_len {
                best_len = l;
                best_src = Some(p + 1);
            }
        }
        factors.push(match best_src {
            None => LzFactor { start: i + 1, length: 1, kind: FactorKind::FreshSymbol, source: None },
            src => LzFactor { start: i + 1, length: best_len, kind: FactorKind::Copy, source: src },
        });
        i += best_len.max(1);
    }
    LzFactorization { factors }
}

/// Non-empty and strictly smaller than each of its proper suffixes.
pub fn is_lyndon(s: &[u8]) -> bool {
    !s.is_empty() && (1..s.len()).all(|k| s < &s[k..])
}

/// Every factorization of `w` into a non-increasing sequence of Lyndon
/// words. There is exactly one for non-empty `w`.
pub fn lyndon_factorizations(w: &Word) -> Vec<Vec<Word>> {
    fn go<'a>(rest: &'a [u8], bound: Option<&'a [u8]>, acc: &mut Vec<&'a [u8]>, out: &mut Vec<Vec<Word>>) {
        if rest.is_empty() {
            out.push(acc.iter().map(|f| Word::from(*f)).collect());
            return;
        }
        for l in 1..=rest.len() {
            let head = &rest[..l];
            if bound.is_none_or(|b| head <= b) && is_lyndon(head) {
                acc.push(head);
                go(&rest[l..], Some(head), acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    if !w.is_empty() {
        go(w.as_bytes(), None, &mut Vec::new(), &mut out);
    }
    out
}

/// BWT by materializing and sorting every rotation.
pub fn bwt(w: &Word) -> BwtResult {
    let s = w.as_bytes();
    let n = s.len();
    let mut rotations: Vec<Vec<u8>> = (0..n).map(|i| [&s[i..], &s[..i]].concat()).collect();
    rotations.sort();
    let last: Vec<u8> = rotations.iter().map(|r| r[n - 1]).collect();
    BwtResult { run_count: count_runs(&last), transformed: Word::new(last) }
}

/// Attractor check by a double loop over `(length, start)`.
///
/// For each length, the substrings of that length having an occurrence that
/// crosses Γ are collected; then every start is looked up. The first miss
/// is a shortest uncovered substring at its leftmost occurrence.
pub fn is_attractor(w: &Word, gamma: &AttractorSet) -> Result<AttractorCheck> {
    if gamma.word_length() != w.len() {
        return Err(domain("attractor length does not match word length"));
    }
    let s = w.as_bytes();
    let n = s.len();
    let crosses = |i: usize, len: usize| gamma.positions().iter().any(|&p| p > i && p <= i + len);
    for len in 1..=n {
        let covered: HashSet<&[u8]> =
            (0..=n - len).filter(|&i| crosses(i, len)).map(|i| &s[i..i + len]).collect();
        if let Some(i) = (0..=n - len).find(|&i| !covered.contains(&s[i..i + len])) {
            return Ok(AttractorCheck {
                is_attractor: false,
                certificate: Some(Word::from(&s[i..i + len])),
            });
        }
    }
    Ok(AttractorCheck { is_attractor: true, certificate: None })
}
