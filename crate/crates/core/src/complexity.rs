//! Subword complexity `P(k)`, the measure δ, and closed forms for `t_n`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::automaton::SuffixAutomaton;
use crate::error::{domain, Result};
use crate::rational::Rational;
use crate::words::Word;

/// Number of distinct substrings of `w` of length exactly `k`.
///
/// Builds a suffix automaton, so a single call is linear in `|w|`. Use
/// [`profile`] when several lengths are needed.
pub fn subword_complexity(w: &Word, k: usize) -> u64 {
    if k == 0 || k > w.len() {
        return 0;
    }
    SuffixAutomaton::new(w.as_bytes()).distinct_per_length()[k - 1]
}

/// `P(k)` for every `k`, together with δ and the smallest maximizing `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityProfile {
    /// `counts[k - 1] = P(k)` for `k = 1..=|w|`.
    pub counts: Vec<u64>,
    pub argmax_k: usize,
    pub delta: Rational,
}

impl ComplexityProfile {
    /// `P(k)`, zero for `k = 0` or `k > |w|`.
    pub fn count(&self, k: usize) -> u64 {
        k.checked_sub(1)
            .and_then(|i| self.counts.get(i))
            .copied()
            .unwrap_or(0)
    }

    pub fn word_length(&self) -> usize {
        self.counts.len()
    }

    /// Builds a profile from precomputed counts (`counts[k-1] = P(k)`).
    pub fn from_counts(counts: Vec<u64>) -> Result<Self> {
        if counts.is_empty() {
            return Err(domain("profile of the empty word is undefined"));
        }
        // Smallest k maximizing P(k)/k; compare a/k > b/j as a*j > b*k.
        let (mut best_k, mut best_p) = (1usize, counts[0]);
        for (i, &p) in counts.iter().enumerate().skip(1) {
            let k = i + 1;
            if (p as u128) * (best_k as u128) > (best_p as u128) * (k as u128) {
                best_k = k;
                best_p = p;
            }
        }
        Ok(ComplexityProfile {
            delta: Rational::new(best_p, best_k as u64),
            argmax_k: best_k,
            counts,
        })
    }
}

/// The full complexity profile of a non-empty word.
pub fn profile(w: &Word) -> Result<ComplexityProfile> {
    if w.is_empty() {
        return Err(domain("profile of the empty word is undefined"));
    }
    ComplexityProfile::from_counts(SuffixAutomaton::new(w.as_bytes()).distinct_per_length())
}

/// δ(w) = max over k of P(k)/k.
pub fn delta(w: &Word) -> Result<Rational> {
    profile(w).map(|p| p.delta)
}

/// The pair with `m = 2^q + p + 1` and `0 < p <= 2^q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PQDecomposition {
    pub q: u32,
    pub p: u64,
}

/// Splits `m >= 3` as `2^q + p + 1` with `0 < p <= 2^q`.
pub fn pq_decompose(m: u64) -> Result<PQDecomposition> {
    if m < 3 {
        return Err(domain(format!("pq decomposition needs m >= 3, got {m}")));
    }
    // m - 2 = 2^q + (p - 1) lies in [2^q, 2^(q+1)).
    let q = (m - 2).ilog2();
    Ok(PQDecomposition { q, p: m - 1 - (1u64 << q) })
}

/// Closed form for `P_n(m)`, the number of distinct length-`m` substrings
/// of `t_n`, valid for `n >= 3` and `3 <= m <= 2^n`. Evaluated without
/// materializing `t_n`.
pub fn closed_form_p(n: u32, m: u64) -> Result<u64> {
    if !(3..=63).contains(&n) {
        return Err(domain(format!("closed form P_n(m) needs 3 <= n <= 63, got n = {n}")));
    }
    let len = 1u64 << n;
    if !(3..=len).contains(&m) {
        return Err(domain(format!("closed form P_n(m) needs 3 <= m <= 2^n, got m = {m}")));
    }
    if m > len / 4 {
        return Ok(len - m + 1);
    }
    let PQDecomposition { q, p } = pq_decompose(m)?;
    // 6·2^(q-1) = 3·2^q and 8·2^(q-1) = 4·2^q; p <= 2^(q-1) iff 2p <= 2^q.
    let pow = 1u64 << q;
    Ok(if 2 * p <= pow { 3 * pow + 4 * p } else { 4 * pow + 2 * p })
}

/// Closed form for δ(t_n): 1 for n = 0, 2 for n = 1, 2, and
/// `10 / (3 + 2^(4-n))` for n >= 3, all exact.
pub fn closed_form_delta(n: u32) -> Rational {
    match n {
        0 => Rational::from(1u64),
        1 | 2 => Rational::from(2u64),
        3 => Rational::new(10, 5),
        _ => {
            let pow = BigInt::from(1) << (n - 4);
            Rational::new(&pow * 10, pow * 3 + 1)
        }
    }
}
