//! LZ77 with self-reference, Lyndon factorization, the cyclic BWT, and the
//! closed-form values of these measures on `t_n`.

use serde::{Deserialize, Serialize};

use crate::automaton::{SuffixAutomaton, ROOT};
use crate::complexity::closed_form_delta;
use crate::error::{domain, Result};
use crate::rational::Rational;
use crate::words::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorKind {
    FreshSymbol,
    Copy,
}

/// One LZ factor. Positions are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LzFactor {
    pub start: usize,
    pub length: usize,
    pub kind: FactorKind,
    /// Leftmost earlier start of the copied text, `None` for fresh symbols.
    pub source: Option<usize>,
}

impl LzFactor {
    pub fn end(&self) -> usize {
        self.start + self.length - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LzFactorization {
    pub factors: Vec<LzFactor>,
}

impl LzFactorization {
    /// z(w).
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Rebuilds the text, copying symbol by symbol so self-overlapping
    /// factors work. `fresh` yields the symbol of each fresh factor in order.
    pub fn decode(&self, mut fresh: impl FnMut(usize) -> u8) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.factors.last().map_or(0, |f| f.end()));
        for f in &self.factors {
            match f.source {
                None => out.push(fresh(f.start)),
                Some(src) => {
                    for k in 0..f.length {
                        let c = out[src - 1 + k];
                        out.push(c);
                    }
                }
            }
        }
        out
    }

    /// Index (0-based) of the factor containing 1-based `position`.
    pub fn factor_of(&self, position: usize) -> Option<usize> {
        let k = self.factors.partition_point(|f| f.end() < position);
        (k < self.factors.len() && self.factors[k].start <= position).then_some(k)
    }

    /// Factor texts, for display.
    pub fn pieces<'a>(&'a self, w: &'a Word) -> impl Iterator<Item = &'a [u8]> + 'a {
        self.factors.iter().map(move |f| w.slice(f.start, f.end()))
    }
}

/// Self-referencing LZ77 factorization.
///
/// Each factor `f_i` is the longest prefix of the remaining suffix having a
/// second occurrence inside `f_1 ... f_i`, or a single symbol if there is
/// none. An occurrence inside `f_1 ... f_i` other than `f_i` itself has to
/// start strictly before `f_i` does, so the factor at position `i` is the
/// longest `w[i..i+l-1]` occurring at some `p < i` (the occurrence may run
/// into the factor itself).
///
/// The suffix automaton of `w` gives the first occurrence of every
/// substring. Extending `w[i..]` one symbol at a time, the first occurrence
/// start never moves left, so the walk stops at the first length whose
/// first occurrence starts at `i` or later. Linear overall.
pub fn lz_factorize(w: &Word) -> Result<LzFactorization> {
    if w.is_empty() {
        return Err(domain("LZ factorization of the empty word is undefined"));
    }
    let text = w.as_bytes();
    let n = text.len();
    let sa = SuffixAutomaton::new(text);
    let mut factors = Vec::new();
    let mut i = 1;
    while i <= n {
        let (mut state, mut len, mut source) = (ROOT, 0, None);
        while i + len <= n {
            let next = sa
                .transition(state, text[i + len - 1])
                .expect("every substring of w is in its automaton");
            let first_start = sa.state(next).first_end - len;
            if first_start >= i {
                break;
            }
            state = next;
            len += 1;
            source = Some(first_start);
        }
        factors.push(match source {
            None => LzFactor { start: i, length: 1, kind: FactorKind::FreshSymbol, source: None },
            Some(_) => LzFactor { start: i, length: len, kind: FactorKind::Copy, source },
        });
        i += len.max(1);
    }
    Ok(LzFactorization { factors })
}

/// z(w), the number of LZ factors.
pub fn lz_size(w: &Word) -> Result<usize> {
    lz_factorize(w).map(|f| f.len())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyndonFactorization {
    pub factors: Vec<Word>,
}

impl LyndonFactorization {
    /// ℓ(w).
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

/// Chen-Fox-Lyndon factorization by Duval's algorithm.
pub fn lyndon_factorize(w: &Word) -> Result<LyndonFactorization> {
    if w.is_empty() {
        return Err(domain("Lyndon factorization of the empty word is undefined"));
    }
    let s = w.as_bytes();
    let n = s.len();
    let mut factors = Vec::new();
    let mut i = 0;
    while i < n {
        let (mut j, mut k) = (i + 1, i);
        while j < n && s[k] <= s[j] {
            if s[k] < s[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        // s[i..j] is a power of a Lyndon word of length j - k, plus a prefix.
        while i <= k {
            factors.push(Word::from(&s[i..i + j - k]));
            i += j - k;
        }
    }
    Ok(LyndonFactorization { factors })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BwtResult {
    pub transformed: Word,
    pub run_count: usize,
}

/// Burrows-Wheeler transform over sorted cyclic rotations, no sentinel.
///
/// Rotations are ranked by prefix doubling. Equal rotations end in the same
/// symbol, so their relative order does not matter.
pub fn bwt(w: &Word) -> Result<BwtResult> {
    if w.is_empty() {
        return Err(domain("BWT of the empty word is undefined"));
    }
    let s = w.as_bytes();
    let n = s.len();
    let order = sort_rotations(s);
    let transformed: Vec<u8> = order.iter().map(|&i| s[(i + n - 1) % n]).collect();
    Ok(BwtResult { run_count: count_runs(&transformed), transformed: Word::new(transformed) })
}

/// Starting offsets (0-based) of the cyclic rotations of `s`, sorted.
pub(crate) fn sort_rotations(s: &[u8]) -> Vec<usize> {
    let n = s.len();
    let mut rank: Vec<usize> = s.iter().map(|&c| c as usize).collect();
    let mut order: Vec<usize> = (0..n).collect();
    let mut tmp = vec![0usize; n];
    let mut width = 1;
    loop {
        let key = |i: usize| (rank[i], rank[(i + width) % n]);
        order.sort_unstable_by_key(|&i| key(i));
        tmp[order[0]] = 0;
        for k in 1..n {
            let bump = usize::from(key(order[k - 1]) != key(order[k]));
            tmp[order[k]] = tmp[order[k - 1]] + bump;
        }
        std::mem::swap(&mut rank, &mut tmp);
        if rank[order[n - 1]] == n - 1 || width >= n {
            break;
        }
        width *= 2;
    }
    order
}

/// Number of maximal blocks of equal adjacent symbols.
pub fn count_runs(s: &[u8]) -> usize {
    if s.is_empty() {
        return 0;
    }
    1 + s.windows(2).filter(|p| p[0] != p[1]).count()
}

/// r(w), the number of runs in the BWT.
pub fn bwt_runs(w: &Word) -> Result<usize> {
    bwt(w).map(|b| b.run_count)
}

/// Closed-form repetitiveness measures of `t_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormEntry {
    pub n: u32,
    /// z(t_n) = 2n.
    pub z: u64,
    /// r(t_n) = 2n.
    pub r: u64,
    /// ⌊(3n - 2) / 2⌋. Evaluates to 0 at n = 1, where the actual count is 1.
    pub lyndon: u64,
    /// γ(t_n) = 4, known for n >= 4 only.
    pub gamma: Option<u64>,
    pub delta: Rational,
}

/// Closed-form table row for `t_n`, `n >= 1`. Nothing is materialized.
pub fn oracle_table_entry(n: u32) -> Result<ClosedFormEntry> {
    if n == 0 {
        return Err(domain("closed-form table rows start at n = 1"));
    }
    let n64 = u64::from(n);
    Ok(ClosedFormEntry {
        n,
        z: 2 * n64,
        r: 2 * n64,
        lyndon: (3 * n64 - 2) / 2,
        gamma: (n >= 4).then_some(4),
        delta: closed_form_delta(n),
    })
}
