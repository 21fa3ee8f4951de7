//! String attractors: verification, exhaustive minimum search, the explicit
//! families for `t_n`, the δ lower bound and the center-cover decomposition.
//!
//! A set Γ of positions is an attractor of `w` when every distinct substring
//! has at least one occurrence `[i, j]` with `i <= p <= j` for some `p` in Γ.

use serde::{Deserialize, Serialize};

use crate::automaton::{StateId, SuffixAutomaton, ROOT};
use crate::complexity;
use crate::error::{domain, Error, Result};
use crate::rational::Rational;
use crate::words::{complement, thue_morse, ThueMorseIndex, Word};

/// Sorted, duplicate-free set of 1-based positions in a word of known length.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AttractorSet {
    positions: Vec<usize>,
    word_length: usize,
}

impl AttractorSet {
    /// Sorts and deduplicates `positions`, rejecting any outside
    /// `1..=word_length`.
    pub fn new(mut positions: Vec<usize>, word_length: usize) -> Result<Self> {
        if let Some(&position) = positions.iter().find(|&&p| p == 0 || p > word_length) {
            return Err(Error::PositionOutOfRange { position, length: word_length });
        }
        positions.sort_unstable();
        positions.dedup();
        Ok(AttractorSet { positions, word_length })
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn word_length(&self) -> usize {
        self.word_length
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// The set with `position` removed.
    pub fn without(&self, position: usize) -> AttractorSet {
        AttractorSet {
            positions: self.positions.iter().copied().filter(|&p| p != position).collect(),
            word_length: self.word_length,
        }
    }
}

/// Outcome of a verification. On failure, `certificate` is a shortest
/// uncovered substring, the leftmost-first-occurring one among those.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttractorCheck {
    pub is_attractor: bool,
    pub certificate: Option<Word>,
}

/// Verifier bound to one word, reusable across many position sets.
///
/// Substring identity is the suffix-automaton pair `(state, length)`. For a
/// state with end-position set E, a substring of length L is covered iff
/// some `e` in E has an attractor position in `[e - L + 1, e]`, i.e.
/// `e - prev(e) + 1 <= L` where `prev(e)` is the largest position `<= e`.
/// Taking the minimum of that gap over E (pushed up the suffix-link tree)
/// and comparing it with the shortest length in the state decides every
/// substring of the state at once.
#[derive(Debug, Clone)]
pub struct AttractorChecker {
    word: Word,
    automaton: SuffixAutomaton,
    order: Vec<StateId>,
}

impl AttractorChecker {
    pub fn new(word: &Word) -> Self {
        let automaton = SuffixAutomaton::new(word.as_bytes());
        let order = automaton.by_decreasing_len();
        AttractorChecker { word: word.clone(), automaton, order }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// `sorted_positions` must be strictly increasing and in range.
    /// Returns `(start, length)` of the certificate if uncovered.
    fn uncovered(&self, sorted_positions: &[usize]) -> Option<(usize, usize)> {
        let n = self.word.len();
        let sa = &self.automaton;
        let mut gap = vec![usize::MAX; sa.len()];
        let mut next = sorted_positions.iter().peekable();
        let mut prev = None;
        for e in 1..=n {
            while let Some(&&p) = next.peek() {
                if p > e {
                    break;
                }
                prev = Some(p);
                next.next();
            }
            if let Some(p) = prev {
                gap[sa.prefix_state(e) as usize] = e - p + 1;
            }
        }
        for &v in &self.order {
            let link = sa.state(v).link.unwrap();
            gap[link as usize] = gap[link as usize].min(gap[v as usize]);
        }

        let mut worst: Option<(usize, usize)> = None;
        for &v in &self.order {
            let shortest = sa.min_len(v);
            if gap[v as usize] > shortest {
                let start = sa.state(v).first_end + 1 - shortest;
                let cand = (shortest, start);
                if worst.is_none_or(|w| cand < w) {
                    worst = Some(cand);
                }
            }
        }
        worst.map(|(len, start)| (start, len))
    }

    pub fn check(&self, gamma: &AttractorSet) -> Result<AttractorCheck> {
        if gamma.word_length() != self.word.len() {
            return Err(domain(format!(
                "attractor built for length {}, word has length {}",
                gamma.word_length(),
                self.word.len()
            )));
        }
        Ok(match self.uncovered(gamma.positions()) {
            None => AttractorCheck { is_attractor: true, certificate: None },
            Some((start, len)) => AttractorCheck {
                is_attractor: false,
                certificate: Some(Word::from(self.word.slice(start, start + len - 1))),
            },
        })
    }

    fn accepts(&self, sorted_positions: &[usize]) -> bool {
        self.uncovered(sorted_positions).is_none()
    }
}

/// Checks whether Γ is a string attractor of `w`.
pub fn is_attractor(w: &Word, gamma: &AttractorSet) -> Result<AttractorCheck> {
    AttractorChecker::new(w).check(gamma)
}

/// `K_n = {2^(n-2), 3·2^(n-3), 2^(n-1), 3·2^(n-2)}`, a size-4 attractor of
/// `t_n` for `n >= 4`.
pub fn k_attractor(n: u32) -> Result<AttractorSet> {
    if !(4..usize::BITS).contains(&n) {
        return Err(domain(format!("K_n is defined for 4 <= n < {}, got {n}", usize::BITS)));
    }
    let positions = vec![1 << (n - 2), 3 << (n - 3), 1 << (n - 1), 3 << (n - 2)];
    AttractorSet::new(positions, 1 << n)
}

/// `{2^(n-1) + 1} ∪ {3·2^(i-2) : i = 2..n}`, the size-`n` attractor of
/// `t_n` for `n >= 3` given by Mantaci et al.
pub fn mantaci_attractor(n: u32) -> Result<AttractorSet> {
    if !(3..usize::BITS).contains(&n) {
        return Err(domain(format!(
            "the Mantaci attractor is defined for 3 <= n < {}, got {n}",
            usize::BITS
        )));
    }
    let mut positions: Vec<usize> = (2..=n).map(|i| 3 << (i - 2)).collect();
    positions.push((1 << (n - 1)) + 1);
    AttractorSet::new(positions, 1 << n)
}

/// Per-size record of an exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeLog {
    pub size: usize,
    /// Subsets of this size that were verified.
    pub examined: u64,
    /// Whether an attractor of this size was found.
    pub found: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub minimum_size: usize,
    /// Lexicographically smallest attractor of minimum size.
    pub witness: AttractorSet,
    pub sets_examined: u64,
    /// δ(w); sizes below ⌈δ(w)⌉ are skipped.
    pub lower_bound_used: Rational,
    pub log: Vec<SizeLog>,
}

/// No attractor of size `<= size_cap` exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchExhausted {
    /// Every size up to this one is ruled out, either by enumeration or by
    /// the δ bound.
    pub largest_size_ruled_out: usize,
    pub sets_examined: u64,
    pub lower_bound_used: Rational,
    pub log: Vec<SizeLog>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SearchResult {
    Found(SearchOutcome),
    NotFound(SearchExhausted),
}

impl SearchResult {
    pub fn found(&self) -> Option<&SearchOutcome> {
        match self {
            SearchResult::Found(o) => Some(o),
            SearchResult::NotFound(_) => None,
        }
    }
}

/// Exact minimum attractor by exhaustive search.
///
/// Sizes run upward from `max(1, ⌈δ(w)⌉)` (γ >= δ holds for every word);
/// within a size, subsets are enumerated in lexicographic order and the
/// first verifying one is returned, so the witness is canonical.
///
/// Practical envelope: `|w| <= 64` for size 4 and `|w| <= 256` for size 3.
pub fn min_attractor(w: &Word, size_cap: usize) -> Result<SearchResult> {
    if w.is_empty() {
        return Err(domain("attractor search on the empty word"));
    }
    let delta = complexity::delta(w)?;
    let lower = ceil_usize(&delta);
    let checker = AttractorChecker::new(w);
    let n = w.len();
    let mut log = Vec::new();
    let mut total = 0u64;

    for size in lower.max(1)..=size_cap.min(n) {
        let mut examined = 0u64;
        let mut found = None;
        for_each_combination(n, size, |subset| {
            examined += 1;
            if checker.accepts(subset) {
                found = Some(subset.to_vec());
                false
            } else {
                true
            }
        });
        total += examined;
        log.push(SizeLog { size, examined, found: found.is_some() });
        if let Some(positions) = found {
            return Ok(SearchResult::Found(SearchOutcome {
                minimum_size: size,
                witness: AttractorSet::new(positions, n)?,
                sets_examined: total,
                lower_bound_used: delta,
                log,
            }));
        }
    }
    Ok(SearchResult::NotFound(SearchExhausted {
        largest_size_ruled_out: size_cap.max(lower - 1),
        sets_examined: total,
        lower_bound_used: delta,
        log,
    }))
}

/// Calls `visit` on each `size`-subset of `1..=n` in lexicographic order
/// until it returns `false`.
pub(crate) fn for_each_combination(n: usize, size: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    if size > n {
        return;
    }
    let mut c: Vec<usize> = (1..=size).collect();
    loop {
        if !visit(&c) {
            return;
        }
        // Rightmost slot that can still advance.
        let Some(k) = (0..size).rev().find(|&k| c[k] < n - size + k + 1) else {
            return;
        };
        c[k] += 1;
        for t in k + 1..size {
            c[t] = c[t - 1] + 1;
        }
    }
}

fn ceil_usize(r: &Rational) -> usize {
    r.ceil().try_into().expect("δ is bounded by the word length")
}

/// ⌈δ(w)⌉, a lower bound on γ(w).
pub fn gamma_lower_bound(w: &Word) -> Result<usize> {
    complexity::delta(w).map(|d| ceil_usize(&d))
}

/// The words `t_{n-1}·t̄_{n-1}` and `t_k·t̄_k`, `t̄_k·t_k` for `k = 0..=n-2`.
/// Every substring of `t_n` occurs in one of them across its center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterCoverSet {
    pub n: u32,
    pub members: Vec<Word>,
}

impl CenterCoverSet {
    /// 1-based center `|s| / 2` of a member.
    pub fn center(member: &Word) -> usize {
        member.len() / 2
    }
}

/// Materializes the center-cover set for `2 <= n <= cap`.
pub fn center_cover_set(n: u32) -> Result<CenterCoverSet> {
    if n < 2 {
        return Err(domain(format!("center-cover set needs n >= 2, got {n}")));
    }
    ThueMorseIndex::new(n)?;
    let block = |k: u32| -> Result<(Word, Word)> {
        let t = thue_morse(ThueMorseIndex::new(k)?);
        let c = complement(&t)?;
        Ok((t, c))
    };
    let (t, c) = block(n - 1)?;
    let mut members = vec![t.concat(&c)];
    for k in 0..=n - 2 {
        let (t, c) = block(k)?;
        members.push(t.concat(&c));
        members.push(c.concat(&t));
    }
    Ok(CenterCoverSet { n, members })
}

/// Checks that every distinct substring of `t_n` occurs in some member of
/// the center-cover set by an occurrence containing that member's center.
///
/// Each member's center-crossing substrings are located in the suffix
/// automaton of `t_n` and marked as `(state, length)`; the check passes when
/// every pair is marked. Memory is proportional to the number of distinct
/// substrings of `t_n`, so keep `n <= 10` or so.
pub fn verify_center_lemma(n: u32) -> Result<bool> {
    let cover = center_cover_set(n)?;
    let t = thue_morse(ThueMorseIndex::new(n)?);
    Ok(center_cover_holds(&t, &cover.members))
}

fn center_cover_holds(t: &Word, members: &[Word]) -> bool {
    let sa = SuffixAutomaton::new(t.as_bytes());
    let mut offset = vec![0usize; sa.len() + 1];
    for v in 1..sa.len() {
        let id = v as StateId;
        offset[v + 1] = offset[v] + (sa.state(id).len + 1 - sa.min_len(id));
    }
    let mut marked = vec![false; offset[sa.len()]];

    for s in members {
        let s = s.as_bytes();
        let center = s.len() / 2;
        for i in 1..=center {
            let mut state = ROOT;
            for j in i..=s.len() {
                let Some(next) = sa.transition(state, s[j - 1]) else {
                    break;
                };
                state = next;
                if j >= center {
                    marked[offset[state as usize] + (j - i + 1) - sa.min_len(state)] = true;
                }
            }
        }
    }
    marked.iter().all(|&m| m)
}
