//! Suffix automaton (DAWG) over byte strings.
//!
//! Each non-root state stands for the set of substrings sharing one endpos
//! set; those substrings have lengths `len(link) + 1 ..= len`. Distinct
//! substrings are therefore in bijection with pairs `(state, length)`, which
//! is what the complexity profile, the attractor checker and the LZ parser
//! use as exact substring identity.

pub type StateId = u32;

pub const ROOT: StateId = 0;

#[derive(Debug, Clone)]
pub struct State {
    /// Length of the longest substring in the state.
    pub len: usize,
    /// Suffix link; `None` only for the root.
    pub link: Option<StateId>,
    /// 1-based end position of the first occurrence of the state's substrings.
    pub first_end: usize,
    next: Vec<(u8, StateId)>,
}

#[derive(Debug, Clone)]
pub struct SuffixAutomaton {
    states: Vec<State>,
    /// `prefix_state[e]` is the state of the prefix `w[1..e]`, for `e >= 1`.
    prefix_state: Vec<StateId>,
}

impl SuffixAutomaton {
    pub fn new(text: &[u8]) -> Self {
        let mut states = Vec::with_capacity(2 * text.len().max(1));
        states.push(State { len: 0, link: None, first_end: 0, next: Vec::new() });
        let mut prefix_state = Vec::with_capacity(text.len() + 1);
        prefix_state.push(ROOT);
        let mut last = ROOT;

        for (k, &c) in text.iter().enumerate() {
            let cur = states.len() as StateId;
            states.push(State {
                len: states[last as usize].len + 1,
                link: None,
                first_end: k + 1,
                next: Vec::new(),
            });
            let mut p = Some(last);
            while let Some(pp) = p {
                if get(&states[pp as usize].next, c).is_some() {
                    break;
                }
                states[pp as usize].next.push((c, cur));
                p = states[pp as usize].link;
            }
            match p {
                None => states[cur as usize].link = Some(ROOT),
                Some(pp) => {
                    let q = get(&states[pp as usize].next, c).unwrap();
                    if states[pp as usize].len + 1 == states[q as usize].len {
                        states[cur as usize].link = Some(q);
                    } else {
                        let clone = states.len() as StateId;
                        let mut cloned = states[q as usize].clone();
                        cloned.len = states[pp as usize].len + 1;
                        states.push(cloned);
                        let mut r = Some(pp);
                        while let Some(rr) = r {
                            match slot(&mut states[rr as usize].next, c) {
                                Some(t) if *t == q => *t = clone,
                                _ => break,
                            }
                            r = states[rr as usize].link;
                        }
                        states[q as usize].link = Some(clone);
                        states[cur as usize].link = Some(clone);
                    }
                }
            }
            last = cur;
            prefix_state.push(cur);
        }
        SuffixAutomaton { states, prefix_state }
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.len() == 1
    }

    pub fn state(&self, id: StateId) -> &State {
        &self.states[id as usize]
    }

    pub fn transition(&self, from: StateId, c: u8) -> Option<StateId> {
        get(&self.states[from as usize].next, c)
    }

    /// Length of the indexed text.
    pub fn text_len(&self) -> usize {
        self.prefix_state.len() - 1
    }

    /// State of the prefix ending at 1-based position `end`.
    pub fn prefix_state(&self, end: usize) -> StateId {
        self.prefix_state[end]
    }

    /// Non-root states ordered by decreasing `len`, so that every state
    /// precedes its suffix link.
    pub fn by_decreasing_len(&self) -> Vec<StateId> {
        let mut order: Vec<StateId> = (1..self.states.len() as StateId).collect();
        order.sort_unstable_by_key(|&s| std::cmp::Reverse(self.states[s as usize].len));
        order
    }

    /// Length of the shortest substring in state `id`.
    pub fn min_len(&self, id: StateId) -> usize {
        self.state(id).link.map_or(0, |l| self.state(l).len + 1)
    }

    /// `counts[k-1]` is the number of distinct substrings of length `k`,
    /// for `k = 1..=text_len`.
    pub fn distinct_per_length(&self) -> Vec<u64> {
        let n = self.text_len();
        let mut diff = vec![0i64; n + 2];
        for s in &self.states[1..] {
            diff[self.state(s.link.unwrap()).len + 1] += 1;
            diff[s.len + 1] -= 1;
        }
        let mut acc = 0i64;
        (1..=n)
            .map(|k| {
                acc += diff[k];
                acc as u64
            })
            .collect()
    }

    /// Walks `pattern` from the root.
    pub fn find(&self, pattern: &[u8]) -> Option<StateId> {
        pattern
            .iter()
            .try_fold(ROOT, |s, &c| self.transition(s, c))
    }
}

fn get(next: &[(u8, StateId)], c: u8) -> Option<StateId> {
    next.iter().find(|(k, _)| *k == c).map(|&(_, t)| t)
}

fn slot(next: &mut [(u8, StateId)], c: u8) -> Option<&mut StateId> {
    next.iter_mut().find(|(k, _)| *k == c).map(|(_, t)| t)
}
