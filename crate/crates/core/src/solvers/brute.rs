//! Memoized backtracking over pattern positions.
//!
//! At position `i` with text offset `j`, the letter `p_i` either keeps its
//! image (assigning one of length `1..=L` on first use) or becomes a
//! wildcard over any admissible segment. The fewest wildcards needed to
//! finish depends only on `(i, j)` and the images of letters that still
//! occur later (plus, for GPM, the images already taken that still occur in
//! the rest of the text), which is the memo key.
//!
//! A letter whose image is fixed needs a wildcard at every later occurrence
//! the rest of the text cannot supply a fresh copy of its image for; states
//! where these shortfalls exceed the budget are cut.

use alloc::vec;
use alloc::vec::Vec;
use hashbrown::HashMap;

use super::{Algorithm, SolveError, SolveResult, SolveStats, SolverConfig};
use crate::instance::Instance;
use crate::witness::{MatchWitness, Substitution};
use crate::word::Letter;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy)]
enum Choice {
    Keep,
    Assign(u32),
    Wild(u32),
}

#[derive(Debug, Clone, Copy)]
enum Memo {
    /// Fewest wildcards for the rest, and the move achieving it.
    Exact(u32, Choice),
    /// No completion with at most this many wildcards.
    Fail(u32),
}

struct LimitHit;

struct Search<'a> {
    text: &'a [Letter],
    pattern: &'a [Letter],
    injective: bool,
    letter_max: usize,
    wild_min: usize,
    wild_max: usize,
    /// Longest step any position may take, if bounded.
    step_max: Option<usize>,
    /// Last pattern index of every letter.
    last: Vec<usize>,
    /// Letters occurring in the pattern, by id.
    letters: Vec<u32>,
    images: Vec<u32>,
    interned: HashMap<&'a [Letter], u32>,
    words: Vec<&'a [Letter]>,
    /// Start of the last occurrence of each interned word in the text.
    last_start: Vec<usize>,
    /// Per interned word, most non-overlapping occurrences in `t[j..]`.
    supply: Vec<Vec<u32>>,
    /// `demand[i][c]`: occurrences of letter `c` in `p[i..]`.
    demand: Vec<Vec<u32>>,
    in_use: Vec<u32>,
    memo: HashMap<Vec<u32>, Memo>,
    nodes: u64,
    max_nodes: u64,
}

impl<'a> Search<'a> {
    fn new(instance: &'a Instance, config: &SolverConfig) -> Self {
        let text = instance.text();
        let pattern = instance.pattern();
        let n = text.len();
        let bounds = instance.bounds();
        let variant = instance.variant();
        let size = instance.sigma_p().len();
        let mut last = vec![usize::MAX; size];
        for (i, l) in pattern.iter().enumerate() {
            last[l.index()] = i;
        }
        let mut letters: Vec<u32> = instance.pattern_letters().iter().map(|l| l.0).collect();
        letters.sort_unstable();
        let step_max = match (bounds.max_letter_len, bounds.max_wildcard_len) {
            (crate::Bound::Finite(a), crate::Bound::Finite(b)) => Some(a.max(b)),
            _ => None,
        };
        let mut demand = vec![vec![0u32; size]; pattern.len() + 1];
        for i in (0..pattern.len()).rev() {
            demand[i] = demand[i + 1].clone();
            demand[i][pattern[i].index()] += 1;
        }
        Search {
            text,
            pattern,
            injective: variant.is_injective(),
            letter_max: bounds.max_letter_len.cap(n),
            wild_min: variant.min_wildcard_len(),
            wild_max: bounds.max_wildcard_len.cap(n),
            step_max,
            last,
            letters,
            images: vec![NONE; size],
            interned: HashMap::new(),
            words: Vec::new(),
            last_start: Vec::new(),
            supply: Vec::new(),
            demand,
            in_use: Vec::new(),
            memo: HashMap::new(),
            nodes: 0,
            max_nodes: config.max_nodes,
        }
    }

    fn intern(&mut self, start: usize, len: usize) -> u32 {
        let w = &self.text[start..start + len];
        if let Some(&id) = self.interned.get(w) {
            return id;
        }
        let id = self.words.len() as u32;
        self.interned.insert(w, id);
        self.words.push(w);
        let last = (start..=self.text.len() - len)
            .rev()
            .find(|&s| &self.text[s..s + len] == w)
            .unwrap_or(start);
        self.last_start.push(last);
        let n = self.text.len();
        let mut supply = vec![0u32; n + 1];
        for s in (0..n).rev() {
            supply[s] = supply[s + 1];
            if s + len <= n && &self.text[s..s + len] == w {
                supply[s] = supply[s].max(supply[s + len] + 1);
            }
        }
        self.supply.push(supply);
        self.in_use.push(0);
        id
    }

    fn key(&self, i: usize, j: usize) -> Vec<u32> {
        let mut key = Vec::with_capacity(self.letters.len() + 2);
        key.push(i as u32);
        key.push(j as u32);
        let mut retired = Vec::new();
        for &c in &self.letters {
            let img = self.images[c as usize];
            if self.last[c as usize] >= i {
                key.push(img);
            } else if self.injective && img != NONE && self.last_start[img as usize] >= j {
                // images that cannot recur in t[j..] block no future choice
                retired.push(img);
            }
        }
        retired.sort_unstable();
        key.extend(retired);
        key
    }

    /// Wildcards forced by letters whose image is too rare in `t[j..]`.
    fn shortfall(&self, i: usize, j: usize) -> usize {
        let mut need = 0;
        for &c in &self.letters {
            let img = self.images[c as usize];
            if img != NONE && self.last[c as usize] >= i {
                let want = self.demand[i][c as usize];
                let have = self.supply[img as usize][j];
                need += want.saturating_sub(have) as usize;
            }
        }
        need
    }

    /// Fewest wildcards completing the match from `(i, j)`, if at most `budget`.
    fn go(&mut self, i: usize, j: usize, budget: usize) -> Result<Option<usize>, LimitHit> {
        let (m, n) = (self.pattern.len(), self.text.len());
        if i == m {
            return Ok((j == n).then_some(0));
        }
        let (rest_p, rest_t) = (m - i, n - j);
        if self.wild_min > 0 && rest_t < rest_p {
            return Ok(None);
        }
        if self.step_max.is_some_and(|s| rest_t > rest_p * s) {
            return Ok(None);
        }

        if self.shortfall(i, j) > budget {
            return Ok(None);
        }

        let key = self.key(i, j);
        match self.memo.get(&key) {
            Some(&Memo::Exact(v, _)) => return Ok((v as usize <= budget).then_some(v as usize)),
            Some(&Memo::Fail(b)) if budget <= b as usize => return Ok(None),
            _ => {}
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(LimitHit);
        }

        let c = self.pattern[i].index();
        let mut best: Option<(usize, Choice)> = None;
        let current = self.images[c];

        if current != NONE {
            let img = self.words[current as usize];
            if self.text[j..].starts_with(img) {
                if let Some(v) = self.go(i + 1, j + img.len(), budget)? {
                    best = Some((v, Choice::Keep));
                }
            }
        } else {
            for len in 1..=self.letter_max.min(rest_t) {
                let limit = match best {
                    Some((0, _)) => break,
                    Some((v, _)) => v - 1,
                    None => budget,
                };
                let id = self.intern(j, len);
                if self.injective && self.in_use[id as usize] > 0 {
                    continue;
                }
                self.images[c] = id;
                self.in_use[id as usize] += 1;
                let r = self.go(i + 1, j + len, limit);
                self.in_use[id as usize] -= 1;
                self.images[c] = NONE;
                if let Some(v) = r? {
                    best = Some((v, Choice::Assign(len as u32)));
                }
            }
        }

        for len in self.wild_min..=self.wild_max.min(rest_t) {
            let limit = match best {
                Some((0, _)) => break,
                Some((v, _)) => v - 1,
                None => budget,
            };
            if limit == 0 {
                break;
            }
            if current != NONE {
                let img = self.words[current as usize];
                if img.len() == len && self.text[j..].starts_with(img) {
                    // same segment as keeping the letter, one wildcard dearer
                    continue;
                }
            }
            if let Some(v) = self.go(i + 1, j + len, limit - 1)? {
                best = Some((v + 1, Choice::Wild(len as u32)));
            }
        }

        let entry = match best {
            Some((v, choice)) => Memo::Exact(v as u32, choice),
            None => Memo::Fail(budget as u32),
        };
        self.memo.insert(key, entry);
        Ok(best.map(|(v, _)| v))
    }

    fn reconstruct(&mut self) -> MatchWitness {
        self.images.iter_mut().for_each(|x| *x = NONE);
        let mut witness = MatchWitness::default();
        let mut j = 0;
        for i in 0..self.pattern.len() {
            let key = self.key(i, j);
            let choice = match self.memo.get(&key) {
                Some(Memo::Exact(_, choice)) => *choice,
                _ => unreachable!("optimal path leaves the memo"),
            };
            let c = self.pattern[i].index();
            match choice {
                Choice::Keep => j += self.words[self.images[c] as usize].len(),
                Choice::Assign(len) => {
                    let len = len as usize;
                    self.images[c] = self.intern(j, len);
                    j += len;
                }
                Choice::Wild(len) => {
                    let len = len as usize;
                    witness.wildcards.insert(i + 1, self.text[j..j + len].to_vec());
                    j += len;
                }
            }
        }
        witness.substitution = self
            .letters
            .iter()
            .filter(|&&c| self.images[c as usize] != NONE)
            .map(|&c| (Letter(c), self.words[self.images[c as usize] as usize].to_vec()))
            .collect::<Substitution>();
        witness
    }
}

/// Exhaustive search for a witness with the fewest wildcards (at most `q`).
///
/// Does not use the dynamic program, so it serves as an independent oracle.
pub fn solve_bruteforce(instance: &Instance, config: &SolverConfig) -> Result<SolveResult, SolveError> {
    let mut search = Search::new(instance, config);
    let outcome = search.go(0, 0, instance.budget());
    let stats = SolveStats {
        nodes: search.nodes,
        ..SolveStats::default()
    };
    match outcome {
        Err(LimitHit) => Err(SolveError::ResourceLimit {
            what: "search nodes",
            limit: config.max_nodes,
        }),
        Ok(None) => Ok(SolveResult::unmatched(Algorithm::Brute, stats)),
        Ok(Some(v)) => {
            let witness = search.reconstruct();
            debug_assert_eq!(witness.wildcard_count(), v);
            Ok(SolveResult {
                algorithm: Algorithm::Brute,
                matched: true,
                witness: Some(witness),
                min_wildcards: Some(v),
                stats,
                rank: None,
            })
        }
    }
}
