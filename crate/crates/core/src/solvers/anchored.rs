//! Candidate images anchored at bounded offsets.
//!
//! Take a letter `c` and the first occurrence of `c` that survives as a
//! letter; at most `q` earlier occurrences can be wildcards, so it is one of
//! the first `q + 1`. Its image starts at offset
//!
//! ```text
//! c_s = Σ_b (#(b, prefix) - d_b) · |f(b)|  +  (total length of the wildcards in the prefix)
//! ```
//!
//! where `d_b` counts the wildcarded occurrences of `b` in the prefix. With
//! `|f(b)| ≤ L`, `Σ d_b ≤ q` and wildcard lengths at most `W`, the number of
//! possible offsets depends only on `|Σ_p|`, `L`, `q` and `W`, and so does
//! the number of candidate images per letter.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::product::{search, LetterOptions};
use super::{Algorithm, SolveError, SolveResult, SolverConfig};
use crate::instance::Instance;
use crate::word::{Letter, Word};

/// A text segment `t[start..start + len]` (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Candidate {
    pub start: usize,
    pub len: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSet {
    pub letter: Letter,
    pub candidates: BTreeSet<Candidate>,
}

impl CandidateSet {
    /// Distinct images, shortest first then lexicographic.
    pub fn images(&self, text: &[Letter]) -> Vec<Word> {
        let mut words: Vec<Word> = self
            .candidates
            .iter()
            .map(|c| text[c.start..c.start + c.len].to_vec())
            .collect();
        words.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        words.dedup();
        words
    }

    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }
}

fn bounded(instance: &Instance) -> Result<(usize, usize), SolveError> {
    let bounds = instance.bounds();
    match (bounds.max_letter_len.finite(), bounds.max_wildcard_len.finite()) {
        (Some(l), Some(w)) => Ok((l, w)),
        (None, _) => Err(SolveError::NotApplicable(
            "anchored candidates need a bound on letter image length".into(),
        )),
        (_, None) => Err(SolveError::NotApplicable(
            "anchored candidates need a bound on wildcard image length".into(),
        )),
    }
}

/// Over-approximates the segments the letter `c` can be mapped to in any
/// match with at most `q` wildcards.
pub fn candidate_substrings(instance: &Instance, c: Letter) -> Result<CandidateSet, SolveError> {
    let (max_len, wild_max) = bounded(instance)?;
    let q = instance.budget();
    let n = instance.text().len();
    let wild_min = instance.variant().min_wildcard_len();
    let pattern = instance.pattern();
    let size = instance.sigma_p().len();

    let mut candidates = BTreeSet::new();
    let occurrences = pattern.iter().enumerate().filter(|(_, l)| **l == c).map(|(i, _)| i);
    for (earlier, pos) in occurrences.take(q + 1).enumerate() {
        let mut counts = alloc::vec![0usize; size];
        for l in &pattern[..pos] {
            counts[l.index()] += 1;
        }

        // reachable (wildcards used, letter-image length) pairs
        let mut reach: BTreeSet<(usize, usize)> = BTreeSet::new();
        reach.insert((earlier, 0));
        for (b, &count) in counts.iter().enumerate() {
            if count == 0 || b == c.index() {
                continue;
            }
            let mut next = BTreeSet::new();
            for &(d, s) in &reach {
                for deleted in 0..=count.min(q - d) {
                    let kept = count - deleted;
                    if kept == 0 {
                        next.insert((d + deleted, s));
                        continue;
                    }
                    for len in 1..=max_len {
                        let s2 = s + kept * len;
                        if s2 < n {
                            next.insert((d + deleted, s2));
                        }
                    }
                }
            }
            reach = next;
        }

        for &(d, s) in &reach {
            for extra in d * wild_min..=d * wild_max {
                let start = s + extra;
                if start >= n {
                    break;
                }
                for len in 1..=max_len.min(n - start) {
                    candidates.insert(Candidate { start, len });
                }
            }
        }
    }
    Ok(CandidateSet { letter: c, candidates })
}

/// `(q+1) · L^{|Σ_p|} · (q+1)^{|Σ_p|} · (qW+1) · L`, saturating.
pub fn candidate_ceiling(instance: &Instance) -> Option<u128> {
    let (l, w) = bounded(instance).ok()?;
    let q = instance.budget() as u128;
    let sp = instance.parameters().size_p as u32;
    let (l, w) = (l as u128, w as u128);
    Some(
        (q + 1)
            .saturating_mul(l.saturating_pow(sp))
            .saturating_mul((q + 1).saturating_pow(sp))
            .saturating_mul(q.saturating_mul(w) + 1)
            .saturating_mul(l),
    )
}

pub(super) fn anchored_options(instance: &Instance) -> Result<Vec<LetterOptions>, SolveError> {
    let q = instance.budget();
    let counts = instance.pattern_counts();
    let injective = instance.variant().is_injective();
    instance
        .pattern_letters()
        .into_iter()
        .map(|letter| {
            let set = candidate_substrings(instance, letter)?;
            let images = set.images(instance.text());
            let droppable = counts[letter.index()] <= q && (injective || images.is_empty());
            let mut options: Vec<Option<Word>> = images.into_iter().map(Some).collect();
            if droppable {
                options.push(None);
            }
            Ok(LetterOptions { letter, options })
        })
        .collect()
}

pub fn solve_anchored(instance: &Instance, config: &SolverConfig) -> Result<SolveResult, SolveError> {
    let letters = anchored_options(instance)?;
    search(instance, &letters, Algorithm::Anchored, config)
}
