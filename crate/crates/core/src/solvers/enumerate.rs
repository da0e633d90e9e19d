//! Enumeration of all substitutions into `Σ_t^{≤L}`.
//!
//! There are at most `(Σ_{l≤L} |Σ_t|^l)^{|Σ_p|}` of them, each checked in
//! polynomial time, so this is fixed-parameter tractable in `|Σ_t|`, `|Σ_p|`
//! and `L`.

use alloc::vec;
use alloc::vec::Vec;

use super::product::{search, LetterOptions};
use super::{Algorithm, SolveError, SolveResult, SolverConfig};
use crate::instance::Instance;
use crate::word::{Letter, Word};

/// All words over `alphabet_len` letters with length in `1..=max_len`,
/// shortest first, lexicographic by letter id within a length.
pub(crate) fn words_up_to(alphabet_len: usize, max_len: usize, limit: u64) -> Option<Vec<Word>> {
    let mut out = Vec::new();
    let mut layer: Vec<Word> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * alphabet_len);
        for w in &layer {
            for c in 0..alphabet_len {
                let mut v = w.clone();
                v.push(Letter(c as u32));
                next.push(v);
                if (out.len() + next.len()) as u64 > limit {
                    return None;
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    Some(out)
}

pub fn solve_enum(instance: &Instance, config: &SolverConfig) -> Result<SolveResult, SolveError> {
    let Some(max_len) = instance.bounds().max_letter_len.finite() else {
        return Err(SolveError::NotApplicable(
            "enumeration needs a bound on letter image length".into(),
        ));
    };
    let words =
        words_up_to(instance.sigma_t().len(), max_len, config.max_substitutions).ok_or(SolveError::ResourceLimit {
            what: "candidate images per letter",
            limit: config.max_substitutions,
        })?;
    let injective = instance.variant().is_injective();
    let letters: Vec<LetterOptions> = instance
        .pattern_letters()
        .into_iter()
        .map(|letter| {
            let mut options: Vec<Option<Word>> = words.iter().cloned().map(Some).collect();
            if injective {
                options.push(None);
            }
            LetterOptions { letter, options }
        })
        .collect();
    search(instance, &letters, Algorithm::Enum, config)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_are_length_then_lex_ordered() {
        let w = words_up_to(2, 2, 100).unwrap();
        let ids: Vec<Vec<u32>> = w.iter().map(|w| w.iter().map(|l| l.0).collect()).collect();
        assert_eq!(ids, [vec![0], vec![1], vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn word_generation_respects_limit() {
        assert!(words_up_to(3, 3, 10).is_none());
        assert_eq!(words_up_to(3, 3, 39).unwrap().len(), 39);
    }
}
