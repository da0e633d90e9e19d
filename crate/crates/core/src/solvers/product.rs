//! Cartesian-product search over per-letter image options, each full
//! substitution checked with the dynamic program.

use alloc::vec::Vec;

use super::{Algorithm, SolveError, SolveResult, SolveStats, SolverConfig};
use crate::dp;
use crate::instance::Instance;
use crate::witness::{MatchWitness, Substitution};
use crate::word::{Letter, Word};

/// Image options for one letter; `None` leaves the letter without an image
/// (all its occurrences must then be wildcards).
pub(super) struct LetterOptions {
    pub letter: Letter,
    pub options: Vec<Option<Word>>,
}

struct Best {
    wildcards: usize,
    witness: MatchWitness,
    rank: Vec<u32>,
}

struct Product<'a> {
    instance: &'a Instance,
    letters: &'a [LetterOptions],
    config: &'a SolverConfig,
    injective: bool,
    f: Substitution,
    used: Vec<&'a [Letter]>,
    rank: Vec<u32>,
    stats: SolveStats,
    best: Option<Best>,
}

enum Stop {
    Optimal,
    Limit,
}

impl<'a> Product<'a> {
    fn descend(&mut self, depth: usize) -> Result<(), Stop> {
        if depth == self.letters.len() {
            return self.evaluate();
        }
        let letters = self.letters;
        let entry = &letters[depth];
        for (idx, option) in entry.options.iter().enumerate() {
            if depth == 0 {
                if let Some(shard) = self.config.shard {
                    if idx % shard.count != shard.index {
                        continue;
                    }
                }
            }
            match option {
                Some(img) => {
                    if self.injective && self.used.contains(&img.as_slice()) {
                        continue;
                    }
                    self.used.push(img);
                    self.f.insert(entry.letter, img.clone());
                    self.rank.push(idx as u32);
                    let r = self.descend(depth + 1);
                    self.rank.pop();
                    self.f.remove(entry.letter);
                    self.used.pop();
                    r?;
                }
                None => {
                    self.rank.push(idx as u32);
                    let r = self.descend(depth + 1);
                    self.rank.pop();
                    r?;
                }
            }
        }
        Ok(())
    }

    fn evaluate(&mut self) -> Result<(), Stop> {
        self.stats.substitutions += 1;
        if self.stats.substitutions > self.config.max_substitutions {
            return Err(Stop::Limit);
        }
        self.stats.dp_calls += 1;
        let Some(v) = dp::min_wildcards_with_function(self.instance, &self.f) else {
            return Ok(());
        };
        if v > self.instance.budget() || self.best.as_ref().is_some_and(|b| b.wildcards <= v) {
            return Ok(());
        }
        let decision = dp::decide_with_function(self.instance, &self.f);
        let witness = decision.witness.expect("matched function yields a witness");
        self.best = Some(Best {
            wildcards: v,
            witness,
            rank: self.rank.clone(),
        });
        if v == 0 {
            return Err(Stop::Optimal);
        }
        Ok(())
    }
}

pub(super) fn search(
    instance: &Instance,
    letters: &[LetterOptions],
    algorithm: Algorithm,
    config: &SolverConfig,
) -> Result<SolveResult, SolveError> {
    let mut product = Product {
        instance,
        letters,
        config,
        injective: instance.variant().is_injective(),
        f: Substitution::new(),
        used: Vec::new(),
        rank: Vec::new(),
        stats: SolveStats::default(),
        best: None,
    };
    match product.descend(0) {
        Err(Stop::Limit) => {
            return Err(SolveError::ResourceLimit {
                what: "substitutions",
                limit: config.max_substitutions,
            })
        }
        Ok(()) | Err(Stop::Optimal) => {}
    }
    let stats = product.stats;
    Ok(match product.best {
        None => SolveResult::unmatched(algorithm, stats),
        Some(b) => SolveResult {
            algorithm,
            matched: true,
            witness: Some(b.witness),
            min_wildcards: Some(b.wildcards),
            stats,
            rank: Some(b.rank),
        },
    })
}
