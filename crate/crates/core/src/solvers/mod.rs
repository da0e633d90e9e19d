//! Complete solvers for Max-GFM / Max-GPM.
//!
//! * [`solve_bruteforce`]: memoized backtracking over pattern positions,
//!   independent of the dynamic program.
//! * [`solve_enum`]: every substitution over `Σ_t` up to length `L`, each
//!   checked with [`crate::dp`].
//! * [`solve_anchored`]: substitutions drawn from per-letter candidate
//!   substrings whose number depends only on `|Σ_p|`, `L`, `q` and `W`.
//! * [`solve_auto`]: picks one of the above from the measured parameters.
//!
//! Every solver reports `min_wildcards = Some(v)` exactly when the pattern
//! matches with `v <= q` wildcards and `v` is the fewest possible.
//!
//! Substitutions are partial: a letter all of whose occurrences are
//! wildcarded needs no image, and GPM injectivity is required only among
//! the letters that receive one.

mod anchored;
mod auto;
mod brute;
mod enumerate;
mod product;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::instance::Instance;
use crate::witness::MatchWitness;

pub use anchored::{candidate_ceiling, candidate_substrings, solve_anchored, Candidate, CandidateSet};
pub use auto::{choose_algorithm, effective_bounds, solve_auto, Dispatch};
pub use brute::solve_bruteforce;
pub use enumerate::solve_enum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Brute,
    Enum,
    Anchored,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Brute => "brute",
            Algorithm::Enum => "enum",
            Algorithm::Anchored => "anchored",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Substitutions handed to the dynamic program.
    pub substitutions: u64,
    pub dp_calls: u64,
    /// Search nodes expanded by the backtracking solver.
    pub nodes: u64,
}

impl SolveStats {
    fn absorb(&mut self, other: SolveStats) {
        self.substitutions += other.substitutions;
        self.dp_calls += other.dp_calls;
        self.nodes += other.nodes;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub algorithm: Algorithm,
    pub matched: bool,
    pub witness: Option<MatchWitness>,
    pub min_wildcards: Option<usize>,
    pub stats: SolveStats,
    /// Position of the witness's substitution in the enumeration order
    /// (option index per letter); used to merge sharded searches.
    pub rank: Option<Vec<u32>>,
}

impl SolveResult {
    fn unmatched(algorithm: Algorithm, stats: SolveStats) -> Self {
        SolveResult {
            algorithm,
            matched: false,
            witness: None,
            min_wildcards: None,
            stats,
            rank: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("algorithm not applicable: {0}")]
    NotApplicable(String),
    #[error("resource limit reached: more than {limit} {what}")]
    ResourceLimit { what: &'static str, limit: u64 },
}

/// Restricts a product search to the substitutions whose first-letter
/// option index is congruent to `index` modulo `count`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shard {
    pub index: usize,
    pub count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub max_nodes: u64,
    pub max_substitutions: u64,
    pub shard: Option<Shard>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            max_nodes: 50_000_000,
            max_substitutions: 20_000_000,
            shard: None,
        }
    }
}

/// Runs one solver by name.
pub fn solve_with(instance: &Instance, algorithm: Algorithm, config: &SolverConfig) -> Result<SolveResult, SolveError> {
    match algorithm {
        Algorithm::Brute => solve_bruteforce(instance, config),
        Algorithm::Enum => solve_enum(instance, config),
        Algorithm::Anchored => solve_anchored(instance, config),
    }
}

/// Smallest wildcard count over all matches, ignoring the declared budget.
///
/// `None` means no match exists with any number of wildcards.
pub fn min_wildcards(
    instance: &Instance,
    algorithm: Option<Algorithm>,
    config: &SolverConfig,
) -> Result<SolveResult, SolveError> {
    let relaxed = instance.with_budget(instance.pattern().len());
    match algorithm {
        Some(a) => solve_with(&relaxed, a, config),
        None => solve_auto(&relaxed, config),
    }
}

/// Combines the results of sharded runs of the same search.
///
/// Picks the fewest wildcards, breaking ties by enumeration rank so the
/// outcome equals an unsharded run.
pub fn merge_results(results: Vec<SolveResult>) -> Option<SolveResult> {
    let mut stats = SolveStats::default();
    let mut best: Option<SolveResult> = None;
    for r in results {
        stats.absorb(r.stats);
        let better = match (&best, r.min_wildcards) {
            (_, None) => false,
            (None, Some(_)) => true,
            (Some(b), Some(v)) => {
                let bv = b.min_wildcards.unwrap_or(usize::MAX);
                v < bv || (v == bv && r.rank < b.rank)
            }
        };
        if best.is_none() || better {
            best = Some(r);
        }
    }
    best.map(|mut b| {
        b.stats = stats;
        b
    })
}

#[cfg(test)]
mod tests;
