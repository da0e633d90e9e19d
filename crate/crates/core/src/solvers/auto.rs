//! Parameter-driven choice between the complete solvers.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::anchored::candidate_substrings;
use super::{solve_with, Algorithm, SolveError, SolveResult, SolverConfig};
use crate::instance::{Bound, Bounds, Instance};
use crate::word::Letter;

/// Largest product search the dispatcher hands to `enum` or `anchored`.
pub const PRODUCT_THRESHOLD: u128 = 100_000;
/// Longest text the dispatcher hands to the backtracking solver.
pub const BRUTE_MAX_TEXT: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dispatch {
    pub algorithm: Algorithm,
    /// Bounds implied by the text length, tightened into the instance.
    pub effective_bounds: Bounds,
    /// Substitution counts; the anchored one is only exact up to the
    /// threshold.
    pub enum_cost: Option<u128>,
    pub anchored_cost: Option<u128>,
}

/// Replaces unbounded or oversized `L` and `W` by what `|t|` allows.
///
/// Every other position consumes at least one letter (or `0` for an empty
/// wildcard), so no image in a match is longer than `n - (m - 1)·w_min`.
pub fn effective_bounds(instance: &Instance) -> Bounds {
    let n = instance.text().len();
    let m = instance.pattern().len();
    let wild_min = instance.variant().min_wildcard_len();
    let cap = n.saturating_sub((m - 1) * wild_min).max(1);
    let b = instance.bounds();
    let tighten = |bound: Bound| Bound::Finite(bound.cap(cap));
    Bounds {
        max_letter_len: tighten(b.max_letter_len),
        max_wildcard_len: tighten(b.max_wildcard_len),
        wildcard_budget: b.wildcard_budget,
    }
}

fn enum_cost(instance: &Instance, max_len: usize) -> u128 {
    let sigma = instance.sigma_t().len() as u128;
    let mut words: u128 = 0;
    let mut layer: u128 = 1;
    for _ in 0..max_len {
        layer = layer.saturating_mul(sigma);
        words = words.saturating_add(layer);
    }
    if instance.variant().is_injective() {
        words = words.saturating_add(1);
    }
    let letters = instance.parameters().size_p as u32;
    words.saturating_pow(letters)
}

/// Product of per-letter option counts, exact up to [`PRODUCT_THRESHOLD`]
/// and a lower bound beyond it (the scan stops there).
fn anchored_cost(instance: &Instance) -> Option<u128> {
    let text = instance.text();
    let q = instance.budget();
    let counts = instance.pattern_counts();
    let injective = instance.variant().is_injective();
    let mut cost: u128 = 1;
    for letter in instance.pattern_letters() {
        let set = candidate_substrings(instance, letter).ok()?;
        let images: BTreeSet<&[Letter]> = set.candidates.iter().map(|c| &text[c.start..c.start + c.len]).collect();
        let droppable = counts[letter.index()] <= q && (injective || images.is_empty());
        cost = cost.saturating_mul(images.len() as u128 + u128::from(droppable));
        if cost > PRODUCT_THRESHOLD {
            break;
        }
    }
    Some(cost)
}

/// Picks an algorithm, or explains which parameter blocks each one.
pub fn choose_algorithm(instance: &Instance) -> Result<Dispatch, SolveError> {
    let bounds = effective_bounds(instance);
    let tightened = instance.with_bounds(bounds);
    let max_len = bounds.max_letter_len.cap(usize::MAX);
    let enum_cost = Some(enum_cost(&tightened, max_len));
    let anchored_cost = if enum_cost.is_some_and(|c| c <= PRODUCT_THRESHOLD) {
        None
    } else {
        anchored_cost(&tightened)
    };
    let pick = |algorithm| Dispatch {
        algorithm,
        effective_bounds: bounds,
        enum_cost,
        anchored_cost,
    };
    if enum_cost.is_some_and(|c| c <= PRODUCT_THRESHOLD) {
        return Ok(pick(Algorithm::Enum));
    }
    if anchored_cost.is_some_and(|c| c <= PRODUCT_THRESHOLD) {
        return Ok(pick(Algorithm::Anchored));
    }
    let n = instance.text().len();
    if n <= BRUTE_MAX_TEXT {
        return Ok(pick(Algorithm::Brute));
    }

    let p = instance.parameters();
    let mut reasons: Vec<String> = Vec::new();
    reasons.push(format!(
        "enum: |Σ_t|={} with L={} gives more than {} substitutions",
        p.size_t, max_len, PRODUCT_THRESHOLD
    ));
    reasons.push(format!(
        "anchored: |Σ_p|={}, L={}, q={}, W={} give more than {} substitutions",
        p.size_p,
        max_len,
        instance.budget(),
        bounds.max_wildcard_len,
        PRODUCT_THRESHOLD
    ));
    reasons.push(format!("brute: |t|={} exceeds {}", n, BRUTE_MAX_TEXT));
    Err(SolveError::NotApplicable(reasons.join("; ")))
}

/// Solves with the algorithm chosen by [`choose_algorithm`].
pub fn solve_auto(instance: &Instance, config: &SolverConfig) -> Result<SolveResult, SolveError> {
    let dispatch = choose_algorithm(instance)?;
    let tightened = instance.with_bounds(dispatch.effective_bounds);
    solve_with(&tightened, dispatch.algorithm, config)
}
