//! Fixed-substitution dynamic program.
//!
//! For a fixed substitution `f`, `g(i, j)` is the largest number of
//! non-wildcarded positions over all ways to map `p_1..p_i` onto `t_1..t_j`.
//! Position `i` either keeps its letter, consuming exactly `f(p_i)`, or
//! becomes a wildcard consuming `k` letters for any admissible `k`:
//!
//! ```text
//! g(i, j) = max( g(i-1, j-|f(p_i)|) + 1   if t[j-|f(p_i)|+1..=j] = f(p_i),
//!                max_k g(i-1, j-k) )
//! ```
//!
//! The minimum number of wildcards is then `m - g(m, n)`.
//!
//! An empty pattern covers only the empty text, so `g(0, 0) = 0` and
//! `g(0, j)` is infeasible for `j > 0`.

use alloc::vec;
use alloc::vec::Vec;

use crate::instance::Instance;
use crate::witness::{MatchWitness, Substitution};
use crate::word::Letter;

const INFEASIBLE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    None,
    Keep,
    Wild(u32),
}

/// `(m+1) × (n+1)` table of similarities with traceback choices.
#[derive(Debug, Clone)]
pub struct SimilarityTable {
    m: usize,
    n: usize,
    cells: Vec<u32>,
    steps: Vec<Step>,
    ops: u64,
}

impl SimilarityTable {
    fn idx(&self, i: usize, j: usize) -> usize {
        i * (self.n + 1) + j
    }

    /// `g(i, j)`, or `None` when no mapping of `p_1..p_i` onto `t_1..t_j` exists.
    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        match self.cells[self.idx(i, j)] {
            INFEASIBLE => None,
            v => Some(v as usize),
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    /// Elementary comparisons performed while filling the table.
    pub fn operations(&self) -> u64 {
        self.ops
    }

    /// `m - g(m, n)` when the full table cell is feasible.
    pub fn min_wildcards(&self) -> Option<usize> {
        self.get(self.m, self.n).map(|g| self.m - g)
    }

    /// Rebuilds a witness from the recorded choices.
    fn traceback(&self, instance: &Instance, f: &Substitution) -> Option<MatchWitness> {
        self.get(self.m, self.n)?;
        let text = instance.text();
        let pattern = instance.pattern();
        let mut witness = MatchWitness::new(restrict(instance, f));
        let (mut i, mut j) = (self.m, self.n);
        while i > 0 {
            match self.steps[self.idx(i, j)] {
                Step::Keep => {
                    let len = f.get(pattern[i - 1]).map_or(0, <[Letter]>::len);
                    j -= len;
                }
                Step::Wild(k) => {
                    let k = k as usize;
                    witness.wildcards.insert(i, text[j - k..j].to_vec());
                    j -= k;
                }
                Step::None => unreachable!("feasible cell without a recorded step"),
            }
            i -= 1;
        }
        debug_assert_eq!(j, 0);
        Some(witness)
    }
}

fn restrict(instance: &Instance, f: &Substitution) -> Substitution {
    instance
        .pattern_letters()
        .into_iter()
        .filter_map(|l| f.get(l).map(|img| (l, img.to_vec())))
        .collect()
}

/// Fills the similarity table for `f`.
pub fn similarity(instance: &Instance, f: &Substitution) -> SimilarityTable {
    let text = instance.text();
    let pattern = instance.pattern();
    let (m, n) = (pattern.len(), text.len());
    let variant = instance.variant();
    let kmin = variant.min_wildcard_len();
    let wmax = instance.bounds().max_wildcard_len.cap(n);
    let images = f.to_dense(instance.sigma_p().len());

    let mut table = SimilarityTable {
        m,
        n,
        cells: vec![INFEASIBLE; (m + 1) * (n + 1)],
        steps: vec![Step::None; (m + 1) * (n + 1)],
        ops: 0,
    };
    table.cells[0] = 0;
    let width = n + 1;

    for i in 1..=m {
        let image = images[pattern[i - 1].index()].filter(|w| !w.is_empty());
        for j in 0..=n {
            let mut best = INFEASIBLE;
            let mut step = Step::None;

            if let Some(img) = image {
                let len = img.len();
                if len <= j {
                    let prev = table.cells[(i - 1) * width + j - len];
                    if prev != INFEASIBLE {
                        let mut equal = true;
                        for (a, b) in text[j - len..j].iter().zip(img) {
                            table.ops += 1;
                            if a != b {
                                equal = false;
                                break;
                            }
                        }
                        if equal {
                            best = prev + 1;
                            step = Step::Keep;
                        }
                    }
                }
            }

            for k in kmin..=wmax.min(j) {
                table.ops += 1;
                let prev = table.cells[(i - 1) * width + j - k];
                if prev != INFEASIBLE && (best == INFEASIBLE || prev > best) {
                    best = prev;
                    step = Step::Wild(k as u32);
                }
            }

            table.cells[i * width + j] = best;
            table.steps[i * width + j] = step;
        }
    }
    table
}

/// Outcome of deciding q-matching for one substitution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionDecision {
    /// Fewest wildcards any match using `f` needs; `None` if no match exists
    /// or `f` is not admissible.
    pub min_wildcards: Option<usize>,
    /// `min_wildcards <= q`.
    pub matched: bool,
    /// Present exactly when `matched`.
    pub witness: Option<MatchWitness>,
}

/// Whether `f` is usable at all: images of occurring letters respect the
/// letter-length bound and, for GPM, are pairwise distinct.
pub fn admissible(instance: &Instance, f: &Substitution) -> bool {
    let letters = instance.pattern_letters();
    let bound = instance.bounds().max_letter_len;
    if letters
        .iter()
        .filter_map(|&l| f.get(l))
        .any(|img| !bound.admits(img.len()))
    {
        return false;
    }
    if instance.variant().is_injective() {
        let mut domain = letters;
        domain.sort();
        return f.injectivity_clash(domain.into_iter()).is_none();
    }
    true
}

/// Decides whether the pattern q-matches the text using `f`.
pub fn decide_with_function(instance: &Instance, f: &Substitution) -> FunctionDecision {
    if !admissible(instance, f) {
        return FunctionDecision {
            min_wildcards: None,
            matched: false,
            witness: None,
        };
    }
    let table = similarity(instance, f);
    let min_wildcards = table.min_wildcards();
    let matched = min_wildcards.is_some_and(|w| w <= instance.budget());
    let witness = if matched { table.traceback(instance, f) } else { None };
    FunctionDecision {
        min_wildcards,
        matched,
        witness,
    }
}

/// `min_wildcards` only, skipping witness reconstruction.
pub fn min_wildcards_with_function(instance: &Instance, f: &Substitution) -> Option<usize> {
    if !admissible(instance, f) {
        return None;
    }
    similarity(instance, f).min_wildcards()
}
