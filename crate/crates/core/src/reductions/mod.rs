//! Instances built from Multicolored Clique.
//!
//! Each generator takes a normalized k-partite graph and returns an instance
//! that is matched (under the returned budget and bounds) iff the graph has
//! a clique with one vertex per part. Given such a clique, the same layout
//! also yields the intended witness.

mod graph;
mod layout;
mod mobile;
mod occtmax;
mod qmark;

#[cfg(test)]
mod tests;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

pub use graph::{
    find_clique_bruteforce, is_clique, normalize_graph, CliqueLimit, GraphError, MulticoloredGraph, Vertex,
};
pub use layout::Section;

use crate::instance::{Bound, Bounds, Instance, InstanceError, ProblemKind, Variant};
use crate::witness::{verify_witness, MatchWitness, Substitution, Violation};
use layout::{unique_pieces, Choice, Ctx, Layout};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ReductionKind {
    /// Many short wildcards, with empty wildcard images allowed.
    Qmark,
    /// No wildcards, unbounded images, few occurrences per letter.
    Mobile1,
    /// Wildcards of unbounded length, images of length one.
    Mobile2,
    /// No wildcards, images of length at most two.
    OcctMax,
    /// Few long wildcards, images of length one.
    QmarkSize,
}

impl ReductionKind {
    pub const ALL: [ReductionKind; 5] = [
        ReductionKind::Qmark,
        ReductionKind::Mobile1,
        ReductionKind::Mobile2,
        ReductionKind::OcctMax,
        ReductionKind::QmarkSize,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ReductionKind::Qmark => "qmark",
            ReductionKind::Mobile1 => "mobile1",
            ReductionKind::Mobile2 => "mobile2",
            ReductionKind::OcctMax => "occtmax",
            ReductionKind::QmarkSize => "qmarksize",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    /// Whether the clique is read off vertex letters rather than edge
    /// letters.
    fn decodes_vertices(self) -> bool {
        matches!(self, ReductionKind::Qmark | ReductionKind::QmarkSize)
    }
}

impl core::fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReductionError {
    #[error("need at least two parts, got {0}")]
    TooFewParts(usize),
    #[error("graph is not normalized: part sizes or per-pair edge counts differ")]
    NotNormalized,
    #[error("graph has no edges between some pair of parts")]
    NoEdges,
    #[error("the given vertices are not a multicolored clique")]
    NotAClique,
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error("forward witness does not reproduce the layout at group {0}")]
    Misaligned(usize),
    #[error("forward witness is rejected: {0}")]
    Rejected(Violation),
}

/// What [`extract_clique`] needs to read a clique off a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeHints {
    /// `V_i` per part, when vertices are named directly.
    pub vertex_letters: Vec<String>,
    /// `E_{i,j}` per pair of parts `i < j`.
    pub edge_letters: Vec<((usize, usize), String)>,
    pub vertex_tokens: BTreeMap<String, Vertex>,
    pub edge_tokens: BTreeMap<String, (Vertex, Vertex)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub kind: ReductionKind,
    /// Budget and bounds are already set on the instance.
    pub instance: Instance,
    pub budget: usize,
    pub expected_bounds: Bounds,
    pub decode_hints: DecodeHints,
    /// Named parts of text and pattern (`t0`, `t1`, `prefix`, `blocks`, ...).
    pub sections: Vec<Section>,
}

impl ReductionOutput {
    pub fn section(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name == name)
    }
}

fn check(g: &MulticoloredGraph) -> Result<(usize, usize), ReductionError> {
    if g.k() < 2 {
        return Err(ReductionError::TooFewParts(g.k()));
    }
    let (n, m) = g.uniform_sizes().ok_or(ReductionError::NotNormalized)?;
    if m == 0 {
        return Err(ReductionError::NoEdges);
    }
    Ok((n, m))
}

fn layout(kind: ReductionKind, ctx: &Ctx, choice: Option<&Choice>) -> Layout {
    match kind {
        ReductionKind::Qmark => qmark::questionmark(ctx, choice),
        ReductionKind::Mobile1 => mobile::mobile(ctx, choice, false),
        ReductionKind::Mobile2 => mobile::mobile(ctx, choice, true),
        ReductionKind::OcctMax => occtmax::occt_max(ctx, choice),
        ReductionKind::QmarkSize => qmark::questionmarksize(ctx, choice),
    }
}

fn settings(kind: ReductionKind, k: usize, m: usize) -> (Bounds, bool) {
    let bounds = |l, w, q| Bounds {
        max_letter_len: l,
        max_wildcard_len: w,
        wildcard_budget: q,
    };
    use Bound::{Finite, Unbounded};
    match kind {
        ReductionKind::Qmark => (bounds(Finite(1), Finite(2), qmark::questionmark_budget(k, m)), true),
        ReductionKind::Mobile1 => (bounds(Unbounded, Finite(1), 0), false),
        ReductionKind::Mobile2 => (bounds(Finite(1), Unbounded, mobile::mobile2_budget(k)), false),
        ReductionKind::OcctMax => (bounds(Finite(2), Finite(1), 0), false),
        ReductionKind::QmarkSize => (bounds(Finite(1), Unbounded, qmark::size_budget(k)), false),
    }
}

/// Builds the instance of `kind` for a normalized graph.
pub fn reduce(
    kind: ReductionKind,
    g: &MulticoloredGraph,
    problem: ProblemKind,
) -> Result<ReductionOutput, ReductionError> {
    let (n, m) = check(g)?;
    let ctx = Ctx::new(g, n, m);
    let lay = layout(kind, &ctx, None);
    let (bounds, empty_wildcards) = settings(kind, g.k(), m);
    let variant = Variant {
        kind: problem,
        empty_wildcards,
    };
    let text: Vec<&str> = lay.text.iter().map(String::as_str).collect();
    let pattern: Vec<&str> = lay.pattern.iter().map(String::as_str).collect();
    let instance = Instance::from_tokens(&text, &pattern, variant, bounds)?;
    let decode_hints = DecodeHints {
        vertex_letters: if kind.decodes_vertices() {
            qmark::vertex_letters(g.k())
        } else {
            Vec::new()
        },
        edge_letters: if kind.decodes_vertices() {
            Vec::new()
        } else {
            ctx.pairs
                .iter()
                .map(|&(i, j)| ((i, j), ctx.edge_letter(i, j)))
                .collect()
        },
        vertex_tokens: ctx.vertex_tokens(),
        edge_tokens: ctx.edge_tokens(),
    };
    Ok(ReductionOutput {
        kind,
        instance,
        budget: bounds.wildcard_budget,
        expected_bounds: bounds,
        decode_hints,
        sections: lay.sections,
    })
}

pub fn reduce_questionmark(g: &MulticoloredGraph, problem: ProblemKind) -> Result<ReductionOutput, ReductionError> {
    reduce(ReductionKind::Qmark, g, problem)
}

pub fn reduce_mobile1(g: &MulticoloredGraph, problem: ProblemKind) -> Result<ReductionOutput, ReductionError> {
    reduce(ReductionKind::Mobile1, g, problem)
}

pub fn reduce_mobile2(g: &MulticoloredGraph, problem: ProblemKind) -> Result<ReductionOutput, ReductionError> {
    reduce(ReductionKind::Mobile2, g, problem)
}

pub fn reduce_occt_max(g: &MulticoloredGraph, problem: ProblemKind) -> Result<ReductionOutput, ReductionError> {
    reduce(ReductionKind::OcctMax, g, problem)
}

pub fn reduce_questionmarksize(g: &MulticoloredGraph, problem: ProblemKind) -> Result<ReductionOutput, ReductionError> {
    reduce(ReductionKind::QmarkSize, g, problem)
}

/// The witness the construction intends for `clique`, checked against the
/// instance.
pub fn forward_witness(
    output: &ReductionOutput,
    g: &MulticoloredGraph,
    clique: &[Vertex],
) -> Result<MatchWitness, ReductionError> {
    let (n, m) = check(g)?;
    if !is_clique(g, clique) {
        return Err(ReductionError::NotAClique);
    }
    let ctx = Ctx::new(g, n, m);
    let mut choice = Choice::new(&ctx, clique).ok_or(ReductionError::NotAClique)?;
    if output.kind == ReductionKind::OcctMax {
        let plain = layout(output.kind, &ctx, None);
        choice.unique = unique_pieces(&plain.text, 2);
    }
    let lay = layout(output.kind, &ctx, Some(&choice));
    if let Some(group) = lay.broken {
        return Err(ReductionError::Misaligned(group));
    }
    let instance = &output.instance;
    let mut witness = MatchWitness::default();
    let mut substitution = Substitution::new();
    for (pos, entry) in lay.entries().unwrap_or_default().iter().enumerate() {
        let image = instance
            .sigma_t()
            .word(entry.image.iter().map(String::as_str))
            .map_err(|_| ReductionError::Misaligned(pos))?;
        if entry.wild {
            witness.wildcards.insert(pos + 1, image);
            continue;
        }
        let letter = instance
            .sigma_p()
            .get(&entry.letter)
            .ok_or(ReductionError::Misaligned(pos))?;
        match substitution.get(letter) {
            Some(old) if old != image.as_slice() => return Err(ReductionError::Misaligned(pos)),
            Some(_) => {}
            None => {
                substitution.insert(letter, image);
            }
        }
    }
    witness.substitution = substitution;
    match verify_witness(instance, &witness).violation {
        None => Ok(witness),
        Some(v) => Err(ReductionError::Rejected(v)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecodeError {
    #[error("letter `{0}` has no image")]
    MissingImage(String),
    #[error("image of `{letter}` is `{image}`, not a single {expected} letter")]
    NotALetter {
        letter: String,
        image: String,
        expected: &'static str,
    },
    #[error("edges disagree on the vertex of part {0}")]
    Inconsistent(usize),
}

/// Reads the vertex set a witness encodes: `f(V_i)` for the vertex-letter
/// constructions, the endpoints of `f(E_{i,j})` otherwise.
///
/// The result is one vertex per part; whether it is a clique is for the
/// caller to check.
pub fn extract_clique(output: &ReductionOutput, witness: &MatchWitness) -> Result<Vec<Vertex>, DecodeError> {
    let instance = &output.instance;
    let hints = &output.decode_hints;
    let single = |letter: &str, expected: &'static str| -> Result<String, DecodeError> {
        let image = instance
            .sigma_p()
            .get(letter)
            .and_then(|l| witness.substitution.get(l))
            .ok_or_else(|| DecodeError::MissingImage(letter.into()))?;
        match image {
            [one] => Ok(instance.sigma_t().name(*one).into()),
            _ => Err(DecodeError::NotALetter {
                letter: letter.into(),
                image: format!("{}", instance.sigma_t().display(image)),
                expected,
            }),
        }
    };

    if output.kind.decodes_vertices() {
        return hints
            .vertex_letters
            .iter()
            .enumerate()
            .map(|(i, letter)| {
                let tok = single(letter, "vertex")?;
                match hints.vertex_tokens.get(&tok) {
                    Some(&v) if v.part == i => Ok(v),
                    _ => Err(DecodeError::NotALetter {
                        letter: letter.clone(),
                        image: tok,
                        expected: "vertex",
                    }),
                }
            })
            .collect();
    }

    let k = hints
        .vertex_letters
        .len()
        .max(hints.edge_letters.iter().map(|((_, j), _)| j + 1).max().unwrap_or(0));
    let mut chosen: Vec<Option<Vertex>> = alloc::vec![None; k];
    for ((i, j), letter) in &hints.edge_letters {
        let tok = single(letter, "edge")?;
        let (u, v) = *hints
            .edge_tokens
            .get(&tok)
            .filter(|(u, v)| u.part == *i && v.part == *j)
            .ok_or_else(|| DecodeError::NotALetter {
                letter: letter.clone(),
                image: tok.clone(),
                expected: "edge",
            })?;
        for w in [u, v] {
            match chosen[w.part] {
                Some(old) if old != w => return Err(DecodeError::Inconsistent(w.part)),
                _ => chosen[w.part] = Some(w),
            }
        }
    }
    Ok(chosen
        .into_iter()
        .map(|v| v.expect("every part is in some pair"))
        .collect())
}

/// True iff no non-empty `w` has `ww` as a contiguous substring.
pub fn is_square_free<T: PartialEq>(s: &[T]) -> bool {
    let n = s.len();
    (1..=n / 2).all(|half| (0..=n - 2 * half).all(|i| s[i..i + half] != s[i + half..i + 2 * half]))
}
