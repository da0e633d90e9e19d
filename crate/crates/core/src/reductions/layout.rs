//! Parallel construction of text, pattern and (given a clique) the
//! alignment between them.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use super::graph::{MulticoloredGraph, Vertex};

/// One pattern position and the text it covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(super) struct Entry {
    pub letter: String,
    pub image: Vec<String>,
    pub wild: bool,
}

impl Entry {
    pub fn keep(letter: impl Into<String>, image: &[String]) -> Self {
        Entry {
            letter: letter.into(),
            image: image.to_vec(),
            wild: false,
        }
    }

    pub fn wild(letter: impl Into<String>, image: &[String]) -> Self {
        Entry {
            letter: letter.into(),
            image: image.to_vec(),
            wild: true,
        }
    }
}

/// A named stretch of the generated text and pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    pub name: &'static str,
    pub text: Range<usize>,
    pub pattern: Range<usize>,
}

pub(super) struct Layout {
    pub text: Vec<String>,
    pub pattern: Vec<String>,
    pub sections: Vec<Section>,
    entries: Option<Vec<Entry>>,
    /// First group whose alignment did not reproduce it.
    pub broken: Option<usize>,
    groups: usize,
}

impl Layout {
    pub fn new(aligned: bool) -> Self {
        Layout {
            text: Vec::new(),
            pattern: Vec::new(),
            sections: Vec::new(),
            entries: aligned.then(Vec::new),
            broken: None,
            groups: 0,
        }
    }

    pub fn section(&mut self, name: &'static str) {
        self.close_section();
        self.sections.push(Section {
            name,
            text: self.text.len()..self.text.len(),
            pattern: self.pattern.len()..self.pattern.len(),
        });
    }

    fn close_section(&mut self) {
        if let Some(s) = self.sections.last_mut() {
            s.text.end = self.text.len();
            s.pattern.end = self.pattern.len();
        }
    }

    /// A token that appears in both and maps to itself.
    pub fn same(&mut self, tok: &str) {
        let t = vec![String::from(tok)];
        self.group(t.clone(), t, |t| vec![Entry::keep(tok, t)]);
    }

    /// Appends a pattern stretch and the text stretch it covers. `align`
    /// is only called when an alignment is being built.
    pub fn group(&mut self, pattern: Vec<String>, text: Vec<String>, align: impl FnOnce(&[String]) -> Vec<Entry>) {
        if let Some(entries) = &mut self.entries {
            let part = align(&text);
            let letters_ok = part.len() == pattern.len() && part.iter().zip(&pattern).all(|(e, p)| e.letter == *p);
            let images: Vec<&String> = part.iter().flat_map(|e| &e.image).collect();
            let text_ok = images.len() == text.len() && images.iter().zip(&text).all(|(a, b)| *a == b);
            if !(letters_ok && text_ok) && self.broken.is_none() {
                self.broken = Some(self.groups);
            }
            entries.extend(part);
        }
        self.groups += 1;
        self.text.extend(text);
        self.pattern.extend(pattern);
    }

    pub fn finish(mut self) -> Self {
        self.close_section();
        self
    }

    pub fn entries(&self) -> Option<&[Entry]> {
        self.entries.as_deref()
    }
}

pub(super) fn rp(tok: &str, count: usize) -> Vec<String> {
    vec![String::from(tok); count]
}

/// `tok_1 … tok_count`, rendered by `name(l)` for 1-based `l`.
pub(super) fn enu(count: usize, name: impl Fn(usize) -> String) -> Vec<String> {
    (1..=count).map(name).collect()
}

pub(super) fn binom2(k: usize) -> usize {
    k * (k - 1) / 2
}

/// Sizes and token names shared by all constructions.
pub(super) struct Ctx<'g> {
    pub g: &'g MulticoloredGraph,
    pub k: usize,
    pub n: usize,
    pub m: usize,
    pub pairs: Vec<(usize, usize)>,
    /// Edge ids per pair, in insertion order.
    pub pair_edges: Vec<Vec<usize>>,
    /// 1-based position of each edge inside its pair.
    edge_pos: Vec<usize>,
}

impl<'g> Ctx<'g> {
    pub fn new(g: &'g MulticoloredGraph, n: usize, m: usize) -> Self {
        let k = g.k();
        let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
        let pair_edges: Vec<Vec<usize>> = pairs.iter().map(|&(i, j)| g.edges_between(i, j)).collect();
        let mut edge_pos = vec![0; g.edges().len()];
        for list in &pair_edges {
            for (l, &e) in list.iter().enumerate() {
                edge_pos[e] = l + 1;
            }
        }
        Ctx {
            g,
            k,
            n,
            m,
            pairs,
            pair_edges,
            edge_pos,
        }
    }

    pub fn vertex_tok(&self, v: Vertex) -> String {
        format!("v{}^{}", v.index + 1, v.part + 1)
    }

    pub fn edge_tok(&self, e: usize) -> String {
        let (u, v) = self.g.edges()[e];
        format!("a{}^{},{}", self.edge_pos[e], u.part + 1, v.part + 1)
    }

    /// `v - w` for an edge.
    pub fn vt(&self, e: usize) -> [String; 3] {
        let (u, v) = self.g.edges()[e];
        [self.vertex_tok(u), String::from("-"), self.vertex_tok(v)]
    }

    pub fn vertex(&self, part: usize, index: usize) -> Vertex {
        Vertex { part, index }
    }

    /// Letter `E_{i,j}` for either order of `i != j`.
    pub fn edge_letter(&self, i: usize, j: usize) -> String {
        format!("E{},{}", i.min(j) + 1, i.max(j) + 1)
    }

    pub fn pair_index(&self, i: usize, j: usize) -> usize {
        let (i, j) = (i.min(j), i.max(j));
        self.pairs.iter().position(|&p| p == (i, j)).expect("pair of parts")
    }

    pub fn edge_tokens(&self) -> BTreeMap<String, (Vertex, Vertex)> {
        (0..self.g.edges().len())
            .map(|e| (self.edge_tok(e), self.g.edges()[e]))
            .collect()
    }

    pub fn vertex_tokens(&self) -> BTreeMap<String, Vertex> {
        self.g.vertices().map(|v| (self.vertex_tok(v), v)).collect()
    }
}

/// A clique, by vertex index per part and edge id per pair.
pub(super) struct Choice {
    pub vertex: Vec<usize>,
    pub edge: Vec<usize>,
    /// Text stretches of length at most two that occur exactly once.
    pub unique: BTreeSet<Vec<String>>,
}

impl Choice {
    pub fn new(ctx: &Ctx, clique: &[Vertex]) -> Option<Self> {
        let edge = ctx
            .pairs
            .iter()
            .map(|&(i, j)| {
                ctx.pair_edges[ctx.pair_index(i, j)]
                    .iter()
                    .copied()
                    .find(|&e| ctx.g.edges()[e] == (clique[i], clique[j]))
            })
            .collect::<Option<Vec<usize>>>()?;
        Some(Choice {
            vertex: clique.iter().map(|v| v.index).collect(),
            edge,
            unique: BTreeSet::new(),
        })
    }

    pub fn edge_between(&self, ctx: &Ctx, i: usize, j: usize) -> usize {
        self.edge[ctx.pair_index(i, j)]
    }
}

pub(super) fn unique_pieces(text: &[String], max: usize) -> BTreeSet<Vec<String>> {
    let mut counts: BTreeMap<&[String], usize> = BTreeMap::new();
    for len in 1..=max {
        for w in text.windows(len) {
            *counts.entry(w).or_default() += 1;
        }
    }
    counts
        .into_iter()
        .filter(|&(_, c)| c == 1)
        .map(|(w, _)| w.to_vec())
        .collect()
}

/// Cuts `tokens` into exactly `pieces` non-empty consecutive pieces of at
/// most `max` tokens each, using only pieces accepted by `ok`. Returns the
/// piece lengths.
pub(super) fn split_run(
    tokens: &[String],
    pieces: usize,
    max: usize,
    ok: impl Fn(&[String]) -> bool,
) -> Option<Vec<usize>> {
    let n = tokens.len();
    // done[c][pos]: tokens[pos..] splits into c acceptable pieces
    let mut done = vec![vec![false; n + 1]; pieces + 1];
    done[0][n] = true;
    for c in 1..=pieces {
        for pos in (0..n).rev() {
            done[c][pos] = (1..=max.min(n - pos)).any(|len| done[c - 1][pos + len] && ok(&tokens[pos..pos + len]));
        }
    }
    if !done[pieces][0] {
        return None;
    }
    let mut out = Vec::with_capacity(pieces);
    let mut pos = 0;
    for c in (1..=pieces).rev() {
        let len = (1..=max.min(n - pos))
            .find(|&len| done[c - 1][pos + len] && ok(&tokens[pos..pos + len]))
            .expect("reachable split");
        out.push(len);
        pos += len;
    }
    Some(out)
}
