//! k-partite graphs for Multicolored Clique.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

/// A vertex by part and position inside the part (both 0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub part: usize,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("a multicolored graph needs at least two parts, got {0}")]
    TooFewParts(usize),
    #[error("part {0} does not exist")]
    NoSuchPart(usize),
    #[error("vertex `{0}` is declared twice")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("edge `{0}`-`{1}` joins two vertices of the same part")]
    SamePart(String, String),
    #[error("edge `{0}`-`{1}` is listed twice")]
    DuplicateEdge(String, String),
}

/// A graph whose vertices are split into `k` parts, with edges only between
/// different parts. Edges keep their insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MulticoloredGraph {
    parts: Vec<Vec<String>>,
    names: BTreeMap<String, Vertex>,
    /// Endpoints with `.0.part < .1.part`.
    edges: Vec<(Vertex, Vertex)>,
    adjacency: BTreeSet<(Vertex, Vertex)>,
}

impl MulticoloredGraph {
    pub fn new(k: usize) -> Result<Self, GraphError> {
        if k < 2 {
            return Err(GraphError::TooFewParts(k));
        }
        Ok(MulticoloredGraph {
            parts: (0..k).map(|_| Vec::new()).collect(),
            names: BTreeMap::new(),
            edges: Vec::new(),
            adjacency: BTreeSet::new(),
        })
    }

    pub fn add_vertex(&mut self, part: usize, name: &str) -> Result<Vertex, GraphError> {
        if part >= self.parts.len() {
            return Err(GraphError::NoSuchPart(part));
        }
        if self.names.contains_key(name) {
            return Err(GraphError::DuplicateVertex(name.into()));
        }
        let v = Vertex {
            part,
            index: self.parts[part].len(),
        };
        self.parts[part].push(name.into());
        self.names.insert(name.into(), v);
        Ok(v)
    }

    pub fn add_edge(&mut self, a: &str, b: &str) -> Result<usize, GraphError> {
        let u = self.vertex(a).ok_or_else(|| GraphError::UnknownVertex(a.into()))?;
        let v = self.vertex(b).ok_or_else(|| GraphError::UnknownVertex(b.into()))?;
        self.add_edge_between(u, v)
    }

    pub fn add_edge_between(&mut self, u: Vertex, v: Vertex) -> Result<usize, GraphError> {
        if u.part == v.part {
            return Err(GraphError::SamePart(self.name(u).into(), self.name(v).into()));
        }
        let key = if u.part < v.part { (u, v) } else { (v, u) };
        if !self.adjacency.insert(key) {
            return Err(GraphError::DuplicateEdge(self.name(u).into(), self.name(v).into()));
        }
        self.edges.push(key);
        Ok(self.edges.len() - 1)
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn part(&self, i: usize) -> &[String] {
        &self.parts[i]
    }

    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        self.names.get(name).copied()
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.parts[v.part][v.index]
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(part, vs)| (0..vs.len()).map(move |index| Vertex { part, index }))
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let key = if u.part < v.part { (u, v) } else { (v, u) };
        self.adjacency.contains(&key)
    }

    /// Ids of the edges between parts `i < j`, in insertion order.
    pub fn edges_between(&self, i: usize, j: usize) -> Vec<usize> {
        let (i, j) = (i.min(j), i.max(j));
        (0..self.edges.len())
            .filter(|&e| self.edges[e].0.part == i && self.edges[e].1.part == j)
            .collect()
    }

    /// Ids of the edges joining `v` to part `j`, in insertion order.
    pub fn incident(&self, v: Vertex, j: usize) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&e| {
                let (a, b) = self.edges[e];
                (a == v && b.part == j) || (b == v && a.part == j)
            })
            .collect()
    }

    /// Common part size and common edge count per pair of parts, if all
    /// parts and all pairs agree.
    pub fn uniform_sizes(&self) -> Option<(usize, usize)> {
        let n = self.parts[0].len();
        if self.parts.iter().any(|p| p.len() != n) {
            return None;
        }
        let m = self.edges_between(0, 1).len();
        for i in 0..self.k() {
            for j in i + 1..self.k() {
                if self.edges_between(i, j).len() != m {
                    return None;
                }
            }
        }
        Some((n, m))
    }

    fn fresh_name(&self, counter: &mut usize) -> String {
        loop {
            *counter += 1;
            let name = format!("pad{counter}");
            if !self.names.contains_key(&name) {
                return name;
            }
        }
    }
}

/// Pads `g` so that all parts have the same size and all pairs of parts the
/// same number of edges.
///
/// Missing edges join two new vertices; a new vertex has degree one, so it
/// lies in no clique with three or more parts. With two parts there is a
/// single pair and no edge is added.
pub fn normalize_graph(g: &MulticoloredGraph) -> MulticoloredGraph {
    let mut out = g.clone();
    let k = g.k();
    let m = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .map(|(i, j)| g.edges_between(i, j).len())
        .max()
        .unwrap_or(0);
    let mut counter = 0;
    for i in 0..k {
        for j in i + 1..k {
            for _ in g.edges_between(i, j).len()..m {
                let a = out.fresh_name(&mut counter);
                let u = out.add_vertex(i, &a).expect("fresh name");
                let b = out.fresh_name(&mut counter);
                let v = out.add_vertex(j, &b).expect("fresh name");
                out.add_edge_between(u, v).expect("new edge");
            }
        }
    }
    let n = out.parts.iter().map(Vec::len).max().unwrap_or(0);
    for i in 0..k {
        while out.parts[i].len() < n {
            let a = out.fresh_name(&mut counter);
            out.add_vertex(i, &a).expect("fresh name");
        }
    }
    out
}

/// One vertex per part, in part order, pairwise adjacent.
pub fn is_clique(g: &MulticoloredGraph, vertices: &[Vertex]) -> bool {
    vertices.len() == g.k()
        && vertices
            .iter()
            .enumerate()
            .all(|(i, v)| v.part == i && v.index < g.part(i).len())
        && (0..vertices.len()).all(|a| (a + 1..vertices.len()).all(|b| g.has_edge(vertices[a], vertices[b])))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("clique search gave up after {limit} nodes")]
pub struct CliqueLimit {
    pub limit: u64,
}

/// The lexicographically first multicolored clique, by vertex index per
/// part.
pub fn find_clique_bruteforce(g: &MulticoloredGraph, limit: u64) -> Result<Option<Vec<Vertex>>, CliqueLimit> {
    fn go(g: &MulticoloredGraph, chosen: &mut Vec<Vertex>, nodes: &mut u64, limit: u64) -> Result<bool, CliqueLimit> {
        let part = chosen.len();
        if part == g.k() {
            return Ok(true);
        }
        for index in 0..g.part(part).len() {
            *nodes += 1;
            if *nodes > limit {
                return Err(CliqueLimit { limit });
            }
            let v = Vertex { part, index };
            if chosen.iter().all(|&u| g.has_edge(u, v)) {
                chosen.push(v);
                if go(g, chosen, nodes, limit)? {
                    return Ok(true);
                }
                chosen.pop();
            }
        }
        Ok(false)
    }
    let mut chosen = Vec::new();
    let mut nodes = 0;
    Ok(go(g, &mut chosen, &mut nodes, limit)?.then_some(chosen))
}
