//! The graph format for Multicolored Clique inputs. Parts are numbered from 1.
//!
//! ```text
//! k <parts>
//! part <i> <vertex> <vertex> ...
//! edge <vertex> <vertex>
//! ```

use std::fmt::Write as _;

use gfm_core::reductions::MulticoloredGraph;

use crate::{entries, ParseError};

pub fn parse_graph(src: &str) -> Result<MulticoloredGraph, ParseError> {
    let mut graph: Option<MulticoloredGraph> = None;
    for (line, key, values) in entries(src) {
        if key == "k" {
            if graph.is_some() {
                return Err(ParseError::at(line, "`k` given twice"));
            }
            let k = match values.as_slice() {
                [v] => v
                    .parse()
                    .map_err(|_| ParseError::at(line, format!("`k` expects an integer, got `{v}`")))?,
                _ => return Err(ParseError::at(line, "`k` takes one value")),
            };
            graph = Some(MulticoloredGraph::new(k).map_err(|e| ParseError::at(line, e.to_string()))?);
            continue;
        }
        let Some(g) = graph.as_mut() else {
            return Err(ParseError::at(line, "the first entry must be `k`"));
        };
        let err = |e: gfm_core::reductions::GraphError| ParseError::at(line, e.to_string());
        match key {
            "part" => {
                let Some((i, names)) = values.split_first() else {
                    return Err(ParseError::at(line, "`part` needs an index"));
                };
                let part = i
                    .parse::<usize>()
                    .ok()
                    .filter(|&p| (1..=g.k()).contains(&p))
                    .ok_or_else(|| ParseError::at(line, format!("part index must be in 1..={}, got `{i}`", g.k())))?;
                for name in names {
                    g.add_vertex(part - 1, name).map_err(err)?;
                }
            }
            "edge" => match values.as_slice() {
                [a, b] => {
                    g.add_edge(a, b).map_err(err)?;
                }
                _ => return Err(ParseError::at(line, "`edge` takes two vertices")),
            },
            _ => return Err(ParseError::at(line, format!("unknown key `{key}`"))),
        }
    }
    graph.ok_or_else(|| ParseError::eof("missing `k` line"))
}

pub fn write_graph(g: &MulticoloredGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "k {}", g.k());
    for i in 0..g.k() {
        let _ = write!(out, "part {}", i + 1);
        for name in g.part(i) {
            let _ = write!(out, " {name}");
        }
        out.push('\n');
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "edge {} {}", g.name(u), g.name(v));
    }
    out
}
