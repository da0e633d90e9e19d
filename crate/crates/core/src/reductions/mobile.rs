//! Constructions whose pattern names edges, once in a per-pair list and once
//! inside the block of each endpoint.
//!
//! With `wild` set, the gaps around chosen edges are wildcards `D` and the
//! text starts with a run of `+` that pins `f(D)`. Otherwise every gap gets
//! its own letter and no wildcard is used.
//!
//! In the wildcard form the outer gaps `L_i`, `R_i` of each part block are
//! `D` as well, so the budget equals the number of `D` outside the prefix.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::graph::Vertex;
use super::layout::{binom2, Choice, Ctx, Entry, Layout};

pub(super) fn mobile2_budget(k: usize) -> usize {
    2 * binom2(k) + k * (k + 2)
}

fn a_letter(i: usize) -> String {
    format!("A{}", i + 1)
}

fn sep(i: usize, h: usize) -> String {
    format!("#{}^{}", h + 1, i + 1)
}

/// `e(v)`: for each other part in order, `d_e^v a_e` per incident edge,
/// then `d^v`.
fn vertex_edges(ctx: &Ctx, v: Vertex) -> Vec<String> {
    let vt = ctx.vertex_tok(v);
    let mut out = Vec::new();
    for j in 0..ctx.k {
        if j == v.part {
            continue;
        }
        for e in ctx.g.incident(v, j) {
            let a = ctx.edge_tok(e);
            out.push(format!("d:{a}:{vt}"));
            out.push(a);
        }
    }
    out.push(format!("d:{vt}"));
    out
}

pub(super) fn mobile(ctx: &Ctx, choice: Option<&Choice>, wild: bool) -> Layout {
    let k = ctx.k;
    let mut lay = Layout::new(choice.is_some());
    lay.section("t0");
    lay.same("#");
    if wild {
        let r = 2 * (mobile2_budget(k) + 1);
        for _ in 0..r {
            lay.group(vec!["D".into()], vec!["+".into()], |t| vec![Entry::keep("D", t)]);
        }
    } else {
        lay.same("#");
    }
    let gap = |name: String, image: &[String]| {
        if wild {
            Entry::wild("D", image)
        } else {
            Entry::keep(name, image)
        }
    };
    let gap_letter = |name: String| if wild { String::from("D") } else { name };

    lay.section("t1");
    for (pair, &(i, j)) in ctx.pairs.iter().enumerate() {
        lay.same("#");
        let ij = format!("{},{}", i + 1, j + 1);
        let mut text = vec![format!("l{ij}")];
        text.extend(ctx.pair_edges[pair].iter().map(|&e| ctx.edge_tok(e)));
        text.push(format!("r{ij}"));
        let e_letter = ctx.edge_letter(i, j);
        let pattern = vec![
            gap_letter(format!("L{ij}")),
            e_letter.clone(),
            gap_letter(format!("R{ij}")),
        ];
        lay.group(pattern, text, |text| {
            let c = choice.expect("aligned layout");
            let h = ctx.pair_edges[pair].iter().position(|&x| x == c.edge[pair]).unwrap() + 1;
            vec![
                gap(format!("L{ij}"), &text[..h]),
                Entry::keep(e_letter.clone(), &text[h..h + 1]),
                gap(format!("R{ij}"), &text[h + 1..]),
            ]
        });
    }

    lay.section("t2");
    for i in 0..k {
        lay.same("#");
        let mut text = vec![format!("l{}", i + 1)];
        let mut blocks = Vec::with_capacity(ctx.n);
        for h in 0..ctx.n {
            let start = text.len();
            text.push(sep(i, h));
            text.extend(vertex_edges(ctx, ctx.vertex(i, h)));
            text.push(sep(i, h));
            blocks.push(start..text.len());
        }
        text.push(format!("r{}", i + 1));

        let d_name = |j: usize| format!("D{},{}", i + 1, j + 1);
        let mut pattern = vec![gap_letter(format!("L{}", i + 1)), a_letter(i)];
        for j in (0..k).filter(|&j| j != i) {
            pattern.push(gap_letter(d_name(j)));
            pattern.push(ctx.edge_letter(i, j));
        }
        pattern.push(gap_letter(d_name(k)));
        pattern.push(a_letter(i));
        pattern.push(gap_letter(format!("R{}", i + 1)));

        lay.group(pattern, text, |text| {
            let c = choice.expect("aligned layout");
            let block = blocks[c.vertex[i]].clone();
            let mut out = vec![
                gap(format!("L{}", i + 1), &text[..block.start]),
                Entry::keep(a_letter(i), &text[block.start..block.start + 1]),
            ];
            let mut cursor = block.start + 1;
            for j in (0..k).filter(|&j| j != i) {
                let a = ctx.edge_tok(c.edge_between(ctx, i, j));
                let at = (cursor..block.end).find(|&x| text[x] == a).unwrap_or(cursor);
                out.push(gap(d_name(j), &text[cursor..at]));
                out.push(Entry::keep(ctx.edge_letter(i, j), &text[at..at + 1]));
                cursor = at + 1;
            }
            out.push(gap(d_name(k), &text[cursor..block.end - 1]));
            out.push(Entry::keep(a_letter(i), &text[block.end - 1..block.end]));
            out.push(gap(format!("R{}", i + 1), &text[block.end..]));
            out
        });
    }
    lay.same("#");
    lay.finish()
}
