//! Exact matching with images of length at most two.
//!
//! Every stretch of text around a chosen edge or vertex block is covered by
//! a run of distinct pattern letters; the runs are long enough to absorb any
//! choice, so no letter occurs often.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::layout::{enu, split_run, Choice, Ctx, Entry, Layout};

/// Length of the runs that frame each part block.
pub(super) fn run_length(k: usize, n: usize, m: usize) -> usize {
    2 * k * n * (n - 1) + 2 * n + (k - 1) * m - 1
}

/// Aligns the run `letters` to `text`, preferring pieces that occur once
/// in the whole text so that images stay distinct.
fn run_entries(letters: &[String], text: &[String], choice: &Choice) -> Vec<Entry> {
    let lens = split_run(text, letters.len(), 2, |w| choice.unique.contains(w))
        .or_else(|| split_run(text, letters.len(), 2, |_| true));
    let Some(lens) = lens else {
        // no split exists; report an alignment the layout will reject
        return Vec::new();
    };
    let mut out = Vec::with_capacity(letters.len());
    let mut pos = 0;
    for (l, len) in letters.iter().zip(lens) {
        out.push(Entry::keep(l.clone(), &text[pos..pos + len]));
        pos += len;
    }
    out
}

/// Runs, then a single kept letter, then runs again: `left x right` against
/// `text` with `x` mapped to `text[at]`.
fn framed(left: &[String], middle: &str, right: &[String], text: &[String], at: usize, c: &Choice) -> Vec<Entry> {
    let mut out = run_entries(left, &text[..at], c);
    out.push(Entry::keep(middle, &text[at..at + 1]));
    out.extend(run_entries(right, &text[at + 1..], c));
    out
}

pub(super) fn occt_max(ctx: &Ctx, choice: Option<&Choice>) -> Layout {
    let (k, n, m) = (ctx.k, ctx.n, ctx.m);
    let r = run_length(k, n, m);
    let mut lay = Layout::new(choice.is_some());
    lay.section("t0");
    lay.same("#");
    lay.same("#");

    lay.section("t1");
    for (pair, &(i, j)) in ctx.pairs.iter().enumerate() {
        lay.same("#");
        let ij = format!("{},{}", i + 1, j + 1);
        let mut text = enu(m - 1, |l| format!("l{l}^{ij}"));
        text.extend(ctx.pair_edges[pair].iter().map(|&e| ctx.edge_tok(e)));
        text.extend(enu(m - 1, |l| format!("r{l}^{ij}")));
        let left = enu(m - 1, |l| format!("L{l}^{ij}"));
        let right = enu(m - 1, |l| format!("R{l}^{ij}"));
        let e_letter = ctx.edge_letter(i, j);
        let mut pattern = left.clone();
        pattern.push(e_letter.clone());
        pattern.extend(right.clone());
        lay.group(pattern, text, |text| {
            let c = choice.expect("aligned layout");
            let e = c.edge[pair];
            let at = text.iter().position(|t| *t == ctx.edge_tok(e)).unwrap();
            framed(&left, &e_letter, &right, text, at, c)
        });
    }
    lay.same("#");

    lay.section("t2");
    for i in 0..k {
        if i > 0 {
            lay.same("#");
        }
        let mut text = enu(r, |l| format!("l{l}^{}", i + 1));
        let mut blocks = Vec::with_capacity(n);
        for h in 0..n {
            let v = ctx.vertex(i, h);
            let vt = ctx.vertex_tok(v);
            let start = text.len();
            let sep = format!("#{}^{}", h + 1, i + 1);
            text.push(sep.clone());
            let mut edges = Vec::new();
            for j in (0..k).filter(|&j| j != i) {
                text.extend(enu(n - 1, |l| format!("l{l}^{vt},{}", j + 1)));
                let s = text.len();
                // reverse order keeps adjacent edge pairs distinct from the
                // pair lists above
                text.extend(ctx.g.incident(v, j).iter().rev().map(|&e| ctx.edge_tok(e)));
                edges.push(s..text.len());
                text.extend(enu(n - 1, |l| format!("r{l}^{vt},{}", j + 1)));
            }
            text.push(sep);
            blocks.push((start..text.len(), edges));
        }
        text.extend(enu(r, |l| format!("r{l}^{}", i + 1)));

        let left = enu(r, |l| format!("L{l}^{}", i + 1));
        let right = enu(r, |l| format!("R{l}^{}", i + 1));
        let a = format!("A{}", i + 1);
        let mut pattern = left.clone();
        pattern.push(a.clone());
        let mut pes = Vec::new();
        for j in (0..k).filter(|&j| j != i) {
            let ij = format!("{},{}", i + 1, j + 1);
            let ll = enu(n - 1, |l| format!("LL{l}^{ij}"));
            let rr = enu(n - 1, |l| format!("RR{l}^{ij}"));
            pattern.extend(ll.clone());
            pattern.push(ctx.edge_letter(i, j));
            pattern.extend(rr.clone());
            pes.push((j, ll, rr));
        }
        pattern.push(a.clone());
        pattern.extend(right.clone());

        lay.group(pattern, text, |text| {
            let c = choice.expect("aligned layout");
            let (block, edges) = &blocks[c.vertex[i]];
            let mut out = run_entries(&left, &text[..block.start], c);
            out.push(Entry::keep(a.clone(), &text[block.start..block.start + 1]));
            let mut cursor = block.start + 1;
            for ((j, ll, rr), span) in pes.iter().zip(edges) {
                let end = span.end + (n - 1);
                let tok = ctx.edge_tok(c.edge_between(ctx, i, *j));
                let at = (span.start..span.end).find(|&x| text[x] == tok).unwrap_or(cursor);
                let letter = ctx.edge_letter(i, *j);
                out.extend(framed(ll, &letter, rr, &text[cursor..end], at - cursor, c));
                cursor = end;
            }
            out.push(Entry::keep(a.clone(), &text[cursor..cursor + 1]));
            out.extend(run_entries(&right, &text[block.end..], c));
            out
        });
    }
    lay.finish()
}
