//! Constructions whose pattern names vertices: `V_i - V_j` against the
//! `v - w` rendering of every edge between parts `i` and `j`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::layout::{binom2, rp, Choice, Ctx, Entry, Layout};

pub(super) const BOX: &str = "□";

fn v_letter(i: usize) -> String {
    alloc::format!("V{}", i + 1)
}

/// `; vt(e_1) ; … ; vt(e_m) ;`
fn edge_list(ctx: &Ctx, pair: usize) -> Vec<String> {
    let mut out = vec![String::from(";")];
    for &e in &ctx.pair_edges[pair] {
        out.extend(ctx.vt(e));
        out.push(";".into());
    }
    out
}

/// `; V_i - V_j ;` aligned to `; vt(e) ;`.
fn kept_entries(i: usize, j: usize, text: &[String]) -> Vec<Entry> {
    let letters = [";".into(), v_letter(i), "-".into(), v_letter(j), ";".into()];
    letters
        .into_iter()
        .zip(text)
        .map(|(l, t)| Entry::keep(l, core::slice::from_ref(t)))
        .collect()
}

pub(super) fn questionmark_budget(k: usize, m: usize) -> usize {
    binom2(k) * 8 * (m - 1)
}

/// Wildcards of length 0 or 1 on the boxes around each edge block.
pub(super) fn questionmark(ctx: &Ctx, choice: Option<&Choice>) -> Layout {
    let r = questionmark_budget(ctx.k, ctx.m);
    let pad = 4 * (ctx.m - 1);
    let mut lay = Layout::new(choice.is_some());
    lay.section("prefix");
    for tok in [BOX, ";", "-", "#"] {
        for _ in 0..2 * r + 1 {
            lay.same(tok);
        }
    }
    lay.section("blocks");
    lay.same("#");
    for (pair, &(i, j)) in ctx.pairs.iter().enumerate() {
        let text = edge_list(ctx, pair);
        let mut pattern = rp(BOX, pad);
        pattern.extend([";".into(), v_letter(i), "-".into(), v_letter(j), ";".into()]);
        pattern.extend(rp(BOX, pad));
        lay.group(pattern, text, |text| {
            let c = choice.expect("aligned layout");
            let e = c.edge[pair];
            let h = ctx.pair_edges[pair].iter().position(|&x| x == e).unwrap();
            let before = 4 * h;
            let after = pad - before;
            let mut out = Vec::new();
            for _ in 0..pad - before {
                out.push(Entry::wild(BOX, &[]));
            }
            for t in &text[..before] {
                out.push(Entry::wild(BOX, core::slice::from_ref(t)));
            }
            out.extend(kept_entries(i, j, &text[before..before + 5]));
            for t in &text[before + 5..] {
                out.push(Entry::wild(BOX, core::slice::from_ref(t)));
            }
            for _ in 0..pad - after {
                out.push(Entry::wild(BOX, &[]));
            }
            out
        });
        lay.same("#");
    }
    lay.finish()
}

pub(super) fn size_budget(k: usize) -> usize {
    2 * binom2(k)
}

/// Two long wildcards per edge block, one on each side of the chosen edge.
pub(super) fn questionmarksize(ctx: &Ctx, choice: Option<&Choice>) -> Layout {
    let kp = size_budget(ctx.k);
    let r = 2 * (kp + 1);
    let mut lay = Layout::new(choice.is_some());
    lay.section("prefix");
    for tok in ["#", ";", "-"] {
        lay.same(tok);
    }
    for _ in 0..r {
        lay.group(vec!["D".into()], vec!["+".into()], |t| vec![Entry::keep("D", t)]);
    }
    lay.section("blocks");
    for (pair, &(i, j)) in ctx.pairs.iter().enumerate() {
        lay.same("#");
        let mut text = vec![alloc::format!("l{},{}", i + 1, j + 1)];
        text.extend(edge_list(ctx, pair));
        text.push(alloc::format!("r{},{}", i + 1, j + 1));
        let pattern = vec![
            "D".into(),
            ";".into(),
            v_letter(i),
            "-".into(),
            v_letter(j),
            ";".into(),
            "D".into(),
        ];
        lay.group(pattern, text, |text| {
            let c = choice.expect("aligned layout");
            let e = c.edge[pair];
            let h = ctx.pair_edges[pair].iter().position(|&x| x == e).unwrap();
            let start = 1 + 4 * h;
            let mut out = vec![Entry::wild("D", &text[..start])];
            out.extend(kept_entries(i, j, &text[start..start + 5]));
            out.push(Entry::wild("D", &text[start + 5..]));
            out
        });
    }
    lay.same("#");
    lay.finish()
}

pub(super) fn vertex_letters(k: usize) -> Vec<String> {
    (0..k).map(v_letter).collect()
}
