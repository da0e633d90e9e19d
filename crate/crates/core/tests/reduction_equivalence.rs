//! Clique ⇔ match on every small normalized graph.

use std::collections::BTreeSet;
use std::time::Instant;

use gfm_core::reductions::{
    extract_clique, find_clique_bruteforce, forward_witness, is_clique, normalize_graph, reduce, MulticoloredGraph,
    ReductionKind, Vertex,
};
use gfm_core::solvers::{solve_bruteforce, SolverConfig};
use gfm_core::{verify_witness, ProblemKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Edge = ((usize, usize), (usize, usize));

fn build(k: usize, n: usize, edges: &[Edge]) -> MulticoloredGraph {
    let mut g = MulticoloredGraph::new(k).unwrap();
    for i in 0..k {
        for h in 0..n {
            g.add_vertex(i, &format!("x{h}_{i}")).unwrap();
        }
    }
    for &((a, i), (b, j)) in edges {
        g.add_edge_between(Vertex { part: a, index: i }, Vertex { part: b, index: j })
            .unwrap();
    }
    g
}

fn subsets<T: Clone>(items: &[T], size: usize) -> Vec<Vec<T>> {
    if size == 0 {
        return vec![vec![]];
    }
    if items.len() < size {
        return vec![];
    }
    let mut out = subsets(&items[1..], size - 1);
    for s in &mut out {
        s.insert(0, items[0].clone());
    }
    out.extend(subsets(&items[1..], size));
    out
}

/// Smallest edge list over all relabelings of vertices inside each part.
fn canonical(k: usize, n: usize, edges: &[Edge]) -> Vec<Edge> {
    let perms: Vec<Vec<usize>> = if n == 1 {
        vec![vec![0]]
    } else {
        vec![vec![0, 1], vec![1, 0]]
    };
    let mut best: Option<Vec<Edge>> = None;
    let mut choice = vec![0usize; k];
    loop {
        let mut e: Vec<Edge> = edges
            .iter()
            .map(|&((a, i), (b, j))| ((a, perms[choice[a]][i]), (b, perms[choice[b]][j])))
            .collect();
        e.sort();
        if best.as_ref().is_none_or(|b| e < *b) {
            best = Some(e);
        }
        let mut p = 0;
        while p < k && choice[p] + 1 == perms.len() {
            choice[p] = 0;
            p += 1;
        }
        if p == k {
            break;
        }
        choice[p] += 1;
    }
    best.unwrap()
}

/// Normalized graphs with `k` parts of `n` vertices and `m` edges per pair,
/// one per isomorphism class under relabeling inside parts.
fn uniform_graphs(k: usize, n: usize, m: usize) -> Vec<MulticoloredGraph> {
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    let options: Vec<Vec<Vec<Edge>>> = pairs
        .iter()
        .map(|&(a, b)| {
            let all: Vec<Edge> = (0..n).flat_map(|i| (0..n).map(move |j| ((a, i), (b, j)))).collect();
            subsets(&all, m)
        })
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut idx = vec![0usize; pairs.len()];
    if options.iter().any(Vec::is_empty) {
        return out;
    }
    loop {
        let edges: Vec<Edge> = idx
            .iter()
            .enumerate()
            .flat_map(|(p, &c)| options[p][c].clone())
            .collect();
        if seen.insert(canonical(k, n, &edges)) {
            out.push(build(k, n, &edges));
        }
        let mut p = 0;
        while p < idx.len() && idx[p] + 1 == options[p].len() {
            idx[p] = 0;
            p += 1;
        }
        if p == idx.len() {
            break;
        }
        idx[p] += 1;
    }
    out
}

fn config() -> SolverConfig {
    SolverConfig {
        max_nodes: 5_000_000,
        ..SolverConfig::default()
    }
}

/// Solves every construction for `g` and checks the answer against the
/// clique oracle. Returns the number of solver calls.
fn check_graph(g: &MulticoloredGraph) -> usize {
    let clique = find_clique_bruteforce(g, 1_000_000).unwrap();
    let mut calls = 0;
    for kind in ReductionKind::ALL {
        for problem in [ProblemKind::Gfm, ProblemKind::Gpm] {
            let out = reduce(kind, g, problem).unwrap();
            let r = solve_bruteforce(&out.instance, &config()).unwrap();
            calls += 1;
            assert_eq!(r.matched, clique.is_some(), "{kind} {problem:?} on {g:?}");
            if let Some(w) = &r.witness {
                assert!(verify_witness(&out.instance, w).passed());
                if let Ok(c) = extract_clique(&out, w) {
                    assert!(is_clique(g, &c), "{kind} decoded a non-clique");
                }
            }
            if let Some(c) = &clique {
                let w = forward_witness(&out, g, c).unwrap();
                assert_eq!(extract_clique(&out, &w).unwrap(), *c);
            }
        }
    }
    calls
}

#[test]
fn every_small_graph() {
    let start = Instant::now();
    let mut graphs = 0;
    let mut calls = 0;
    for k in 2..=3 {
        for n in 1..=2 {
            for m in 1..=2 {
                for g in uniform_graphs(k, n, m) {
                    graphs += 1;
                    calls += check_graph(&g);
                }
            }
        }
    }
    eprintln!("{graphs} graphs, {calls} solver calls, {:?}", start.elapsed());
    assert!(graphs > 0);
}

fn random_graph(rng: &mut ChaCha8Rng, k: usize, n: usize) -> MulticoloredGraph {
    let mut g = build(k, n, &[]);
    for a in 0..k {
        for b in a + 1..k {
            for i in 0..n {
                for j in 0..n {
                    if rng.gen_bool(0.5) {
                        g.add_edge_between(Vertex { part: a, index: i }, Vertex { part: b, index: j })
                            .unwrap();
                    }
                }
            }
        }
    }
    g
}

#[test]
fn padding_keeps_cliques() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let n = rng.gen_range(1..=3);
        let g = random_graph(&mut rng, 3, n);
        let h = normalize_graph(&g);
        assert!(h.uniform_sizes().is_some());
        let before = find_clique_bruteforce(&g, 1_000_000).unwrap().is_some();
        assert_eq!(find_clique_bruteforce(&h, 1_000_000).unwrap().is_some(), before);
    }
}

#[test]
fn random_padded_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 50 {
        let k = rng.gen_range(2..=3);
        let n = rng.gen_range(1..=2);
        let h = normalize_graph(&random_graph(&mut rng, k, n));
        match h.uniform_sizes() {
            Some((n, m)) if n <= 2 && (1..=2).contains(&m) => {
                check_graph(&h);
                checked += 1;
            }
            _ => {}
        }
    }
}
