use alloc::vec::Vec;

use super::*;
use crate::solvers::{solve_bruteforce, SolverConfig};

fn graph(parts: &[&[&str]], edges: &[(&str, &str)]) -> MulticoloredGraph {
    let mut g = MulticoloredGraph::new(parts.len()).unwrap();
    for (i, part) in parts.iter().enumerate() {
        for v in *part {
            g.add_vertex(i, v).unwrap();
        }
    }
    for (a, b) in edges {
        g.add_edge(a, b).unwrap();
    }
    g
}

/// Triangle a-c-e plus a second, crossing edge per pair.
fn triangle() -> MulticoloredGraph {
    graph(
        &[&["a", "b"], &["c", "d"], &["e", "f"]],
        &[("b", "d"), ("a", "c"), ("a", "e"), ("b", "f"), ("c", "e"), ("d", "e")],
    )
}

/// Same sizes, but no triangle.
fn no_triangle() -> MulticoloredGraph {
    graph(
        &[&["a", "b"], &["c", "d"], &["e", "f"]],
        &[("b", "d"), ("a", "c"), ("a", "e"), ("b", "f"), ("c", "f"), ("d", "e")],
    )
}

fn count(instance: &Instance, pattern: bool, tok: &str) -> usize {
    let (alphabet, word) = if pattern {
        (instance.sigma_p(), instance.pattern())
    } else {
        (instance.sigma_t(), instance.text())
    };
    let l = alphabet.get(tok).unwrap();
    word.iter().filter(|&&x| x == l).count()
}

#[test]
fn square_free_examples() {
    assert!(!is_square_free(&["a", "a"]));
    assert!(is_square_free(&["a", "b", "a"]));
    assert!(!is_square_free(&["a", "b", "a", "b", "c"]));
    assert!(is_square_free::<&str>(&[]));
}

#[test]
fn kinds_round_trip_by_name() {
    for k in ReductionKind::ALL {
        assert_eq!(ReductionKind::from_name(k.name()), Some(k));
    }
    assert_eq!(ReductionKind::from_name("qmark2"), None);
}

#[test]
fn rejects_graphs_that_are_not_normalized() {
    let g = graph(&[&["a", "b"], &["c"]], &[("a", "c")]);
    assert_eq!(
        reduce(ReductionKind::Qmark, &g, ProblemKind::Gfm).unwrap_err(),
        ReductionError::NotNormalized
    );
    let g = graph(&[&["a"], &["c"]], &[]);
    assert_eq!(
        reduce(ReductionKind::Mobile1, &g, ProblemKind::Gfm).unwrap_err(),
        ReductionError::NoEdges
    );
}

#[test]
fn budgets_follow_the_formulas() {
    assert_eq!(mobile::mobile2_budget(3), 21);
    assert_eq!(occtmax::run_length(2, 2, 1), 12);
    let g = graph(&[&["a"], &["b"]], &[("a", "b")]);
    let out = reduce_questionmark(&g, ProblemKind::Gfm).unwrap();
    assert_eq!(out.budget, 0);
    let out = reduce_questionmark(&triangle(), ProblemKind::Gfm).unwrap();
    assert_eq!(out.budget, 3 * 8);
    assert_eq!(out.instance.budget(), out.budget);
}

#[test]
fn alphabet_sizes() {
    let g = triangle();
    let k = 3;
    for kind in [ReductionKind::Qmark, ReductionKind::QmarkSize] {
        let out = reduce(kind, &g, ProblemKind::Gfm).unwrap();
        assert_eq!(out.instance.parameters().size_p, k + 4, "{kind}");
    }
    let out = reduce_mobile1(&g, ProblemKind::Gfm).unwrap();
    let p = out.instance.parameters();
    assert_eq!((p.occ_t, p.occ_p), (3 + k + 3, 3 + k + 3));
    let out = reduce_mobile2(&g, ProblemKind::Gfm).unwrap();
    assert_eq!(out.instance.parameters().size_p, 3 + k + 2);
}

#[test]
fn size_construction_counts_d() {
    // r = 2(k'+1) in the prefix plus k' in the blocks
    let out = reduce_questionmarksize(&triangle(), ProblemKind::Gfm).unwrap();
    let kp = out.budget;
    assert_eq!(kp, 6);
    assert_eq!(count(&out.instance, true, "D"), 3 * kp + 2);
    assert_eq!(out.instance.parameters().occ_p, 3 * kp + 2);
}

#[test]
fn separator_texts_are_square_free() {
    for g in [triangle(), no_triangle()] {
        let out = reduce_questionmarksize(&g, ProblemKind::Gfm).unwrap();
        let s = out.section("blocks").unwrap();
        assert!(is_square_free(&out.instance.text()[s.text.clone()]));

        let out = reduce_mobile2(&g, ProblemKind::Gfm).unwrap();
        let start = out.section("t1").unwrap().text.start;
        assert!(is_square_free(&out.instance.text()[start..]));
    }
}

#[test]
fn forward_witnesses_verify_and_decode() {
    let g = triangle();
    let clique = find_clique_bruteforce(&g, 1000).unwrap().unwrap();
    for kind in ReductionKind::ALL {
        for problem in [ProblemKind::Gfm, ProblemKind::Gpm] {
            let out = reduce(kind, &g, problem).unwrap();
            let w = forward_witness(&out, &g, &clique).unwrap();
            assert_eq!(w.wildcard_count(), out.budget, "{kind}");
            assert_eq!(extract_clique(&out, &w).unwrap(), clique, "{kind}");
        }
    }
}

#[test]
fn forward_witness_needs_a_clique() {
    let g = no_triangle();
    let out = reduce_mobile1(&g, ProblemKind::Gfm).unwrap();
    let vs: Vec<Vertex> = (0..3).map(|part| Vertex { part, index: 0 }).collect();
    assert_eq!(forward_witness(&out, &g, &vs), Err(ReductionError::NotAClique));
}

#[test]
fn solver_agrees_with_clique_on_two_parts() {
    // with two parts any edge is a clique
    let g = graph(&[&["a", "b"], &["c", "d"]], &[("a", "d"), ("b", "c")]);
    let config = SolverConfig::default();
    for kind in ReductionKind::ALL {
        let out = reduce(kind, &g, ProblemKind::Gpm).unwrap();
        let r = solve_bruteforce(&out.instance, &config).unwrap();
        assert!(r.matched, "{kind}");
        let found = extract_clique(&out, r.witness.as_ref().unwrap());
        if let Ok(c) = found {
            assert!(is_clique(&g, &c), "{kind}");
        }
    }
}
