use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::instance::{Bound, Bounds, ProblemKind, Variant};
use crate::witness::verify_witness;
use crate::word::Letter;

fn inst(t: &[&str], p: &[&str], l: Bound, w: Bound, q: usize, variant: Variant) -> Instance {
    let bounds = Bounds {
        max_letter_len: l,
        max_wildcard_len: w,
        wildcard_budget: q,
    };
    Instance::from_tokens(t, p, variant, bounds).unwrap()
}

fn xyyx(q: usize) -> Instance {
    inst(
        &["x", "y", "y", "x"],
        &["a", "b", "a"],
        Bound::Finite(2),
        Bound::Finite(2),
        q,
        Variant::GFM,
    )
}

fn xyyz(q: usize) -> Instance {
    inst(
        &["x", "y", "y", "z"],
        &["a", "b", "a"],
        Bound::Finite(2),
        Bound::Finite(2),
        q,
        Variant::GFM,
    )
}

fn cfg() -> SolverConfig {
    SolverConfig::default()
}

const ALL: [Algorithm; 3] = [Algorithm::Brute, Algorithm::Enum, Algorithm::Anchored];

#[test]
fn intro_example_matches_everywhere() {
    let i = xyyx(0);
    for a in ALL {
        let r = solve_with(&i, a, &cfg()).unwrap();
        assert!(r.matched, "{a}");
        let w = r.witness.unwrap();
        assert!(verify_witness(&i, &w).passed());
        let a_img = w.substitution.get(i.sigma_p().get("a").unwrap()).unwrap();
        let b_img = w.substitution.get(i.sigma_p().get("b").unwrap()).unwrap();
        assert_eq!(i.sigma_t().display(a_img).to_string(), "x");
        assert_eq!(i.sigma_t().display(b_img).to_string(), "y y");
    }
}

#[test]
fn changed_last_letter_needs_one_wildcard() {
    for a in ALL {
        assert!(!solve_with(&xyyz(0), a, &cfg()).unwrap().matched, "{a}");
        let r = solve_with(&xyyz(1), a, &cfg()).unwrap();
        assert_eq!(r.min_wildcards, Some(1), "{a}");
        assert!(verify_witness(&xyyz(1), r.witness.as_ref().unwrap()).passed());
    }
}

#[test]
fn single_letter_instance() {
    let i = inst(&["x"], &["a"], Bound::Finite(1), Bound::Finite(1), 0, Variant::GFM);
    for a in ALL {
        let r = solve_with(&i, a, &cfg()).unwrap();
        assert!(r.matched);
    }
    let r = solve_enum(&i, &cfg()).unwrap();
    assert!(r.stats.substitutions <= 1);
}

#[test]
fn minimum_ignores_the_declared_budget() {
    for a in ALL {
        assert_eq!(min_wildcards(&xyyx(0), Some(a), &cfg()).unwrap().min_wildcards, Some(0));
        assert_eq!(min_wildcards(&xyyz(0), Some(a), &cfg()).unwrap().min_wildcards, Some(1));
    }
    assert_eq!(min_wildcards(&xyyz(0), None, &cfg()).unwrap().min_wildcards, Some(1));
}

#[test]
fn brute_force_honours_node_limit() {
    let config = SolverConfig { max_nodes: 2, ..cfg() };
    assert!(matches!(
        solve_bruteforce(&xyyz(1), &config),
        Err(SolveError::ResourceLimit { .. })
    ));
}

#[test]
fn gpm_rejects_shared_images() {
    // a and b would both need image x
    let i = inst(
        &["x", "x"],
        &["a", "b"],
        Bound::Finite(1),
        Bound::Finite(1),
        0,
        Variant::GPM,
    );
    for a in ALL {
        assert!(!solve_with(&i, a, &cfg()).unwrap().matched, "{a}");
    }
    let i = i.with_budget(1);
    for a in ALL {
        let r = solve_with(&i, a, &cfg()).unwrap();
        assert_eq!(r.min_wildcards, Some(1), "{a}");
    }
}

#[test]
fn sharded_search_merges_to_the_unsharded_result() {
    let i = xyyz(2);
    for a in [Algorithm::Enum, Algorithm::Anchored] {
        let whole = solve_with(&i, a, &cfg()).unwrap();
        let parts: Vec<SolveResult> = (0..3)
            .map(|index| {
                let config = SolverConfig {
                    shard: Some(Shard { index, count: 3 }),
                    ..cfg()
                };
                solve_with(&i, a, &config).unwrap()
            })
            .collect();
        let merged = merge_results(parts).unwrap();
        assert_eq!(merged.min_wildcards, whole.min_wildcards);
        assert_eq!(merged.witness, whole.witness);
    }
}

fn arb_instance() -> impl Strategy<Value = Instance> {
    let text = prop::collection::vec(0u8..2, 1..=7);
    let pattern = prop::collection::vec(0u8..2, 1..=5);
    (
        text,
        pattern,
        1usize..=2,
        1usize..=2,
        0usize..=2,
        any::<bool>(),
        any::<bool>(),
    )
        .prop_map(|(t, p, l, w, q, gpm, empty)| {
            let t: Vec<&str> = t.iter().map(|&c| ["x", "y"][c as usize]).collect();
            let p: Vec<&str> = p.iter().map(|&c| ["a", "b"][c as usize]).collect();
            let kind = if gpm { ProblemKind::Gpm } else { ProblemKind::Gfm };
            let variant = Variant {
                kind,
                empty_wildcards: empty,
            };
            inst(&t, &p, Bound::Finite(l), Bound::Finite(w), q, variant)
        })
}

/// Start and length of each letter's image at its first non-wildcard
/// occurrence.
fn image_segments(instance: &Instance, witness: &MatchWitness) -> BTreeMap<Letter, Candidate> {
    let mut out = BTreeMap::new();
    let mut j = 0;
    for (i, &c) in instance.pattern().iter().enumerate() {
        let len = match witness.wildcards.get(&(i + 1)) {
            Some(w) => w.len(),
            None => {
                let len = witness.substitution.get(c).unwrap().len();
                out.entry(c).or_insert(Candidate { start: j, len });
                len
            }
        };
        j += len;
    }
    out
}

proptest! {
    #[test]
    fn solvers_agree(i in arb_instance()) {
        let results: Vec<SolveResult> =
            ALL.iter().map(|&a| solve_with(&i, a, &cfg()).unwrap()).collect();
        for r in &results {
            prop_assert_eq!(r.min_wildcards, results[0].min_wildcards, "{}", r.algorithm);
            prop_assert_eq!(r.matched, r.witness.is_some());
            if let Some(w) = &r.witness {
                prop_assert!(verify_witness(&i, w).passed());
                prop_assert_eq!(Some(w.wildcard_count()), r.min_wildcards);
            }
        }
    }

    #[test]
    fn candidates_contain_true_images(i in arb_instance()) {
        let r = solve_bruteforce(&i, &cfg()).unwrap();
        if let Some(w) = r.witness {
            for (c, seg) in image_segments(&i, &w) {
                let set = candidate_substrings(&i, c).unwrap();
                prop_assert!(set.candidates.contains(&seg));
            }
        }
    }

    #[test]
    fn gpm_match_is_a_gfm_match(i in arb_instance()) {
        let gpm = i.with_variant(Variant { kind: ProblemKind::Gpm, ..i.variant() });
        let gfm = i.with_variant(Variant { kind: ProblemKind::Gfm, ..i.variant() });
        if let Some(w) = solve_bruteforce(&gpm, &cfg()).unwrap().witness {
            prop_assert!(verify_witness(&gfm, &w).passed());
        }
    }

    #[test]
    fn budget_is_monotone(i in arb_instance()) {
        for a in ALL {
            if solve_with(&i, a, &cfg()).unwrap().matched {
                let more = i.with_budget(i.budget() + 1);
                prop_assert!(solve_with(&more, a, &cfg()).unwrap().matched);
            }
        }
    }

    #[test]
    fn auto_agrees_with_brute_force(i in arb_instance()) {
        let auto = solve_auto(&i, &cfg()).unwrap();
        let brute = solve_bruteforce(&i, &cfg()).unwrap();
        prop_assert_eq!(auto.min_wildcards, brute.min_wildcards);
    }
}
