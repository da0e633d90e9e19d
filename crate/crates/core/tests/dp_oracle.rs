//! The similarity table against exhaustive placement of wildcards.

use gfm_core::dp::similarity;
use gfm_core::{Bound, Bounds, Instance, Letter, ProblemKind, Substitution, Variant};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Fewest wildcards over every keep/wildcard choice and every wildcard
/// length, for a fixed `f`.
fn oracle(t: &[Letter], p: &[Letter], f: &Substitution, wmin: usize, wmax: usize) -> Option<usize> {
    if p.is_empty() {
        return t.is_empty().then_some(0);
    }
    let mut best: Option<usize> = None;
    if let Some(img) = f.get(p[0]) {
        if !img.is_empty() && t.starts_with(img) {
            best = oracle(&t[img.len()..], &p[1..], f, wmin, wmax);
        }
    }
    for len in wmin..=wmax.min(t.len()) {
        if let Some(v) = oracle(&t[len..], &p[1..], f, wmin, wmax) {
            best = Some(best.map_or(v + 1, |b| b.min(v + 1)));
        }
    }
    best
}

#[test]
fn table_matches_exhaustive_placement() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=7);
        let m = rng.gen_range(1..=5);
        let t: Vec<&str> = (0..n).map(|_| ["x", "y"][rng.gen_range(0..2)]).collect();
        let p: Vec<&str> = (0..m).map(|_| ["a", "b"][rng.gen_range(0..2)]).collect();
        let (l, w) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
        let variant = Variant {
            kind: if rng.gen_bool(0.5) {
                ProblemKind::Gfm
            } else {
                ProblemKind::Gpm
            },
            empty_wildcards: rng.gen_bool(0.5),
        };
        let bounds = Bounds {
            max_letter_len: Bound::Finite(l),
            max_wildcard_len: Bound::Finite(w),
            wildcard_budget: rng.gen_range(0..=2),
        };
        let i = Instance::from_tokens(&t, &p, variant, bounds).unwrap();

        let mut f = Substitution::new();
        for c in i.pattern_letters() {
            if rng.gen_bool(0.85) {
                let len = rng.gen_range(1..=l);
                let img = (0..len)
                    .map(|_| i.sigma_t().letters().nth(rng.gen_range(0..i.sigma_t().len())).unwrap())
                    .collect();
                f.insert(c, img);
            }
        }
        let table = similarity(&i, &f);
        let wmin = variant.min_wildcard_len();
        assert_eq!(
            table.min_wildcards(),
            oracle(i.text(), i.pattern(), &f, wmin, w),
            "{i:?} {f:?}"
        );
    }
}
