use nonrep::colour::{colour_outerplane, colour_plane};
use nonrep::gen::{enumerate_small, generate, polygon_with_chords, GenKind, GenSpec};
use nonrep::verify::{
    exact_pi_f, facial_paths, facial_paths_naive, verify_facial_nonrepetitive, verify_facial_nonrepetitive_naive,
};
use nonrep::words::has_repetition_naive;
use proptest::prelude::*;

#[test]
fn facial_paths_match_naive_enumeration() {
    for kind in [GenKind::Outerplane, GenKind::Plane, GenKind::CactusEven, GenKind::Tree] {
        for n in 1..=8 {
            for g in enumerate_small(kind, n).unwrap() {
                assert_eq!(facial_paths(&g), facial_paths_naive(&g), "{}", g.to_json_string());
            }
        }
    }
}

#[test]
fn larger_random_graphs_match_naive_enumeration() {
    for seed in 0..60u64 {
        let kind = [GenKind::Outerplane, GenKind::Plane][seed as usize % 2];
        let g = generate(&GenSpec::new(kind, 9 + seed as usize % 2, seed)).unwrap();
        assert_eq!(facial_paths(&g), facial_paths_naive(&g));
    }
}

#[test]
fn cycle_table() {
    for n in 3..=12 {
        let expected = if [5, 7, 9, 10].contains(&n) { 4 } else { 3 };
        assert_eq!(exact_pi_f(&polygon_with_chords(n, &[]), 5).unwrap(), Some(expected), "C_{n}");
    }
}

#[test]
fn exact_never_exceeds_pipeline() {
    for n in 1..=7 {
        for g in enumerate_small(GenKind::Outerplane, n).unwrap() {
            let used = colour_outerplane(&g).unwrap().distinct_colours();
            let exact = exact_pi_f(&g, used).unwrap();
            assert!(exact.is_some_and(|k| k <= used));
        }
        for g in enumerate_small(GenKind::Plane, n).unwrap() {
            let used = colour_plane(&g).unwrap().distinct_colours();
            assert!(exact_pi_f(&g, used).unwrap().is_some());
        }
    }
}

fn graph_and_colours() -> impl Strategy<Value = (GenSpec, Vec<usize>)> {
    (prop::sample::select(vec![GenKind::Outerplane, GenKind::Plane, GenKind::CactusEven]), 2usize..14, any::<u64>())
        .prop_flat_map(|(kind, n, seed)| {
            let spec = GenSpec::new(kind, n, seed);
            let n = generate(&spec).unwrap().vertex_count();
            (Just(spec), prop::collection::vec(1usize..4, n))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn fast_verifier_agrees_with_naive((spec, colours) in graph_and_colours()) {
        let g = generate(&spec).unwrap();
        let fast = verify_facial_nonrepetitive(&g, &colours).unwrap();
        let slow = verify_facial_nonrepetitive_naive(&g, &colours).unwrap();
        prop_assert_eq!(fast.is_none(), slow.is_none());
        if let Some(cx) = fast {
            prop_assert!(has_repetition_naive(&cx.colours).is_some());
            let cols: Vec<usize> = cx.vertices.iter().map(|&v| colours[v]).collect();
            prop_assert_eq!(cols, cx.colours.clone());
            let mut rev = cx.vertices.clone();
            rev.reverse();
            prop_assert!(facial_paths(&g).iter().any(|p| p.vertices == cx.vertices || p.vertices == rev));
        }
    }
}
