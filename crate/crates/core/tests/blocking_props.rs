use std::collections::HashSet;

use nonrep::blocking::{
    blocking_graph, blocking_set_biconnected, blocking_set_even, blocking_set_even_biconnected,
    blocking_set_even_bridgeless, blocking_set_good_size, validate_blocking_set, BlockingGraph, BlockingSet,
    GOOD_SIZE_EXCLUDED,
};
use nonrep::gen::{enumerate_small, generate, GenKind, GenSpec};
use nonrep::verify::facial_paths;
use nonrep::EmbeddedGraph;
use proptest::prelude::*;

fn normalized(mut p: Vec<usize>) -> Vec<usize> {
    if p.len() > 1 && p[0] > p[p.len() - 1] {
        p.reverse();
    }
    p
}

fn paths_of(bg: &BlockingGraph, outer_only: bool) -> HashSet<Vec<usize>> {
    facial_paths(&bg.graph).into_iter().filter(|p| p.outer || !outer_only).map(|p| p.vertices).collect()
}

/// Every edge on exactly one cycle, outer paths project to outer facial
/// paths, and each inner face meets `B` in a facial path.
fn observations_hold(g: &EmbeddedGraph, b: &BlockingSet) -> Result<(), String> {
    let bg = blocking_graph(g, b).map_err(|e| e.to_string())?;
    if !bg.graph.is_bridgeless_cactus() {
        return Err("blocking graph is not a bridgeless cactus".into());
    }
    let local = |v: usize| b.index_of(v);
    let outer = paths_of(&bg, true);
    for p in facial_paths(g).into_iter().filter(|p| p.outer) {
        let sub: Vec<usize> = p.vertices.iter().filter_map(|&v| local(v)).collect();
        if !sub.is_empty() && !outer.contains(&normalized(sub.clone())) {
            return Err(format!("outer path {:?} projects to {:?}", p.vertices, sub));
        }
    }
    let any = paths_of(&bg, false);
    for f in g.inner_faces() {
        let walk = g.face_vertices(f);
        let k = walk.len();
        let start = (0..k).find(|&i| b.contains(walk[i]) && !b.contains(walk[(i + k - 1) % k]));
        let sub: Vec<usize> = match start {
            Some(s) => (0..k).map(|j| walk[(s + j) % k]).take_while(|&v| b.contains(v)).collect(),
            None => return Err(format!("inner face {f} has no member or is covered")),
        };
        let sub: Vec<usize> = sub.into_iter().map(|v| local(v).unwrap()).collect();
        if !any.contains(&normalized(sub.clone())) {
            return Err(format!("face {f} meets B in {sub:?}, not a facial path"));
        }
    }
    Ok(())
}

fn all_cycles_even(g: &EmbeddedGraph, b: &BlockingSet) -> bool {
    let bg = blocking_graph(g, b).unwrap();
    bg.graph.cactus_cycle_lengths().unwrap().iter().all(|l| l % 2 == 0)
}

#[test]
fn observations_on_every_valid_set_of_small_graphs() {
    let mut checked = 0;
    for n in 1..=7 {
        for g in enumerate_small(GenKind::Outerplane, n).unwrap() {
            for mask in 0u32..(1 << n) {
                let b = BlockingSet::new((0..n).filter(|&v| mask >> v & 1 == 1).collect());
                if validate_blocking_set(&g, &b).is_valid() {
                    observations_hold(&g, &b).unwrap_or_else(|e| panic!("{e} on {}", g.to_json_string()));
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 1000);
}

#[test]
fn constructors_on_every_small_graph() {
    for n in 1..=8 {
        for g in enumerate_small(GenKind::Outerplane, n).unwrap() {
            let b = blocking_set_even(&g).unwrap();
            assert!(validate_blocking_set(&g, &b).is_valid());
            assert!(all_cycles_even(&g, &b));
            observations_hold(&g, &b).unwrap();
            if g.is_biconnected() {
                for v in 0..n {
                    for include in [true, false] {
                        let b = blocking_set_even_biconnected(&g, v, include).unwrap();
                        assert_eq!(b.contains(v), include);
                        assert!(all_cycles_even(&g, &b));
                    }
                }
                let b = blocking_set_good_size(&g).unwrap();
                assert!(!GOOD_SIZE_EXCLUDED.contains(&b.len()));
            }
        }
    }
}

fn spec(kind: GenKind) -> impl Strategy<Value = GenSpec> {
    (3usize..48, any::<u64>(), 0.0f64..1.0).prop_map(move |(n, seed, p)| {
        let mut s = GenSpec::new(kind, n, seed);
        s.chord_prob = p;
        s
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn one_member_per_face(s in spec(GenKind::OuterplaneBiconnected), v in 0usize..48) {
        let g = generate(&s).unwrap();
        let v = v % g.vertex_count();
        for include in [true, false] {
            let b = blocking_set_biconnected(&g, v, include).unwrap();
            prop_assert!(validate_blocking_set(&g, &b).is_valid());
            for f in g.inner_faces() {
                prop_assert_eq!(g.face_vertices(f).iter().filter(|&&x| b.contains(x)).count(), 1);
            }
        }
    }

    #[test]
    fn even_sets_on_outerplane_graphs(s in spec(GenKind::Outerplane)) {
        let g = generate(&s).unwrap();
        let b = blocking_set_even(&g).unwrap();
        prop_assert!(validate_blocking_set(&g, &b).is_valid());
        prop_assert!(all_cycles_even(&g, &b));
        if g.vertex_count() <= 14 {
            prop_assert!(observations_hold(&g, &b).is_ok());
        }
    }

    #[test]
    fn even_sets_on_bridgeless_graphs(s in spec(GenKind::OuterplaneBridgeless)) {
        let g = generate(&s).unwrap();
        let b = blocking_set_even_bridgeless(&g).unwrap();
        prop_assert!(validate_blocking_set(&g, &b).is_valid());
        prop_assert!(all_cycles_even(&g, &b));
    }

    #[test]
    fn good_sizes(s in spec(GenKind::OuterplaneBiconnected)) {
        let g = generate(&s).unwrap();
        let b = blocking_set_good_size(&g).unwrap();
        prop_assert!(validate_blocking_set(&g, &b).is_valid());
        prop_assert!(!GOOD_SIZE_EXCLUDED.contains(&b.len()));
    }
}
