use std::collections::HashSet;

use nonrep::gen::{enumerate_small, generate, GenKind, GenSpec};
use nonrep::verify::facial_paths;
use nonrep::EmbeddedGraph;
use proptest::prelude::*;

fn any_spec() -> impl Strategy<Value = GenSpec> {
    (0usize..GenKind::ALL.len(), 3usize..60, any::<u64>(), 0.0f64..1.0, 0.0f64..1.0).prop_map(|(k, n, seed, p, q)| {
        let mut s = GenSpec::new(GenKind::ALL[k], n, seed);
        s.chord_prob = p;
        s.attach_prob = q;
        s
    })
}

fn outerplane_spec() -> impl Strategy<Value = GenSpec> {
    (1usize..30, any::<u64>()).prop_map(|(n, seed)| GenSpec::new(GenKind::Outerplane, n, seed))
}

fn euler_per_component(g: &EmbeddedGraph) -> bool {
    let c = g.component_count();
    let mut v = vec![0i64; c];
    let mut e = vec![0i64; c];
    let mut f = vec![0i64; c];
    for x in 0..g.vertex_count() {
        v[g.component_of(x)] += 1;
    }
    for &(a, _) in g.edges() {
        e[g.component_of(a)] += 1;
    }
    for w in g.face_walks() {
        f[g.component_of(w.vertices[0])] += 1;
    }
    (0..c).all(|i| e[i] == 0 || v[i] - e[i] + f[i] == 2)
}

fn rebuilds(g: &EmbeddedGraph) -> bool {
    EmbeddedGraph::from_json_str(&g.to_json_string()).is_ok_and(|h| h.face_walks() == g.face_walks())
}

/// Adds loops in random faces and parallel edges in random inner faces.
fn thicken(mut g: EmbeddedGraph, picks: &[(usize, usize, bool)]) -> EmbeddedGraph {
    for &(f, i, is_loop) in picks {
        let faces: Vec<usize> = if is_loop { (0..g.face_count()).collect() } else { g.inner_faces().collect() };
        if faces.is_empty() {
            continue;
        }
        let f = faces[f % faces.len()];
        let walk = g.face_vertices(f);
        let u = walk[i % walk.len()];
        let w = if is_loop { u } else { walk[(i % walk.len() + 1) % walk.len()] };
        g = g.add_edge_in_face(u, w, f, (0, 0)).unwrap().0;
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn faces_partition_darts_and_euler_holds(s in any_spec()) {
        let g = generate(&s).unwrap();
        let walks = g.face_walks();
        let total: usize = walks.iter().map(|w| w.darts.len()).sum();
        prop_assert_eq!(total, g.dart_count());
        let distinct: HashSet<usize> = walks.iter().flat_map(|w| w.darts.iter().copied()).collect();
        prop_assert_eq!(distinct.len(), g.dart_count());
        prop_assert!(euler_per_component(&g));
        prop_assert!(rebuilds(&g));
    }

    #[test]
    fn outerplane_iff_outer_walk_covers_all(s in any_spec()) {
        let g = generate(&s).unwrap();
        let on_outer: HashSet<usize> = g.outer_faces().flat_map(|f| g.face_vertices(f)).collect();
        let isolated = (0..g.vertex_count()).filter(|&v| g.degree(v) == 0).count();
        prop_assert_eq!(g.is_outerplane(), on_outer.len() + isolated == g.vertex_count());
    }

    #[test]
    fn ears_are_weak_dual_leaves(s in any_spec()) {
        let g = generate(&GenSpec { kind: GenKind::OuterplaneBiconnected, ..s }).unwrap();
        let mut ears: Vec<usize> = g.ears().unwrap().into_iter().map(|(f, _)| f).collect();
        let dual = g.weak_dual().unwrap();
        let mut leaves = dual.leaves();
        ears.sort_unstable();
        leaves.sort_unstable();
        prop_assert_eq!(ears, leaves);
        prop_assert!(dual.is_tree());
    }

    #[test]
    fn surgery_results_revalidate(s in any_spec(), pick in any::<u64>()) {
        let g = generate(&s).unwrap();
        let n = g.vertex_count();
        let keep: Vec<bool> = (0..n).map(|v| (pick >> (v % 64)) & 1 == 1).collect();
        let (sub, _) = g.induced_embedded_subgraph(&keep);
        prop_assert!(rebuilds(&sub) && euler_per_component(&sub));
        if g.edge_count() > 0 {
            let e = (pick as usize) % g.edge_count();
            let (a, b) = g.edge(e);
            if a != b {
                let c = g.contract_edge(e).unwrap().graph;
                prop_assert!(rebuilds(&c) && euler_per_component(&c));
                prop_assert_eq!(c.vertex_count(), n - 1);
            }
        }
        let f = (pick as usize) % g.face_count().max(1);
        if g.face_count() > 0 {
            let walk = g.face_vertices(f);
            let (u, w) = (walk[0], walk[walk.len() / 2]);
            let (h, _) = g.add_edge_in_face(u, w, f, (0, 0)).unwrap();
            prop_assert!(rebuilds(&h) && euler_per_component(&h));
            prop_assert_eq!(h.face_count(), g.face_count() + 1);
        }
    }

    #[test]
    fn outerplane_graphs_survive_thickening(
        s in outerplane_spec(),
        picks in prop::collection::vec((0usize..64, 0usize..64, any::<bool>()), 0..6),
    ) {
        let g = generate(&s).unwrap();
        let thick = thicken(g.clone(), &picks);
        prop_assert!(thick.is_outerplane());
        let simple = thick.simplify().graph;
        prop_assert!(simple.is_simple() && simple.is_outerplane());
        let ours: HashSet<Vec<usize>> = facial_paths(&simple).into_iter().map(|p| p.vertices).collect();
        for p in facial_paths(&thick) {
            prop_assert!(ours.contains(&p.vertices), "{:?} lost by simplify", p.vertices);
        }
    }
}

#[test]
fn rebuilding_is_deterministic_on_small_graphs() {
    for kind in [GenKind::Outerplane, GenKind::Plane, GenKind::CactusEven] {
        for n in 1..=6 {
            for g in enumerate_small(kind, n).unwrap() {
                assert!(rebuilds(&g));
                assert!(euler_per_component(&g));
            }
        }
    }
}

#[test]
fn seeds_give_identical_bytes() {
    for kind in GenKind::ALL {
        for seed in 0..10 {
            let s = GenSpec::new(kind, 25, seed);
            assert_eq!(generate(&s).unwrap().to_json_string(), generate(&s).unwrap().to_json_string());
        }
    }
}
