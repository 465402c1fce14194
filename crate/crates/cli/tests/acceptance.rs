//! The nine acceptance criteria. Each prints one `PASS` or `FAIL` line;
//! run with `--nocapture` to see them. Tolerances are fixed below.

use std::time::{Duration, Instant};

use nonrep::blocking::{
    blocking_graph, blocking_set_biconnected, blocking_set_even, blocking_set_even_biconnected,
    blocking_set_even_biconnected_edge, blocking_set_even_bridgeless, blocking_set_good_size, validate_blocking_set,
    BlockingSet, GOOD_SIZE_EXCLUDED,
};
use nonrep::colour::{colour_cactus_even, colour_outerplane, colour_outerplane_single_block, colour_plane, Colouring};
use nonrep::gen::{enumerate_small, generate, polygon_with_chords, GenKind, GenSpec};
use nonrep::verify::{exact_pi_f, facial_paths, facial_paths_naive, verify_facial_nonrepetitive};
use nonrep::words::{
    cycle_colouring, cycle_colouring_backtrack, has_repetition_naive, is_cyclically_nonrepetitive, is_nonrepetitive,
    is_palindrome_free, palindrome_free_nonrepetitive, ternary_nonrepetitive, tree_colouring,
};
use nonrep::EmbeddedGraph;
use nonrep_cli::bench::{run_bench, DEFAULT_SIZES};

const OUTERPLANE_INSTANCES: u64 = 1000;
const OUTERPLANE_MAX_N: usize = 60;
const OUTERPLANE_BUDGET: Duration = Duration::from_secs(30);
const PLANE_INSTANCES: u64 = 200;
const PLANE_MAX_N: usize = 120;
const PLANE_BUDGET: Duration = Duration::from_secs(60);
const SINGLE_BLOCK_INSTANCES: u64 = 300;
const CACTUS_INSTANCES: u64 = 300;
const CYCLE_BUDGET: Duration = Duration::from_secs(120);
const WORD_MAX_N: usize = 2000;
const TREE_MAX_N: usize = 16;
const FACIAL_MAX_N: usize = 8;
const MAX_EXPONENT: f64 = 1.3;
const BENCH_REPEAT: usize = 3;
const BENCH_BUDGET: Duration = Duration::from_secs(300);

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= budget, || format!("took {:.1}s, budget {}s", t.as_secs_f64(), budget.as_secs()))
}

/// Recomputes the verdict independently of the colouring pipeline and
/// checks the palette bound.
fn audit(g: &EmbeddedGraph, c: &Colouring, bound: usize, label: &str) -> Result<(), String> {
    ensure(c.verified, || format!("{label}: colouring not marked verified"))?;
    ensure(c.distinct_colours() <= bound, || format!("{label}: {} colours > {bound}", c.distinct_colours()))?;
    match verify_facial_nonrepetitive(g, &c.colours) {
        Ok(None) => Ok(()),
        Ok(Some(cx)) => Err(format!("{label}: repetition on face {} at {:?}", cx.face, cx.vertices)),
        Err(e) => Err(format!("{label}: {e}")),
    }
}

fn corpus(kind: GenKind, count: u64, max_n: usize, min_n: usize) -> impl Iterator<Item = (u64, EmbeddedGraph)> {
    (0..count).map(move |seed| {
        let n = min_n + (seed as usize * 7919) % (max_n - min_n + 1);
        let mut spec = GenSpec::new(kind, n, seed);
        spec.chord_prob = (seed % 11) as f64 / 10.0;
        (seed, generate(&spec).expect("corpus spec is valid"))
    })
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let mut max = 0;
    for (seed, g) in corpus(GenKind::Outerplane, OUTERPLANE_INSTANCES, OUTERPLANE_MAX_N, 1) {
        let c = colour_outerplane(&g).map_err(|e| format!("seed {seed}: {e}"))?;
        audit(&g, &c, 11, &format!("seed {seed}"))?;
        max = max.max(c.distinct_colours());
    }
    within(start, OUTERPLANE_BUDGET)?;
    Ok(format!("{OUTERPLANE_INSTANCES} graphs, at most {max} colours, {:.1}s", start.elapsed().as_secs_f64()))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let mut max = 0;
    for (seed, g) in corpus(GenKind::Plane, PLANE_INSTANCES, PLANE_MAX_N, 1) {
        let c = colour_plane(&g).map_err(|e| format!("seed {seed}: {e}"))?;
        audit(&g, &c, 22, &format!("seed {seed}"))?;
        max = max.max(c.distinct_colours());
    }
    within(start, PLANE_BUDGET)?;
    Ok(format!("{PLANE_INSTANCES} graphs, at most {max} colours, {:.1}s", start.elapsed().as_secs_f64()))
}

fn criterion_3() -> Check {
    let mut max = 0;
    for (seed, g) in corpus(GenKind::OuterplaneBiconnected, SINGLE_BLOCK_INSTANCES, 80, 3) {
        let c = colour_outerplane_single_block(&g).map_err(|e| format!("seed {seed}: {e}"))?;
        audit(&g, &c, 7, &format!("seed {seed}"))?;
        max = max.max(c.distinct_colours());
    }
    Ok(format!("{SINGLE_BLOCK_INSTANCES} graphs, at most {max} colours"))
}

fn criterion_4() -> Check {
    let mut max = 0;
    for (seed, g) in corpus(GenKind::CactusEven, CACTUS_INSTANCES, 80, 1) {
        let c = colour_cactus_even(&g).map_err(|e| format!("seed {seed}: {e}"))?;
        audit(&g, &c, 7, &format!("seed {seed}"))?;
        max = max.max(c.distinct_colours());
    }
    Ok(format!("{CACTUS_INSTANCES} cacti, at most {max} colours"))
}

fn criterion_5() -> Check {
    let start = Instant::now();
    let exceptional = [5, 7, 9, 10, 14, 17];
    for n in 3..=12 {
        let want = if exceptional.contains(&n) { 4 } else { 3 };
        let got = exact_pi_f(&polygon_with_chords(n, &[]), 5).map_err(|e| e.to_string())?;
        ensure(got == Some(want), || format!("exact value of C_{n} is {got:?}, expected {want}"))?;
    }
    for n in 3..=20 {
        let want = if exceptional.contains(&n) { 4 } else { 3 };
        let c = cycle_colouring(n).map_err(|e| e.to_string())?;
        let mut used = c.clone();
        used.sort_unstable();
        used.dedup();
        ensure(is_cyclically_nonrepetitive(&c), || format!("C_{n} colouring {c:?} has a repetitive arc"))?;
        ensure(used.len() == want, || format!("C_{n} uses {} symbols, expected {want}", used.len()))?;
        let three = cycle_colouring_backtrack(n, 3).is_some();
        ensure(three == (want == 3), || format!("C_{n}: 3-colourable is {three}"))?;
    }
    within(start, CYCLE_BUDGET)?;
    Ok(format!("C_3..C_12 exact, C_3..C_20 symbols, {:.1}s", start.elapsed().as_secs_f64()))
}

fn blocking_corpus() -> Vec<(String, EmbeddedGraph)> {
    let mut out = Vec::new();
    for kind in [GenKind::Outerplane, GenKind::OuterplaneBiconnected, GenKind::OuterplaneBridgeless] {
        for n in 1..=8 {
            for (i, g) in enumerate_small(kind, n).unwrap().into_iter().enumerate() {
                out.push((format!("{} n={n} #{i}", kind.name()), g));
            }
        }
        for (seed, g) in corpus(kind, 300, 60, 3) {
            out.push((format!("{} seed {seed}", kind.name()), g));
        }
    }
    out
}

fn check_set(g: &EmbeddedGraph, b: &BlockingSet, even: bool, label: &str) -> Result<(), String> {
    let report = validate_blocking_set(g, b);
    ensure(report.is_valid(), || format!("{label}: {:?}", report.violations))?;
    let bg = blocking_graph(g, b).map_err(|e| format!("{label}: {e}"))?;
    ensure(bg.graph.is_bridgeless_cactus(), || format!("{label}: blocking graph is not a bridgeless cactus"))?;
    if even {
        let lengths = bg.graph.cactus_cycle_lengths().map_err(|e| format!("{label}: {e}"))?;
        ensure(lengths.iter().all(|l| l % 2 == 0), || format!("{label}: odd cycle in {lengths:?}"))?;
    }
    Ok(())
}

fn criterion_6() -> Check {
    let mut sets = 0;
    for (label, g) in blocking_corpus() {
        let fail = |e: nonrep::Error| format!("{label}: {e}");
        let b = blocking_set_even(&g).map_err(fail)?;
        check_set(&g, &b, true, &label)?;
        sets += 1;
        if g.is_bridgeless() && g.vertex_count() != 2 {
            check_set(&g, &blocking_set_even_bridgeless(&g).map_err(fail)?, true, &label)?;
            sets += 1;
        }
        if g.vertex_count() >= 3 && g.is_biconnected() {
            let n = g.vertex_count();
            for v in [0, n / 2, n - 1] {
                for include in [true, false] {
                    let b = blocking_set_biconnected(&g, v, include).map_err(fail)?;
                    check_set(&g, &b, false, &label)?;
                    let b = blocking_set_even_biconnected(&g, v, include).map_err(fail)?;
                    check_set(&g, &b, true, &label)?;
                    ensure(b.contains(v) == include, || format!("{label}: constraint on {v} ignored"))?;
                    sets += 2;
                }
            }
            let outer = (0..g.edge_count()).find(|&e| !g.is_chord(e)).expect("a block has outer edges");
            let (a, c) = g.edge(outer);
            let b = blocking_set_even_biconnected_edge(&g, a, c).map_err(fail)?;
            check_set(&g, &b, true, &label)?;
            ensure(b.contains(c) && !b.contains(a), || format!("{label}: edge constraint ignored"))?;
            let b = blocking_set_good_size(&g).map_err(fail)?;
            check_set(&g, &b, false, &label)?;
            ensure(!GOOD_SIZE_EXCLUDED.contains(&b.len()), || format!("{label}: good size {}", b.len()))?;
            sets += 2;
        }
    }
    Ok(format!("{sets} blocking sets"))
}

/// Every path of a tree, by depth-first search from each vertex.
fn tree_paths(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for s in 0..adj.len() {
        let mut stack = vec![(vec![s], usize::MAX)];
        while let Some((path, parent)) = stack.pop() {
            let v = *path.last().unwrap();
            for &w in &adj[v] {
                if w != parent {
                    let mut p = path.clone();
                    p.push(w);
                    stack.push((p, v));
                }
            }
            out.push(path);
        }
    }
    out
}

fn criterion_7() -> Check {
    for n in 0..=WORD_MAX_N {
        let t = ternary_nonrepetitive(n);
        ensure(t.len() == n && t.iter().all(|&s| s < 3), || format!("ternary word of length {n} malformed"))?;
        ensure(is_nonrepetitive(&t), || format!("ternary word of length {n} has a square"))?;
        let p = palindrome_free_nonrepetitive(n);
        ensure(p.len() == n && p.iter().all(|&s| s < 4), || format!("palindrome-free word of length {n} malformed"))?;
        ensure(is_nonrepetitive(&p) && is_palindrome_free(&p), || format!("palindrome-free word of length {n} fails"))?;
    }
    let enumerated = (1..=9).flat_map(|n| enumerate_small(GenKind::Tree, n).unwrap());
    let random =
        (0..400u64).map(|s| generate(&GenSpec::new(GenKind::Tree, 10 + s as usize % (TREE_MAX_N - 9), s)).unwrap());
    let mut trees = 0;
    for t in enumerated.chain(random) {
        let adj = t.simple_adjacency();
        for root in [0, t.vertex_count() - 1] {
            let c = tree_colouring(&t, root, [1, 2, 3, 4]).map_err(|e| e.to_string())?;
            for p in tree_paths(&adj) {
                let seq: Vec<usize> = p.iter().map(|&v| c[v]).collect();
                ensure(has_repetition_naive(&seq).is_none(), || format!("tree path {p:?} coloured {seq:?}"))?;
            }
        }
        trees += 1;
    }
    Ok(format!("words up to {WORD_MAX_N}, {trees} trees up to {TREE_MAX_N} vertices"))
}

fn criterion_8() -> Check {
    let mut graphs = 0;
    for kind in GenKind::ALL {
        for n in 1..=FACIAL_MAX_N {
            for g in enumerate_small(kind, n).map_err(|e| e.to_string())? {
                ensure(facial_paths(&g) == facial_paths_naive(&g), || format!("mismatch on {}", g.to_json_string()))?;
                graphs += 1;
            }
        }
    }
    let digits = |s: &str| s.bytes().map(|b| (b - b'0') as usize).collect::<Vec<_>>();
    ensure(has_repetition_naive(&digits("1312124")).is_some(), || "1312124 judged nonrepetitive".into())?;
    ensure(!is_nonrepetitive(&digits("1312124")), || "1312124 judged nonrepetitive".into())?;
    for s in ["123213", "1213"] {
        ensure(is_nonrepetitive(&digits(s)) && has_repetition_naive(&digits(s)).is_none(), || {
            format!("{s} judged repetitive")
        })?;
    }
    ensure(!is_nonrepetitive(&digits("1212")), || "1212 judged nonrepetitive".into())?;
    Ok(format!("{graphs} small graphs, sequence examples reproduced"))
}

fn criterion_9() -> Check {
    let start = Instant::now();
    let report = run_bench(GenKind::Outerplane, &DEFAULT_SIZES, BENCH_REPEAT, 0).map_err(|e| e.to_string())?;
    within(start, BENCH_BUDGET)?;
    let pts: Vec<String> = report.points.iter().map(|p| format!("{}:{:.0}ms", p.n, p.min_ms)).collect();
    ensure(report.exponent <= MAX_EXPONENT, || {
        format!("exponent {:.3} > {MAX_EXPONENT} ({})", report.exponent, pts.join(" "))
    })?;
    Ok(format!("exponent {:.3} ({})", report.exponent, pts.join(" ")))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("outerplane bound", criterion_1),
        ("plane bound", criterion_2),
        ("single-block bound", criterion_3),
        ("cactus bound", criterion_4),
        ("cycle table", criterion_5),
        ("blocking invariants", criterion_6),
        ("word properties", criterion_7),
        ("oracle cross-checks", criterion_8),
        ("scaling", criterion_9),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {}: {name} ({detail})", i + 1),
            Err(why) => {
                println!("FAIL {}: {name} ({why})", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
