//! Seeded random and exhaustive instance generators.

mod enumerate;
pub mod fixtures;
mod growth;

pub use enumerate::{enumerate_small, ENUMERATE_GUARD};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::embed::{Dart, EmbeddedGraph, Vertex};
use crate::error::{Error, Result};
use growth::Growth;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenKind {
    Tree,
    Cycle,
    CactusEven,
    Outerplane,
    OuterplaneBiconnected,
    OuterplaneBridgeless,
    Plane,
}

impl GenKind {
    pub const ALL: [GenKind; 7] = [
        GenKind::Tree,
        GenKind::Cycle,
        GenKind::CactusEven,
        GenKind::Outerplane,
        GenKind::OuterplaneBiconnected,
        GenKind::OuterplaneBridgeless,
        GenKind::Plane,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GenKind::Tree => "tree",
            GenKind::Cycle => "cycle",
            GenKind::CactusEven => "cactus_even",
            GenKind::Outerplane => "outerplane",
            GenKind::OuterplaneBiconnected => "outerplane_biconnected",
            GenKind::OuterplaneBridgeless => "outerplane_bridgeless",
            GenKind::Plane => "plane",
        }
    }

    /// Whether `g` belongs to the class.
    pub fn contains(self, g: &EmbeddedGraph) -> bool {
        let simple_outerplane = || g.is_connected() && g.is_outerplane() && g.is_simple();
        match self {
            GenKind::Tree => g.is_tree() && g.is_simple(),
            GenKind::Cycle => {
                simple_outerplane() && g.vertex_count() >= 3 && g.edge_count() == g.vertex_count() && g.is_biconnected()
            }
            GenKind::CactusEven => {
                g.is_connected()
                    && g.is_outerplane()
                    && !g.has_loops()
                    && g.cactus_cycle_lengths().is_ok_and(|c| c.iter().all(|l| l % 2 == 0))
            }
            GenKind::Outerplane => simple_outerplane(),
            GenKind::OuterplaneBiconnected => simple_outerplane() && g.is_biconnected(),
            GenKind::OuterplaneBridgeless => simple_outerplane() && g.is_bridgeless(),
            GenKind::Plane => g.is_connected() && g.is_simple(),
        }
    }
}

impl std::str::FromStr for GenKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GenKind::ALL
            .into_iter()
            .find(|k| k.name() == s || k.name().replace('_', "-") == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown kind {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub kind: GenKind,
    pub n: usize,
    pub seed: u64,
    /// Probability of keeping each chord of a random triangulation.
    pub chord_prob: f64,
    /// Probability that a growth step adds a pendant edge instead of a block.
    pub attach_prob: f64,
}

impl GenSpec {
    pub fn new(kind: GenKind, n: usize, seed: u64) -> Self {
        GenSpec { kind, n, seed, chord_prob: 0.5, attach_prob: 0.3 }
    }

    fn validate(&self) -> Result<()> {
        let probs = [self.chord_prob, self.attach_prob];
        if probs.iter().any(|p| !(0.0..=1.0).contains(p)) {
            return Err(Error::InvalidSpec("probabilities must lie in [0, 1]".into()));
        }
        let min = match self.kind {
            GenKind::Cycle | GenKind::OuterplaneBiconnected => 3,
            _ => 1,
        };
        if self.n < min {
            return Err(Error::InvalidSpec(format!("{} needs n >= {min}", self.kind.name())));
        }
        if self.kind == GenKind::OuterplaneBridgeless && self.n == 2 {
            return Err(Error::InvalidSpec("no simple bridgeless connected graph has 2 vertices".into()));
        }
        Ok(())
    }
}

/// Random graph of the requested class; identical seeds give identical
/// graphs.
pub fn generate(spec: &GenSpec) -> Result<EmbeddedGraph> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let g = match spec.kind {
        GenKind::Tree => {
            let mut b = Growth::new();
            while b.vertex_count() < spec.n {
                let v = b.random_vertex(&mut rng);
                b.attach_pendant(v);
            }
            b.finish()?
        }
        GenKind::Cycle => polygon_with_chords(spec.n, &[]),
        GenKind::OuterplaneBiconnected => {
            let chords = random_chords(spec.n, spec.chord_prob, &mut rng);
            try_polygon_with_chords(spec.n, &chords)?
        }
        GenKind::Outerplane | GenKind::OuterplaneBridgeless | GenKind::CactusEven => grow(spec, &mut rng)?,
        GenKind::Plane => plane(spec, &mut rng)?,
    };
    let g = shuffle_labels(&g, &mut rng);
    if !spec.kind.contains(&g) {
        return Err(Error::GeneratorBug(format!("{} instance with n = {}", spec.kind.name(), spec.n)));
    }
    Ok(g)
}

fn shuffle_labels(g: &EmbeddedGraph, rng: &mut ChaCha8Rng) -> EmbeddedGraph {
    let mut perm: Vec<Vertex> = (0..g.vertex_count()).collect();
    perm.shuffle(rng);
    g.relabel(&perm)
}

/// Grows a connected outerplane graph by gluing blocks and pendant edges
/// into outer corners.
fn grow(spec: &GenSpec, rng: &mut ChaCha8Rng) -> Result<EmbeddedGraph> {
    let n = spec.n;
    let mut b = Growth::new();
    while b.vertex_count() < n {
        let rem = n - b.vertex_count();
        let v = b.random_vertex(rng);
        match spec.kind {
            GenKind::Outerplane => {
                if rem < 2 || rng.gen_bool(spec.attach_prob) {
                    b.attach_pendant(v);
                } else {
                    let m = rng.gen_range(3..=(rem + 1).min(max_block(n)));
                    let chords = random_chords(m, spec.chord_prob, rng);
                    b.attach_polygon(v, m, &chords);
                }
            }
            GenKind::OuterplaneBridgeless => {
                debug_assert!(rem >= 2);
                let mut m = rng.gen_range(3..=(rem + 1).min(max_block(n)).max(3));
                if rem + 1 - m == 1 {
                    m += 1;
                }
                let chords = random_chords(m, spec.chord_prob, rng);
                b.attach_polygon(v, m, &chords);
            }
            GenKind::CactusEven => {
                if rem >= 3 && !rng.gen_bool(spec.attach_prob) {
                    let top = (rem + 1).min(max_block(n)).max(4) / 2;
                    let m = 2 * rng.gen_range(2..=top);
                    b.attach_polygon(v, m, &[]);
                } else if rng.gen_bool(0.2) {
                    b.attach_polygon(v, 2, &[]);
                } else {
                    b.attach_pendant(v);
                }
            }
            _ => unreachable!("not a growth kind"),
        }
    }
    b.finish()
}

fn max_block(n: usize) -> usize {
    (n as f64).sqrt() as usize + 6
}

/// Non-crossing chords of a uniformly random triangulation of the
/// `m`-gon (through Rémy's random binary trees), each kept with
/// probability `p`.
pub fn random_chords<R: Rng>(m: usize, p: f64, rng: &mut R) -> Vec<(Vertex, Vertex)> {
    if m < 4 {
        return Vec::new();
    }
    let internal = m - 2;
    const NONE: usize = usize::MAX;
    let mut left = vec![NONE; 2 * internal + 1];
    let mut right = vec![NONE; 2 * internal + 1];
    let mut parent = vec![NONE; 2 * internal + 1];
    let mut root = 0;
    let mut nodes = 1;
    for _ in 0..internal {
        let x = rng.gen_range(0..nodes);
        let (y, z) = (nodes, nodes + 1);
        nodes += 2;
        let px = parent[x];
        if px == NONE {
            root = y;
        } else if left[px] == x {
            left[px] = y;
        } else {
            right[px] = y;
        }
        parent[y] = px;
        if rng.gen_bool(0.5) {
            (left[y], right[y]) = (x, z);
        } else {
            (left[y], right[y]) = (z, x);
        }
        parent[x] = y;
        parent[z] = y;
    }
    let mut leaves = vec![1usize; nodes];
    let mut order = vec![root];
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        i += 1;
        if left[v] != NONE {
            order.push(left[v]);
            order.push(right[v]);
        }
    }
    for &v in order.iter().rev() {
        if left[v] != NONE {
            leaves[v] = leaves[left[v]] + leaves[right[v]];
        }
    }
    let mut chords = Vec::new();
    let mut stack = vec![(root, 0usize, m - 1)];
    while let Some((v, a, b)) = stack.pop() {
        if left[v] == NONE {
            continue;
        }
        let mid = a + leaves[left[v]];
        for (x, y) in [(a, mid), (mid, b)] {
            if y - x >= 2 && rng.gen_bool(p) {
                chords.push((x, y));
            }
        }
        stack.push((left[v], a, mid));
        stack.push((right[v], mid, b));
    }
    chords.sort_unstable();
    chords
}

/// Inserts vertices into random faces of a growing plane graph, each joined
/// to several distinct vertices of its face.
fn plane(spec: &GenSpec, rng: &mut ChaCha8Rng) -> Result<EmbeddedGraph> {
    use crate::embed::{Corner, RotationBuilder};
    let n = spec.n;
    if n < 3 {
        let edges = (1..n).map(|i| (i - 1, i)).collect();
        return EmbeddedGraph::from_edges_any_embedding(n, edges);
    }
    let mut b = RotationBuilder::from_graph(&polygon_with_chords(3, &[]));
    // one dart per face; the faces around a new vertex each hold exactly
    // one of its outgoing darts
    let mut faces: Vec<Dart> = vec![0, 1];
    let mut stamp: Vec<usize> = vec![usize::MAX; n];
    while b.vertex_count() < n {
        let fi = rng.gen_range(0..faces.len());
        let walk = b.face_walk(faces[fi]);
        let mut positions: Vec<usize> = Vec::new();
        let offset = rng.gen_range(0..walk.len());
        let step = b.vertex_count();
        for k in 0..walk.len() {
            let i = (offset + k) % walk.len();
            let v = b.origin(walk[i]);
            if stamp[v] != step {
                stamp[v] = step;
                positions.push(i);
            }
        }
        positions.shuffle(rng);
        let k = if positions.len() == 1 || rng.gen_bool(spec.attach_prob / 2.0) {
            1
        } else {
            rng.gen_range(2..=positions.len())
        };
        positions.truncate(k);
        positions.sort_unstable();
        let x = b.add_vertex();
        let mut at_x = Corner::Isolated(x);
        for (j, &i) in positions.iter().enumerate() {
            let e = b.add_edge(Corner::Before(walk[i]), at_x);
            at_x = Corner::Before(2 * e + 1);
            if j == 0 {
                faces[fi] = 2 * e + 1;
            } else {
                faces.push(2 * e + 1);
            }
        }
    }
    b.set_outer_darts(vec![0]);
    b.build()
}

/// The `n`-gon on `0..n` (counterclockwise) with the given chords. Edge `i`
/// is `(i, i + 1 mod n)` for `i < n`; chords follow in the given order.
pub fn try_polygon_with_chords(n: usize, chords: &[(Vertex, Vertex)]) -> Result<EmbeddedGraph> {
    if n < 3 {
        return Err(Error::CycleTooShort(n));
    }
    let mut edges: Vec<(Vertex, Vertex)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend_from_slice(chords);
    circle_graph(n, edges)
}

pub fn polygon_with_chords(n: usize, chords: &[(Vertex, Vertex)]) -> EmbeddedGraph {
    try_polygon_with_chords(n, chords).expect("valid polygon with non-crossing chords")
}

/// Straight-line drawing with vertices `0..n` in convex position,
/// counterclockwise. Each component's outer face is the one facing away
/// from the polygon's interior at its smallest vertex.
pub fn circle_graph(n: usize, edges: Vec<(Vertex, Vertex)>) -> Result<EmbeddedGraph> {
    let mut rotations: Vec<Vec<(usize, Dart)>> = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        if u >= n || v >= n || u == v {
            return Err(Error::Malformed(format!("edge {i} is not a chord of the {n}-gon")));
        }
        rotations[u].push(((v + n - u) % n, 2 * i));
        rotations[v].push(((u + n - v) % n, 2 * i + 1));
    }
    let rotations: Vec<Vec<Dart>> = rotations
        .into_iter()
        .map(|mut r| {
            r.sort_unstable();
            r.into_iter().map(|(_, d)| d).collect()
        })
        .collect();
    let mut uf = crate::util::UnionFind::new(n);
    for &(u, v) in &edges {
        uf.union(u, v);
    }
    let mut outer = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for v in 0..n {
        if let Some(&d) = rotations[v].first() {
            if seen.insert(uf.find(v)) {
                outer.push(d);
            }
        }
    }
    EmbeddedGraph::build(n, edges, rotations, &outer)
}

/// Straight-line drawing from coordinates; rotations sorted by angle. The
/// outer face of each component is found at its leftmost vertex.
pub fn from_drawing(points: &[(f64, f64)], edges: Vec<(Vertex, Vertex)>) -> Result<EmbeddedGraph> {
    let n = points.len();
    let angle = |a: Vertex, b: Vertex| (points[b].1 - points[a].1).atan2(points[b].0 - points[a].0);
    let mut rotations: Vec<Vec<(f64, Dart)>> = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        rotations[u].push((angle(u, v), 2 * i));
        rotations[v].push((angle(v, u), 2 * i + 1));
    }
    let rotations: Vec<Vec<Dart>> = rotations
        .into_iter()
        .map(|mut r| {
            r.sort_by(|a, b| a.0.total_cmp(&b.0));
            r.into_iter().map(|(_, d)| d).collect()
        })
        .collect();
    let mut uf = crate::util::UnionFind::new(n);
    for &(u, v) in &edges {
        uf.union(u, v);
    }
    let mut leftmost: std::collections::BTreeMap<usize, Vertex> = Default::default();
    for v in (0..n).filter(|&v| !rotations[v].is_empty()) {
        let c = uf.find(v);
        let e = leftmost.entry(c).or_insert(v);
        if points[v].0 < points[*e].0 || (points[v].0 == points[*e].0 && points[v].1 < points[*e].1) {
            *e = v;
        }
    }
    let outer: Vec<Dart> = leftmost.values().map(|&v| rotations[v][0]).collect();
    EmbeddedGraph::build(n, edges, rotations, &outer)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_of_five() {
        let g = generate(&GenSpec::new(GenKind::Cycle, 5, 0)).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 5);
        assert!(g.is_biconnected());
    }

    #[test]
    fn biconnected_example() {
        let g = generate(&GenSpec::new(GenKind::OuterplaneBiconnected, 12, 7)).unwrap();
        assert!(g.is_outerplane());
        assert!(g.is_biconnected());
    }

    #[test]
    fn plane_example() {
        let g = generate(&GenSpec::new(GenKind::Plane, 30, 1)).unwrap();
        assert_eq!(g.vertex_count(), 30);
        let v = g.vertex_count() as i64;
        assert_eq!(v - g.edge_count() as i64 + g.face_count() as i64, 2);
    }

    #[test]
    fn seeds_reproduce() {
        for kind in GenKind::ALL {
            let spec = GenSpec::new(kind, 25, 3);
            let a = generate(&spec).unwrap().to_json_string();
            let b = generate(&spec).unwrap().to_json_string();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn every_kind_and_size_passes_its_predicate() {
        for kind in GenKind::ALL {
            for n in 1..40 {
                for seed in 0..5 {
                    let spec = GenSpec::new(kind, n, seed);
                    match generate(&spec) {
                        Ok(g) => {
                            assert_eq!(g.vertex_count(), n, "{kind:?} n={n}");
                            assert!(kind.contains(&g));
                        }
                        Err(Error::InvalidSpec(_)) => assert!(n < 3),
                        Err(e) => panic!("{kind:?} n={n} seed={seed}: {e}"),
                    }
                }
            }
        }
    }

    #[test]
    fn triangulation_chords_are_complete() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for m in 4..20 {
            let chords = random_chords(m, 1.0, &mut rng);
            assert_eq!(chords.len(), m - 3);
            let g = polygon_with_chords(m, &chords);
            assert!(g.face_walks().iter().filter(|w| !w.outer).all(|w| w.darts.len() == 3));
        }
    }

    #[test]
    fn rejects_bad_specs() {
        let mut spec = GenSpec::new(GenKind::Outerplane, 10, 0);
        spec.chord_prob = 1.5;
        assert!(matches!(generate(&spec), Err(Error::InvalidSpec(_))));
        assert!(matches!(generate(&GenSpec::new(GenKind::Cycle, 2, 0)), Err(Error::InvalidSpec(_))));
        assert!("nope".parse::<GenKind>().is_err());
        assert_eq!("cactus-even".parse::<GenKind>().unwrap(), GenKind::CactusEven);
    }
}
