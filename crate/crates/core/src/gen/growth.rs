use rand::Rng;

use crate::embed::{Dart, EmbeddedGraph, Vertex};
use crate::error::Result;

/// Connected outerplane graph under construction. Pieces are glued into
/// the outer corner of an existing vertex, so the outer face keeps
/// containing dart 0.
pub(super) struct Growth {
    edges: Vec<(Vertex, Vertex)>,
    rotations: Vec<Vec<Dart>>,
    /// Index in the rotation before which the vertex's outer corner lies.
    outer_pos: Vec<usize>,
}

impl Growth {
    pub(super) fn new() -> Self {
        Growth { edges: Vec::new(), rotations: vec![Vec::new()], outer_pos: vec![0] }
    }

    pub(super) fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub(super) fn random_vertex<R: Rng>(&self, rng: &mut R) -> Vertex {
        rng.gen_range(0..self.vertex_count())
    }

    fn add_vertex(&mut self) -> Vertex {
        self.rotations.push(Vec::new());
        self.outer_pos.push(0);
        self.rotations.len() - 1
    }

    pub(super) fn attach_pendant(&mut self, v: Vertex) -> Vertex {
        let w = self.add_vertex();
        let e = self.edges.len();
        self.edges.push((v, w));
        self.rotations[v].insert(self.outer_pos[v], 2 * e);
        self.rotations[w].push(2 * e + 1);
        w
    }

    /// Glues an `m`-gon (`m >= 2`, a digon being two parallel edges) with
    /// the given chords at `v`, which becomes the polygon's vertex 0.
    pub(super) fn attach_polygon(&mut self, v: Vertex, m: usize, chords: &[(usize, usize)]) {
        let mut local = vec![v];
        for _ in 1..m {
            local.push(self.add_vertex());
        }
        let base = self.edges.len();
        let mut lists: Vec<Vec<(usize, Dart)>> = vec![Vec::new(); m];
        for i in 0..m {
            let j = (i + 1) % m;
            self.edges.push((local[i], local[j]));
            let e = base + i;
            lists[i].push((0, 2 * e));
            lists[j].push((m, 2 * e + 1));
        }
        for (k, &(a, b)) in chords.iter().enumerate() {
            let e = base + m + k;
            self.edges.push((local[a], local[b]));
            lists[a].push(((b + m - a) % m, 2 * e));
            lists[b].push(((a + m - b) % m, 2 * e + 1));
        }
        for (i, mut list) in lists.into_iter().enumerate() {
            list.sort_unstable();
            let darts = list.into_iter().map(|(_, d)| d);
            if i == 0 {
                let at = self.outer_pos[v];
                self.rotations[v].splice(at..at, darts);
            } else {
                self.rotations[local[i]] = darts.collect();
            }
        }
    }

    pub(super) fn finish(self) -> Result<EmbeddedGraph> {
        let outer: &[Dart] = if self.edges.is_empty() { &[] } else { &[0] };
        EmbeddedGraph::build(self.rotations.len(), self.edges, self.rotations, outer)
    }
}
