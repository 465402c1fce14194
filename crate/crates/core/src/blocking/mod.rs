//! Blocking sets of outerplane graphs and the blocking graphs they induce.
//!
//! A blocking set `B` leaves a tree in every 2-connected component and
//! misses at least one vertex of every inner face. The blocking graph joins
//! consecutive members of `B` along the outer walk.

mod biconnected;
mod even;
mod graph;

pub use biconnected::{
    blocking_set_biconnected, blocking_set_even_biconnected, blocking_set_even_biconnected_edge, even_biconnected_with,
    Constraint,
};
pub use even::{blocking_set_even, blocking_set_even_bridgeless, blocking_set_good_size, GOOD_SIZE_EXCLUDED};
pub use graph::{blocking_graph, BlockingGraph, BlockingGraphJson};

use serde::{Deserialize, Serialize};

use crate::embed::{EmbeddedGraph, Vertex};
use crate::util::UnionFind;

/// Sorted, duplicate-free vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<Vertex>", into = "Vec<Vertex>")]
pub struct BlockingSet(Vec<Vertex>);

impl From<Vec<Vertex>> for BlockingSet {
    fn from(v: Vec<Vertex>) -> Self {
        BlockingSet::new(v)
    }
}

impl From<BlockingSet> for Vec<Vertex> {
    fn from(b: BlockingSet) -> Self {
        b.0
    }
}

impl BlockingSet {
    pub fn new(mut vertices: Vec<Vertex>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        BlockingSet(vertices)
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        BlockingSet((0..mask.len()).filter(|&v| mask[v]).collect())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        self.0.binary_search(&v).ok()
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &v in &self.0 {
            if v < n {
                m[v] = true;
            }
        }
        m
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    NotOuterplane,
    VertexOutOfRange {
        vertex: Vertex,
    },
    /// The component minus `B` has a cycle or is disconnected or empty.
    BlockNotTree {
        block: Vec<Vertex>,
    },
    FaceCovered {
        face: usize,
    },
    ChordCovered {
        edge: usize,
    },
    /// The face's vertices outside `B` do not form one contiguous run.
    FaceRemainderSplit {
        face: usize,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockingReport {
    pub violations: Vec<Violation>,
}

impl BlockingReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every defining condition and the two derived ones separately.
pub fn validate_blocking_set(g: &EmbeddedGraph, b: &BlockingSet) -> BlockingReport {
    let n = g.vertex_count();
    let mut violations = Vec::new();
    if !g.is_outerplane() {
        violations.push(Violation::NotOuterplane);
        return BlockingReport { violations };
    }
    for &v in b.vertices() {
        if v >= n {
            violations.push(Violation::VertexOutOfRange { vertex: v });
        }
    }
    if !violations.is_empty() {
        return BlockingReport { violations };
    }
    let inb = b.mask(n);

    for block in g.blocks().into_iter().filter(|b| b.is_two_connected()) {
        let rest: Vec<Vertex> = block.vertices.iter().copied().filter(|&v| !inb[v]).collect();
        let local = |v: Vertex| block.vertices.binary_search(&v).expect("edge endpoint in block");
        let mut uf = UnionFind::new(block.vertices.len());
        let mut acyclic = true;
        for &e in &block.edges {
            let (u, w) = g.edge(e);
            if !inb[u] && !inb[w] && !uf.union(local(u), local(w)) {
                acyclic = false;
            }
        }
        let connected = rest.iter().all(|&v| uf.find(local(v)) == uf.find(local(rest[0])));
        if rest.is_empty() || !acyclic || !connected {
            violations.push(Violation::BlockNotTree { block: block.vertices });
        }
    }

    for f in g.inner_faces() {
        let walk = g.face_vertices(f);
        let k = walk.len();
        let runs = (0..k).filter(|&i| !inb[walk[i]] && inb[walk[(i + k - 1) % k]]).count();
        if walk.iter().all(|&v| inb[v]) {
            violations.push(Violation::FaceCovered { face: f });
        } else if runs > 1 {
            violations.push(Violation::FaceRemainderSplit { face: f });
        }
    }

    for e in 0..g.edge_count() {
        let (u, w) = g.edge(e);
        if u != w && g.is_chord(e) && inb[u] && inb[w] {
            violations.push(Violation::ChordCovered { edge: e });
        }
    }
    BlockingReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::fixtures;
    use crate::gen::polygon_with_chords;

    #[test]
    fn whole_vertex_set_is_rejected() {
        let g = fixtures::triangle();
        let r = validate_blocking_set(&g, &BlockingSet::new(vec![0, 1, 2]));
        assert!(r.violations.iter().any(|v| matches!(v, Violation::FaceCovered { .. })));
    }

    #[test]
    fn empty_set_on_triangle_is_rejected() {
        let g = fixtures::triangle();
        let r = validate_blocking_set(&g, &BlockingSet::default());
        assert_eq!(r.violations, vec![Violation::BlockNotTree { block: vec![0, 1, 2] }]);
    }

    #[test]
    fn both_chord_ends_are_rejected() {
        // square 0-1-2-3 with chord 0-2
        let g = polygon_with_chords(4, &[(0, 2)]);
        let r = validate_blocking_set(&g, &BlockingSet::new(vec![0, 2]));
        assert!(r.violations.iter().any(|v| matches!(v, Violation::ChordCovered { .. })));
        assert!(validate_blocking_set(&g, &BlockingSet::new(vec![0])).is_valid());
    }

    #[test]
    fn split_face_remainder_is_rejected() {
        let g = polygon_with_chords(6, &[]);
        let r = validate_blocking_set(&g, &BlockingSet::new(vec![0, 3]));
        assert!(r.violations.iter().any(|v| matches!(v, Violation::FaceRemainderSplit { .. })));
        assert!(validate_blocking_set(&g, &BlockingSet::new(vec![0, 1])).is_valid());
    }

    #[test]
    fn trees_accept_any_set_and_out_of_range_is_reported() {
        let t = EmbeddedGraph::from_edges_any_embedding(3, vec![(0, 1), (1, 2)]).unwrap();
        assert!(validate_blocking_set(&t, &BlockingSet::default()).is_valid());
        assert!(validate_blocking_set(&t, &BlockingSet::new(vec![0, 1, 2])).is_valid());
        let r = validate_blocking_set(&t, &BlockingSet::new(vec![7]));
        assert_eq!(r.violations, vec![Violation::VertexOutOfRange { vertex: 7 }]);
    }

    #[test]
    fn non_outerplane_is_reported() {
        let r = validate_blocking_set(&fixtures::k4(), &BlockingSet::default());
        assert_eq!(r.violations, vec![Violation::NotOuterplane]);
    }

    #[test]
    fn serializes_as_an_array() {
        let b = BlockingSet::new(vec![4, 1, 4]);
        assert_eq!(serde_json::to_string(&b).unwrap(), "[1,4]");
        let back: BlockingSet = serde_json::from_str("[4,1]").unwrap();
        assert_eq!(back, b);
    }
}
