use std::collections::HashMap;

use super::{edge_of, Edge, EmbeddedGraph, FaceId, Vertex};
use crate::error::{Error, Result};

/// A biconnected block: a maximal edge set in which every two edges lie on a
/// common cycle, or a single bridge. Loops are never part of a block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }

    /// A 2-connected component in the strict sense: more than two vertices.
    pub fn is_two_connected(&self) -> bool {
        self.vertices.len() >= 3
    }

    pub fn is_cycle(&self) -> bool {
        self.edges.len() >= 2 && self.edges.len() == self.vertices.len()
    }
}

/// Forest on the inner faces with one edge per chord.
#[derive(Clone, Debug)]
pub struct WeakDual {
    pub faces: Vec<FaceId>,
    pub edges: Vec<(usize, usize, Edge)>,
    pub adjacency: Vec<Vec<(usize, Edge)>>,
    index: HashMap<FaceId, usize>,
}

impl WeakDual {
    pub fn node_of(&self, f: FaceId) -> Option<usize> {
        self.index.get(&f).copied()
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adjacency[node].len()
    }

    /// Faces whose node has exactly one neighbour.
    pub fn leaves(&self) -> Vec<FaceId> {
        (0..self.faces.len()).filter(|&i| self.degree(i) == 1).map(|i| self.faces[i]).collect()
    }

    pub fn is_forest(&self) -> bool {
        let mut uf = crate::util::UnionFind::new(self.faces.len());
        self.edges.iter().all(|&(a, b, _)| uf.union(a, b))
    }

    pub fn is_tree(&self) -> bool {
        !self.faces.is_empty() && self.is_forest() && self.edges.len() + 1 == self.faces.len()
    }
}

impl EmbeddedGraph {
    /// Blocks of the graph, ordered by smallest edge id.
    pub fn blocks(&self) -> Vec<Block> {
        let n = self.vertex_count();
        const UNSEEN: usize = usize::MAX;
        let mut disc = vec![UNSEEN; n];
        let mut low = vec![0usize; n];
        let mut time = 0;
        let mut edge_stack: Vec<Edge> = Vec::new();
        let mut blocks = Vec::new();
        // frame: (vertex, edge used to reach it, next rotation index)
        let mut frames: Vec<(Vertex, usize, usize)> = Vec::new();

        for root in 0..n {
            if disc[root] != UNSEEN {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            frames.push((root, usize::MAX, 0));
            while let Some(frame) = frames.last_mut() {
                let (v, parent_edge, idx) = *frame;
                if idx < self.degree(v) {
                    frame.2 += 1;
                    let d = self.rotation(v)[idx];
                    let e = edge_of(d);
                    let w = self.head(d);
                    if e == parent_edge || w == v {
                        continue;
                    }
                    if disc[w] == UNSEEN {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        edge_stack.push(e);
                        frames.push((w, e, 0));
                    } else if disc[w] < disc[v] {
                        edge_stack.push(e);
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    frames.pop();
                    if let Some(&(p, _, _)) = frames.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] >= disc[p] {
                            let mut edges = Vec::new();
                            while let Some(x) = edge_stack.pop() {
                                edges.push(x);
                                if x == parent_edge {
                                    break;
                                }
                            }
                            blocks.push(self.block_from_edges(edges));
                        }
                    }
                }
            }
        }
        blocks.sort_by_key(|b| b.edges[0]);
        blocks
    }

    fn block_from_edges(&self, mut edges: Vec<Edge>) -> Block {
        edges.sort_unstable();
        let mut vertices: Vec<Vertex> = edges.iter().flat_map(|&e| [self.edge(e).0, self.edge(e).1]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        Block { vertices, edges }
    }

    /// Vertex sets of the 2-connected components (blocks with at least three
    /// vertices).
    pub fn biconnected_components(&self) -> Vec<Vec<Vertex>> {
        self.blocks().into_iter().filter(Block::is_two_connected).map(|b| b.vertices).collect()
    }

    pub fn bridges(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> = self.blocks().into_iter().filter(Block::is_bridge).map(|b| b.edges[0]).collect();
        out.sort_unstable();
        out
    }

    pub fn loops(&self) -> Vec<Edge> {
        (0..self.edge_count()).filter(|&e| self.edge(e).0 == self.edge(e).1).collect()
    }

    /// Connected, at least three vertices, and a single block covering every
    /// vertex.
    pub fn is_biconnected(&self) -> bool {
        if self.vertex_count() < 3 || !self.is_connected() {
            return false;
        }
        let blocks = self.blocks();
        blocks.len() == 1 && blocks[0].vertices.len() == self.vertex_count()
    }

    pub fn is_bridgeless(&self) -> bool {
        self.bridges().is_empty()
    }

    /// Every block is a cycle or a bridge.
    pub fn is_cactus(&self) -> bool {
        self.blocks().iter().all(|b| b.is_bridge() || b.is_cycle())
    }

    /// Every edge lies on exactly one cycle (loops count as 1-cycles).
    pub fn is_bridgeless_cactus(&self) -> bool {
        self.blocks().iter().all(Block::is_cycle)
    }

    /// Lengths of all cycles of a cactus: one per cycle block, 1 per loop.
    pub fn cactus_cycle_lengths(&self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for b in self.blocks() {
            if b.is_cycle() {
                out.push(b.edges.len());
            } else if !b.is_bridge() {
                return Err(Error::NotCactus);
            }
        }
        out.extend(self.loops().iter().map(|_| 1));
        Ok(out)
    }

    pub fn is_chord(&self, e: Edge) -> bool {
        !self.is_outer_dart(2 * e) && !self.is_outer_dart(2 * e + 1)
    }

    /// Edges not on the outer face.
    pub fn chords(&self) -> Result<Vec<Edge>> {
        if !self.is_outerplane() {
            return Err(Error::NotOuterplane);
        }
        Ok((0..self.edge_count()).filter(|&e| self.is_chord(e)).collect())
    }

    fn require_simple_outerplane(&self) -> Result<()> {
        if !self.is_outerplane() {
            return Err(Error::NotOuterplane);
        }
        if !self.is_simple() {
            return Err(Error::NotSimple);
        }
        Ok(())
    }

    /// Distinct chords on the boundary of face `f`.
    pub fn face_chords(&self, f: FaceId) -> Vec<Edge> {
        let mut out: Vec<Edge> = self.face_darts(f).iter().map(|&d| edge_of(d)).filter(|&e| self.is_chord(e)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Inner faces incident to exactly one chord, with that chord.
    pub fn ears(&self) -> Result<Vec<(FaceId, Edge)>> {
        self.require_simple_outerplane()?;
        Ok(self
            .inner_faces()
            .filter_map(|f| {
                let c = self.face_chords(f);
                (c.len() == 1).then(|| (f, c[0]))
            })
            .collect())
    }

    pub fn weak_dual(&self) -> Result<WeakDual> {
        self.require_simple_outerplane()?;
        let faces: Vec<FaceId> = self.inner_faces().collect();
        let index: HashMap<FaceId, usize> = faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut edges = Vec::new();
        let mut adjacency = vec![Vec::new(); faces.len()];
        for e in 0..self.edge_count() {
            if self.is_chord(e) {
                let a = index[&self.face_of(2 * e)];
                let b = index[&self.face_of(2 * e + 1)];
                edges.push((a, b, e));
                adjacency[a].push((b, e));
                adjacency[b].push((a, e));
            }
        }
        Ok(WeakDual { faces, edges, adjacency, index })
    }
}

#[cfg(test)]
mod tests {
    use crate::embed::{Corner, RotationBuilder};
    use crate::gen::polygon_with_chords;

    use super::*;

    fn two_triangles_sharing_vertex() -> EmbeddedGraph {
        // triangles 0-1-2 and 2-3-4 glued at 2 on the outer face
        let a = polygon_with_chords(3, &[]);
        let mut b = RotationBuilder::from_graph(&a);
        let x = b.add_vertex();
        let y = b.add_vertex();
        // outer corner at vertex 2 ends with dart 2->0 (edge 2 = (2,0), dart 4)
        let e1 = b.add_edge(Corner::Before(4), Corner::Isolated(x));
        let e2 = b.add_edge(Corner::Before(2 * e1 + 1), Corner::Isolated(y));
        b.add_edge(Corner::Before(2 * e2 + 1), Corner::Before(2 * e1));
        b.build().unwrap()
    }

    #[test]
    fn two_triangles_sharing_a_vertex() {
        let g = two_triangles_sharing_vertex();
        assert!(g.is_outerplane());
        assert_eq!(g.biconnected_components().len(), 2);
        assert!(g.bridges().is_empty());
        assert!(!g.is_biconnected());
        assert!(g.is_bridgeless_cactus());
    }

    #[test]
    fn path_on_four_vertices() {
        let g = EmbeddedGraph::from_edges_any_embedding(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.biconnected_components().len(), 0);
        assert_eq!(g.bridges().len(), 3);
        assert!(g.is_cactus());
        assert!(!g.is_bridgeless_cactus());
    }

    #[test]
    fn fan_on_five_vertices() {
        let g = polygon_with_chords(5, &[(0, 2), (0, 3)]);
        assert_eq!(g.chords().unwrap().len(), 2);
        assert_eq!(g.ears().unwrap().len(), 2);
        let dual = g.weak_dual().unwrap();
        assert!(dual.is_tree());
        let mut leaves = dual.leaves();
        leaves.sort();
        let mut ears: Vec<_> = g.ears().unwrap().into_iter().map(|(f, _)| f).collect();
        ears.sort();
        assert_eq!(leaves, ears);
    }

    #[test]
    fn single_cycle_has_no_chords_or_ears() {
        let g = polygon_with_chords(6, &[]);
        assert!(g.chords().unwrap().is_empty());
        assert!(g.ears().unwrap().is_empty());
        assert!(g.is_biconnected());
    }

    #[test]
    fn two_triangles_sharing_an_edge() {
        let g = polygon_with_chords(4, &[(0, 2)]);
        assert_eq!(g.chords().unwrap(), vec![4]);
        assert_eq!(g.ears().unwrap().len(), 2);
    }

    #[test]
    fn chord_queries_reject_k4() {
        let g = crate::gen::fixtures::k4();
        assert!(!g.is_outerplane());
        assert!(matches!(g.chords(), Err(Error::NotOuterplane)));
        assert!(matches!(g.weak_dual(), Err(Error::NotOuterplane)));
    }

    #[test]
    fn parallel_edges_form_a_two_cycle_block() {
        let g = EmbeddedGraph::build(2, vec![(0, 1), (0, 1)], vec![vec![0, 2], vec![3, 1]], &[0]).unwrap();
        let blocks = g.blocks();
        assert_eq!(blocks.len(), 1);
        assert!(blocks[0].is_cycle());
        assert!(g.bridges().is_empty());
        assert!(!g.is_simple());
    }
}
