use super::builder::Corner;
use super::{edge_of, twin, Dart, Edge, EmbeddedGraph, FaceId, RotationBuilder, Traced, Vertex};
use crate::error::{Error, Result};
use crate::util::UnionFind;

/// Relates a subgraph to its host. New ids are assigned in increasing order
/// of old ids, so both lists are sorted and lookups are binary searches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphMap {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

impl SubgraphMap {
    pub fn old_vertex(&self, v: Vertex) -> Vertex {
        self.vertices[v]
    }

    pub fn new_vertex(&self, old: Vertex) -> Option<Vertex> {
        self.vertices.binary_search(&old).ok()
    }

    pub fn old_edge(&self, e: Edge) -> Edge {
        self.edges[e]
    }

    pub fn new_edge(&self, old: Edge) -> Option<Edge> {
        self.edges.binary_search(&old).ok()
    }

    pub fn old_dart(&self, d: Dart) -> Dart {
        2 * self.edges[edge_of(d)] + (d & 1)
    }

    pub fn new_dart(&self, old: Dart) -> Option<Dart> {
        self.new_edge(edge_of(old)).map(|e| 2 * e + (old & 1))
    }
}

#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: EmbeddedGraph,
    /// Old vertex to merged vertex.
    pub vertex_map: Vec<Vertex>,
    /// Old edge to new edge; `None` for contracted edges.
    pub edge_map: Vec<Option<Edge>>,
}

#[derive(Clone, Debug)]
pub struct Simplification {
    pub graph: EmbeddedGraph,
    /// Old edge to the new edge representing its parallel class; `None` for
    /// loops.
    pub edge_map: Vec<Option<Edge>>,
}

impl EmbeddedGraph {
    /// Subgraph on the kept vertices using the kept edges among them.
    ///
    /// The outer face of each surviving component is the face holding a dart
    /// that was on an old outer face. If none survives, the face whose region
    /// merged with an old outer face through deleted elements is used, and
    /// failing that the longest face.
    pub fn subgraph(&self, keep_vertex: &[bool], keep_edge: Option<&[bool]>) -> (EmbeddedGraph, SubgraphMap) {
        let vertices: Vec<Vertex> = (0..self.vertex_count()).filter(|&v| keep_vertex[v]).collect();
        let edges: Vec<Edge> = (0..self.edge_count())
            .filter(|&e| {
                let (u, v) = self.edge(e);
                keep_vertex[u] && keep_vertex[v] && keep_edge.is_none_or(|k| k[e])
            })
            .collect();
        let map = SubgraphMap { vertices, edges };
        let mut new_vertex = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in map.vertices.iter().enumerate() {
            new_vertex[v] = i;
        }
        let mut new_edge = vec![usize::MAX; self.edge_count()];
        for (i, &e) in map.edges.iter().enumerate() {
            new_edge[e] = i;
        }
        let new_dart = |d: Dart| -> Option<Dart> {
            let e = new_edge[edge_of(d)];
            (e != usize::MAX).then(|| 2 * e + (d & 1))
        };
        let edges_new: Vec<(Vertex, Vertex)> = map
            .edges
            .iter()
            .map(|&e| {
                let (u, v) = self.edge(e);
                (new_vertex[u], new_vertex[v])
            })
            .collect();
        let rotations: Vec<Vec<Dart>> =
            map.vertices.iter().map(|&v| self.rotation(v).iter().filter_map(|&d| new_dart(d)).collect()).collect();
        let traced = Traced::new(map.vertices.len(), edges_new, rotations)
            .expect("restricting a planar rotation system stays planar");

        let mut candidates: Vec<Dart> = Vec::new();
        for f in self.outer_faces() {
            if let Some(d) = self.face_darts(f).iter().find_map(|&d| new_dart(d)) {
                candidates.push(d);
            }
        }
        let mut covered = vec![false; traced.component_count];
        for &d in &candidates {
            covered[traced.component[traced.origin(d)]] = true;
        }
        if traced.faces.iter().any(|w| !covered[traced.component[traced.origin(w[0])]]) {
            candidates.extend(self.merged_outer_regions(&traced, &new_dart, &covered));
        }
        candidates.extend(traced.longest_faces());
        (traced.finish(candidates), map)
    }

    /// For components without a surviving outer dart, faces whose region
    /// contains an old outer face once deleted edges are dissolved.
    fn merged_outer_regions(
        &self,
        traced: &Traced,
        new_dart: &dyn Fn(Dart) -> Option<Dart>,
        covered: &[bool],
    ) -> Vec<Dart> {
        let old_faces = self.face_count();
        let mut uf = UnionFind::new(old_faces + traced.faces.len());
        for d in 0..self.dart_count() {
            match new_dart(d) {
                None => {
                    uf.union(self.face_of(d), self.face_of(twin(d)));
                }
                Some(nd) => {
                    uf.union(self.face_of(d), old_faces + traced.face_of[nd]);
                }
            }
        }
        let outer_roots: Vec<usize> = self.outer_faces().map(|f| uf.find(f)).collect();
        let mut out = Vec::new();
        for (f, walk) in traced.faces.iter().enumerate() {
            let c = traced.component[traced.origin(walk[0])];
            if covered[c] {
                continue;
            }
            let root = uf.find(old_faces + f);
            if outer_roots.contains(&root) {
                out.push(walk[0]);
            }
        }
        out
    }

    pub fn induced_embedded_subgraph(&self, keep: &[bool]) -> (EmbeddedGraph, SubgraphMap) {
        self.subgraph(keep, None)
    }

    /// Subgraph formed by an edge set, in time proportional to its size.
    /// Outer faces come from surviving old outer darts only.
    pub fn edge_subgraph(&self, edge_list: &[Edge]) -> (EmbeddedGraph, SubgraphMap) {
        let mut edges = edge_list.to_vec();
        edges.sort_unstable();
        edges.dedup();
        let mut vertices: Vec<Vertex> = edges.iter().flat_map(|&e| [self.edge(e).0, self.edge(e).1]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        let map = SubgraphMap { vertices, edges };
        let edges_new: Vec<(Vertex, Vertex)> = map
            .edges
            .iter()
            .map(|&e| {
                let (u, v) = self.edge(e);
                (map.new_vertex(u).unwrap(), map.new_vertex(v).unwrap())
            })
            .collect();
        let mut rotations: Vec<Vec<(usize, Dart)>> = vec![Vec::new(); map.vertices.len()];
        for (i, &e) in map.edges.iter().enumerate() {
            for side in 0..2 {
                let old = 2 * e + side;
                let v = edges_new[i];
                let at = if side == 0 { v.0 } else { v.1 };
                rotations[at].push((self.rotation_index(old), 2 * i + side));
            }
        }
        let rotations: Vec<Vec<Dart>> = rotations
            .into_iter()
            .map(|mut r| {
                r.sort_unstable();
                r.into_iter().map(|(_, d)| d).collect()
            })
            .collect();
        let traced = Traced::new(map.vertices.len(), edges_new, rotations)
            .expect("restricting a planar rotation system stays planar");
        let mut candidates: Vec<Dart> =
            (0..2 * map.edges.len()).filter(|&d| self.is_outer_dart(map.old_dart(d))).collect();
        candidates.extend(traced.longest_faces());
        (traced.finish(candidates), map)
    }

    /// Contracts a forest of edges, merging rotations in embedding order.
    pub fn contract_edges(&self, contracted: &[Edge]) -> Result<Contraction> {
        let mut is_contracted = vec![false; self.edge_count()];
        let mut uf = UnionFind::new(self.vertex_count());
        for &e in contracted {
            let (u, v) = self.edge(e);
            if u == v {
                return Err(Error::LoopContraction(e));
            }
            if is_contracted[e] {
                continue;
            }
            if !uf.union(u, v) {
                return Err(Error::CyclicContraction);
            }
            is_contracted[e] = true;
        }
        let (vertex_map, classes) = uf.labels();
        let mut edge_map = vec![None; self.edge_count()];
        let mut edges = Vec::new();
        for e in 0..self.edge_count() {
            if !is_contracted[e] {
                let (u, v) = self.edge(e);
                edge_map[e] = Some(edges.len());
                edges.push((vertex_map[u], vertex_map[v]));
            }
        }
        let new_dart = |d: Dart| edge_map[edge_of(d)].map(|e| 2 * e + (d & 1));
        let mut rotations = vec![Vec::new(); classes];
        let mut done = vec![false; classes];
        for s in 0..self.vertex_count() {
            let c = vertex_map[s];
            if done[c] {
                continue;
            }
            done[c] = true;
            let Some(&start) = self.rotation(s).first() else { continue };
            let mut d = start;
            loop {
                if is_contracted[edge_of(d)] {
                    d = self.rot_next(twin(d));
                } else {
                    rotations[c].push(new_dart(d).unwrap());
                    d = self.rot_next(d);
                }
                if d == start {
                    break;
                }
            }
        }
        let mut outer = Vec::new();
        for f in self.outer_faces() {
            if let Some(d) = self.face_darts(f).iter().find_map(|&d| new_dart(d)) {
                outer.push(d);
            }
        }
        let graph = EmbeddedGraph::build(classes, edges, rotations, &outer)?;
        Ok(Contraction { graph, vertex_map, edge_map })
    }

    pub fn contract_edge(&self, e: Edge) -> Result<Contraction> {
        self.contract_edges(&[e])
    }

    /// Adds edge `uw` inside face `f`. `hints` pick which occurrence of `u`
    /// and of `w` on the face walk to use (0 = first occurrence). Returns the
    /// new graph and the new edge id.
    pub fn add_edge_in_face(
        &self,
        u: Vertex,
        w: Vertex,
        f: FaceId,
        hints: (usize, usize),
    ) -> Result<(EmbeddedGraph, Edge)> {
        let walk = self.face_darts(f);
        let occurrence = |x: Vertex, k: usize| -> Result<Dart> {
            walk.iter().copied().filter(|&d| self.origin(d) == x).nth(k).ok_or(Error::NotOnFace { vertex: x, face: f })
        };
        let du = occurrence(u, hints.0)?;
        let dw = occurrence(w, hints.1)?;
        let mut b = RotationBuilder::from_graph(self);
        let e = b.add_edge(Corner::Before(du), Corner::Before(dw));
        Ok((b.build()?, e))
    }

    /// Renames vertex `v` to `perm[v]`; edges, darts and the embedding are
    /// unchanged.
    pub fn relabel(&self, perm: &[Vertex]) -> EmbeddedGraph {
        let edges = self.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let mut rotations = vec![Vec::new(); self.vertex_count()];
        for v in 0..self.vertex_count() {
            rotations[perm[v]] = self.rotation(v).to_vec();
        }
        EmbeddedGraph::build(self.vertex_count(), edges, rotations, &self.outer_darts())
            .expect("relabelling preserves validity")
    }

    /// Removes loops and keeps the smallest-id edge of every parallel class.
    pub fn simplify(&self) -> Simplification {
        let mut keep = vec![true; self.edge_count()];
        let mut rep: std::collections::HashMap<(Vertex, Vertex), Edge> = Default::default();
        let mut rep_of = vec![None; self.edge_count()];
        for e in 0..self.edge_count() {
            let (u, v) = self.edge(e);
            if u == v {
                keep[e] = false;
                continue;
            }
            let key = (u.min(v), u.max(v));
            match rep.get(&key) {
                Some(&r) => {
                    keep[e] = false;
                    rep_of[e] = Some(r);
                }
                None => {
                    rep.insert(key, e);
                    rep_of[e] = Some(e);
                }
            }
        }
        let all = vec![true; self.vertex_count()];
        let (graph, map) = self.subgraph(&all, Some(&keep));
        let edge_map = rep_of.into_iter().map(|r| r.and_then(|r| map.new_edge(r))).collect();
        Simplification { graph, edge_map }
    }
}
