//! Plane multigraphs stored as rotation systems.
//!
//! Every edge `i` owns two darts: `2i` oriented from its first endpoint to
//! its second, and `2i + 1` the reverse. Each vertex lists its incident darts
//! in counterclockwise order. Faces are traced with the rule
//! `next(d) = rot_next(twin(d))`, and one face per connected component is
//! designated as that component's outer face.

mod builder;
mod canon;
mod json;
mod structure;
mod surgery;

pub use builder::{Corner, RotationBuilder};
pub use canon::canonical_code;
pub use json::GraphJson;
pub use structure::{Block, WeakDual};
pub use surgery::{Contraction, Simplification, SubgraphMap};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type Dart = usize;
pub type Edge = usize;
pub type FaceId = usize;

#[inline]
pub fn twin(d: Dart) -> Dart {
    d ^ 1
}

#[inline]
pub fn edge_of(d: Dart) -> Edge {
    d >> 1
}

/// One traced face: its darts in walk order and the vertices they leave.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceWalk {
    pub id: FaceId,
    pub darts: Vec<Dart>,
    pub vertices: Vec<Vertex>,
    pub outer: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedGraph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    rotations: Vec<Vec<Dart>>,
    rot_pos: Vec<usize>,
    faces: Vec<Vec<Dart>>,
    face_of: Vec<FaceId>,
    is_outer: Vec<bool>,
    component: Vec<usize>,
    component_outer: Vec<Option<FaceId>>,
    outer_dart: Vec<Option<Dart>>,
}

/// Faces and components traced from a rotation system, before outer faces
/// are designated.
pub(crate) struct Traced {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    rotations: Vec<Vec<Dart>>,
    rot_pos: Vec<usize>,
    pub(crate) faces: Vec<Vec<Dart>>,
    pub(crate) face_of: Vec<FaceId>,
    pub(crate) component: Vec<usize>,
    pub(crate) component_count: usize,
}

impl Traced {
    pub(crate) fn new(n: usize, edges: Vec<(Vertex, Vertex)>, rotations: Vec<Vec<Dart>>) -> Result<Self> {
        if rotations.len() != n {
            return Err(Error::Malformed(format!("{} rotation lists for {} vertices", rotations.len(), n)));
        }
        let dart_count = 2 * edges.len();
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::Malformed(format!("edge {i} has an endpoint out of range")));
            }
        }
        let mut rot_pos = vec![usize::MAX; dart_count];
        for (v, rot) in rotations.iter().enumerate() {
            for (i, &d) in rot.iter().enumerate() {
                if d >= dart_count {
                    return Err(Error::DartOutOfRange(d));
                }
                if rot_pos[d] != usize::MAX {
                    return Err(Error::Malformed(format!("dart {d} listed twice")));
                }
                let e = edges[edge_of(d)];
                let origin = if d & 1 == 0 { e.0 } else { e.1 };
                if origin != v {
                    return Err(Error::Malformed(format!(
                        "dart {d} leaves vertex {origin} but is listed at vertex {v}"
                    )));
                }
                rot_pos[d] = i;
            }
        }
        if let Some(d) = rot_pos.iter().position(|&p| p == usize::MAX) {
            return Err(Error::Malformed(format!("dart {d} missing from every rotation")));
        }

        let mut t = Traced {
            n,
            edges,
            rotations,
            rot_pos,
            faces: Vec::new(),
            face_of: vec![usize::MAX; dart_count],
            component: Vec::new(),
            component_count: 0,
        };
        for start in 0..dart_count {
            if t.face_of[start] != usize::MAX {
                continue;
            }
            let id = t.faces.len();
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                t.face_of[d] = id;
                walk.push(d);
                d = t.face_next(d);
                if d == start {
                    break;
                }
            }
            t.faces.push(walk);
        }

        let mut uf = crate::util::UnionFind::new(n);
        for &(u, v) in &t.edges {
            uf.union(u, v);
        }
        let (component, count) = uf.labels();
        t.component = component;
        t.component_count = count;

        let mut verts = vec![0i64; count];
        let mut edge_count = vec![0i64; count];
        let mut face_count = vec![0i64; count];
        for v in 0..n {
            verts[t.component[v]] += 1;
        }
        for &(u, _) in &t.edges {
            edge_count[t.component[u]] += 1;
        }
        for walk in &t.faces {
            face_count[t.component[t.origin(walk[0])]] += 1;
        }
        for c in 0..count {
            if edge_count[c] == 0 {
                continue;
            }
            let euler = verts[c] - edge_count[c] + face_count[c];
            if euler != 2 {
                let vertex = (0..n).find(|&v| t.component[v] == c).unwrap_or(0);
                return Err(Error::NotPlanar { vertex, euler });
            }
        }
        Ok(t)
    }

    pub(crate) fn origin(&self, d: Dart) -> Vertex {
        let e = self.edges[edge_of(d)];
        if d & 1 == 0 {
            e.0
        } else {
            e.1
        }
    }

    fn face_next(&self, d: Dart) -> Dart {
        let t = twin(d);
        let rot = &self.rotations[self.origin(t)];
        rot[(self.rot_pos[t] + 1) % rot.len()]
    }

    /// Finishes the graph. `outer` holds darts on candidate outer faces in
    /// priority order; the first candidate seen for a component wins.
    pub(crate) fn finish(self, outer: impl IntoIterator<Item = Dart>) -> EmbeddedGraph {
        let mut component_outer: Vec<Option<FaceId>> = vec![None; self.component_count];
        let mut outer_dart: Vec<Option<Dart>> = vec![None; self.component_count];
        for d in outer {
            let c = self.component[self.origin(d)];
            if component_outer[c].is_none() {
                component_outer[c] = Some(self.face_of[d]);
                outer_dart[c] = Some(d);
            }
        }
        let mut is_outer = vec![false; self.faces.len()];
        for f in component_outer.iter().flatten() {
            is_outer[*f] = true;
        }
        EmbeddedGraph {
            n: self.n,
            edges: self.edges,
            rotations: self.rotations,
            rot_pos: self.rot_pos,
            faces: self.faces,
            face_of: self.face_of,
            is_outer,
            component: self.component,
            component_outer,
            outer_dart,
        }
    }

    /// First dart of the longest face per component, used when no outer
    /// face is designated.
    pub(crate) fn longest_faces(&self) -> Vec<Dart> {
        let mut best: Vec<Option<FaceId>> = vec![None; self.component_count];
        for (f, walk) in self.faces.iter().enumerate() {
            let c = self.component[self.origin(walk[0])];
            match best[c] {
                Some(g) if self.faces[g].len() >= walk.len() => {}
                _ => best[c] = Some(f),
            }
        }
        best.into_iter().flatten().map(|f| self.faces[f][0]).collect()
    }
}

impl EmbeddedGraph {
    /// Builds and validates a graph. `outer_darts` designates the outer face
    /// of each component through any dart on it; components without a
    /// designated dart use their longest face.
    pub fn build(
        n: usize,
        edges: Vec<(Vertex, Vertex)>,
        rotations: Vec<Vec<Dart>>,
        outer_darts: &[Dart],
    ) -> Result<Self> {
        let traced = Traced::new(n, edges, rotations)?;
        if let Some(&d) = outer_darts.iter().find(|&&d| d >= traced.face_of.len()) {
            return Err(Error::DartOutOfRange(d));
        }
        let fallback = traced.longest_faces();
        Ok(traced.finish(outer_darts.iter().copied().chain(fallback)))
    }

    /// Builds a graph whose rotation at each vertex is the order in which its
    /// darts appear in `edges` (useful for trees and tests where the
    /// embedding is irrelevant).
    pub fn from_edges_any_embedding(n: usize, edges: Vec<(Vertex, Vertex)>) -> Result<Self> {
        let mut rotations = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::Malformed(format!("edge {i} has an endpoint out of range")));
            }
            rotations[u].push(2 * i);
            rotations[v].push(2 * i + 1);
        }
        Self::build(n, edges, rotations, &[])
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn dart_count(&self) -> usize {
        2 * self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge(&self, e: Edge) -> (Vertex, Vertex) {
        self.edges[e]
    }

    pub fn rotation(&self, v: Vertex) -> &[Dart] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<Dart>] {
        &self.rotations
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rotations[v].len()
    }

    #[inline]
    pub fn origin(&self, d: Dart) -> Vertex {
        let e = self.edges[edge_of(d)];
        if d & 1 == 0 {
            e.0
        } else {
            e.1
        }
    }

    #[inline]
    pub fn head(&self, d: Dart) -> Vertex {
        self.origin(twin(d))
    }

    /// Position of `d` in its origin's rotation.
    pub fn rotation_index(&self, d: Dart) -> usize {
        self.rot_pos[d]
    }

    pub fn rot_next(&self, d: Dart) -> Dart {
        let rot = &self.rotations[self.origin(d)];
        rot[(self.rot_pos[d] + 1) % rot.len()]
    }

    pub fn rot_prev(&self, d: Dart) -> Dart {
        let rot = &self.rotations[self.origin(d)];
        rot[(self.rot_pos[d] + rot.len() - 1) % rot.len()]
    }

    pub fn face_next(&self, d: Dart) -> Dart {
        self.rot_next(twin(d))
    }

    pub fn face_of(&self, d: Dart) -> FaceId {
        self.face_of[d]
    }

    pub fn face_darts(&self, f: FaceId) -> &[Dart] {
        &self.faces[f]
    }

    pub fn face_vertices(&self, f: FaceId) -> Vec<Vertex> {
        self.faces[f].iter().map(|&d| self.origin(d)).collect()
    }

    pub fn is_outer_face(&self, f: FaceId) -> bool {
        self.is_outer[f]
    }

    pub fn outer_faces(&self) -> impl Iterator<Item = FaceId> + '_ {
        self.component_outer.iter().flatten().copied()
    }

    pub fn inner_faces(&self) -> impl Iterator<Item = FaceId> + '_ {
        (0..self.faces.len()).filter(|&f| !self.is_outer[f])
    }

    pub fn is_outer_dart(&self, d: Dart) -> bool {
        self.is_outer[self.face_of[d]]
    }

    /// The designated dart on the outer face of each component with edges.
    pub fn outer_darts(&self) -> Vec<Dart> {
        self.outer_dart.iter().flatten().copied().collect()
    }

    pub fn component_of(&self, v: Vertex) -> usize {
        self.component[v]
    }

    pub fn component_count(&self) -> usize {
        self.component_outer.len()
    }

    pub fn outer_face_of_component(&self, c: usize) -> Option<FaceId> {
        self.component_outer[c]
    }

    pub fn face_walks(&self) -> Vec<FaceWalk> {
        (0..self.faces.len())
            .map(|f| FaceWalk {
                id: f,
                darts: self.faces[f].clone(),
                vertices: self.face_vertices(f),
                outer: self.is_outer[f],
            })
            .collect()
    }

    /// Vertices on the outer face; isolated vertices count as outer.
    pub fn outer_vertex_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.n];
        for v in 0..self.n {
            if self.rotations[v].is_empty() {
                mask[v] = true;
            }
        }
        for f in self.outer_faces() {
            for &d in &self.faces[f] {
                mask[self.origin(d)] = true;
            }
        }
        mask
    }

    pub fn is_outerplane(&self) -> bool {
        self.outer_vertex_mask().into_iter().all(|b| b)
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::with_capacity(self.edges.len());
        self.edges.iter().all(|&(u, v)| u != v && seen.insert((u.min(v), u.max(v))))
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    /// Distinct neighbours of `v`, in rotation order of first appearance.
    pub fn neighbours(&self, v: Vertex) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = Vec::with_capacity(self.rotations[v].len());
        for &d in &self.rotations[v] {
            let w = self.head(d);
            if w != v && !out.contains(&w) {
                out.push(w);
            }
        }
        out
    }

    /// Simple adjacency lists (loops dropped, parallel edges merged).
    pub fn simple_adjacency(&self) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_count() == 1
    }

    /// Whether the graph (ignoring loops and parallel edges) has no cycle.
    pub fn is_forest(&self) -> bool {
        let adj = self.simple_adjacency();
        let m: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let comps = self.component_count();
        self.n == 0 || m + comps == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.is_forest()
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson::from_graph(self)
    }

    pub fn from_json(json: &GraphJson) -> Result<Self> {
        json.to_graph()
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let json: GraphJson = serde_json::from_str(s)?;
        json.to_graph()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("graph json serializes")
    }

    /// Disjoint union preserving each part's outer faces. Vertices and edges
    /// of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &EmbeddedGraph) -> EmbeddedGraph {
        let shift_v = self.n;
        let shift_d = self.dart_count();
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift_v, v + shift_v)));
        let mut rotations = self.rotations.clone();
        rotations.extend(other.rotations.iter().map(|r| r.iter().map(|&d| d + shift_d).collect::<Vec<_>>()));
        let mut outer = self.outer_darts();
        outer.extend(other.outer_darts().into_iter().map(|d| d + shift_d));
        EmbeddedGraph::build(self.n + other.n, edges, rotations, &outer)
            .expect("disjoint union of valid graphs is valid")
    }
}
