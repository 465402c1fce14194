use super::{edge_of, twin, Dart, EmbeddedGraph, Vertex};
use crate::error::Result;

/// Where a new dart goes in a vertex's rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Corner {
    /// Immediately before the given dart in counterclockwise order, i.e. in
    /// the face corner that ends with this dart.
    Before(Dart),
    /// At a vertex that currently has no darts.
    Isolated(Vertex),
}

/// Mutable rotation system used to perform many insertions before tracing
/// faces once.
#[derive(Clone, Debug)]
pub struct RotationBuilder {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    next: Vec<Dart>,
    prev: Vec<Dart>,
    first: Vec<Option<Dart>>,
    outer: Vec<Dart>,
}

impl RotationBuilder {
    pub fn new(n: usize) -> Self {
        RotationBuilder {
            n,
            edges: Vec::new(),
            next: Vec::new(),
            prev: Vec::new(),
            first: vec![None; n],
            outer: Vec::new(),
        }
    }

    pub fn from_graph(g: &EmbeddedGraph) -> Self {
        let mut b = RotationBuilder::new(g.vertex_count());
        b.edges = g.edges().to_vec();
        b.next = vec![0; g.dart_count()];
        b.prev = vec![0; g.dart_count()];
        for v in 0..g.vertex_count() {
            let rot = g.rotation(v);
            b.first[v] = rot.first().copied();
            for (i, &d) in rot.iter().enumerate() {
                b.next[d] = rot[(i + 1) % rot.len()];
                b.prev[d] = rot[(i + rot.len() - 1) % rot.len()];
            }
        }
        b.outer = g.outer_darts();
        b
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.first.push(None);
        self.n += 1;
        self.n - 1
    }

    pub fn origin(&self, d: Dart) -> Vertex {
        let e = self.edges[edge_of(d)];
        if d & 1 == 0 {
            e.0
        } else {
            e.1
        }
    }

    pub fn rot_next(&self, d: Dart) -> Dart {
        self.next[d]
    }

    pub fn rot_prev(&self, d: Dart) -> Dart {
        self.prev[d]
    }

    pub fn face_next(&self, d: Dart) -> Dart {
        self.next[twin(d)]
    }

    /// Darts of the face containing `d`, starting at `d`.
    pub fn face_walk(&self, d: Dart) -> Vec<Dart> {
        let mut walk = vec![d];
        let mut x = self.face_next(d);
        while x != d {
            walk.push(x);
            x = self.face_next(x);
        }
        walk
    }

    /// Any dart leaving `v`.
    pub fn some_dart(&self, v: Vertex) -> Option<Dart> {
        self.first[v]
    }

    pub fn set_outer_darts(&mut self, darts: Vec<Dart>) {
        self.outer = darts;
    }

    fn insert(&mut self, d: Dart, at: Corner) {
        match at {
            Corner::Before(x) => {
                let p = self.prev[x];
                self.next[p] = d;
                self.prev[d] = p;
                self.next[d] = x;
                self.prev[x] = d;
            }
            Corner::Isolated(v) => match self.first[v] {
                Some(x) => self.insert(d, Corner::Before(x)),
                None => {
                    self.first[v] = Some(d);
                    self.next[d] = d;
                    self.prev[d] = d;
                }
            },
        }
    }

    fn corner_vertex(&self, at: Corner) -> Vertex {
        match at {
            Corner::Before(x) => self.origin(x),
            Corner::Isolated(v) => v,
        }
    }

    /// Adds an edge between the vertices owning the two corners. Returns the
    /// edge id; its dart `2e` leaves the first corner's vertex. When both
    /// corners lie on the same face the result stays planar and that face
    /// is split in two.
    pub fn add_edge(&mut self, from: Corner, to: Corner) -> usize {
        let u = self.corner_vertex(from);
        let w = self.corner_vertex(to);
        let e = self.edges.len();
        self.edges.push((u, w));
        self.next.extend([0, 0]);
        self.prev.extend([0, 0]);
        self.insert(2 * e, from);
        let to = match (from, to) {
            (Corner::Isolated(a), Corner::Isolated(b)) if a == b => Corner::Before(2 * e),
            _ => to,
        };
        self.insert(2 * e + 1, to);
        e
    }

    pub fn rotations(&self) -> Vec<Vec<Dart>> {
        (0..self.n)
            .map(|v| {
                let mut rot = Vec::new();
                if let Some(start) = self.first[v] {
                    let mut d = start;
                    loop {
                        rot.push(d);
                        d = self.next[d];
                        if d == start {
                            break;
                        }
                    }
                }
                rot
            })
            .collect()
    }

    pub fn build(self) -> Result<EmbeddedGraph> {
        let rotations = self.rotations();
        EmbeddedGraph::build(self.n, self.edges, rotations, &self.outer)
    }
}
