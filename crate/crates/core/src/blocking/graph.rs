use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{validate_blocking_set, BlockingSet};
use crate::embed::{Dart, EmbeddedGraph, GraphJson, Vertex};
use crate::error::{Error, Result};

/// Blocking graph on `B`; vertex `i` stands for host vertex `host_vertex[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockingGraph {
    pub graph: EmbeddedGraph,
    pub host_vertex: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockingGraphJson {
    #[serde(flatten)]
    pub graph: GraphJson,
    pub host_vertex: Vec<Vertex>,
}

impl BlockingGraph {
    pub fn to_json(&self) -> BlockingGraphJson {
        BlockingGraphJson { graph: self.graph.to_json(), host_vertex: self.host_vertex.clone() }
    }

    pub fn from_json(json: &BlockingGraphJson) -> Result<Self> {
        let graph = json.graph.to_graph()?;
        if json.host_vertex.len() != graph.vertex_count() {
            return Err(Error::Malformed("host_vertex length differs from n".into()));
        }
        Ok(BlockingGraph { graph, host_vertex: json.host_vertex.clone() })
    }
}

/// Joins consecutive members of `B` along each outer walk. Every edge is
/// drawn just outside the stretch of walk it replaces, so at a host corner
/// the edge arriving from the previous member comes before the one leaving
/// for the next.
pub fn blocking_graph(g: &EmbeddedGraph, b: &BlockingSet) -> Result<BlockingGraph> {
    if let Some(v) = validate_blocking_set(g, b).violations.first() {
        return Err(Error::InvalidBlockingSet(format!("{v:?}")));
    }
    let host_vertex = b.vertices().to_vec();
    let id = |v: Vertex| b.index_of(v);
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    // host outer dart at a member -> (arriving dart, leaving dart)
    let mut slots: HashMap<Dart, (Dart, Dart)> = HashMap::new();
    let mut outer = Vec::new();
    for f in g.outer_faces() {
        let occ: Vec<Dart> = g.face_darts(f).iter().copied().filter(|&d| id(g.origin(d)).is_some()).collect();
        let k = occ.len();
        if k == 0 {
            continue;
        }
        let first = edges.len();
        outer.push(2 * first);
        let mut arriving = vec![0; k];
        let mut leaving = vec![0; k];
        for j in 0..k {
            let e = edges.len();
            let u = id(g.origin(occ[j])).unwrap();
            let w = id(g.origin(occ[(j + 1) % k])).unwrap();
            edges.push((u, w));
            leaving[j] = 2 * e;
            arriving[(j + 1) % k] = 2 * e + 1;
        }
        for j in 0..k {
            slots.insert(occ[j], (arriving[j], leaving[j]));
        }
    }
    let rotations: Vec<Vec<Dart>> = host_vertex
        .iter()
        .map(|&v| g.rotation(v).iter().filter_map(|d| slots.get(d)).flat_map(|&(a, l)| [a, l]).collect())
        .collect();
    let graph = EmbeddedGraph::build(host_vertex.len(), edges, rotations, &outer)?;
    Ok(BlockingGraph { graph, host_vertex })
}
