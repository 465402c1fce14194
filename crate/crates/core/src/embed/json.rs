use serde::{Deserialize, Serialize};

use super::EmbeddedGraph;
use crate::error::Result;

/// Interchange format. Dart `2i` is edge `i` oriented first to second
/// endpoint, dart `2i + 1` its twin; loops list both darts at their vertex.
/// `outer_darts` only appears for graphs with several components that each
/// need a designated outer face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub rotations: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer_dart: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer_darts: Option<Vec<usize>>,
}

impl GraphJson {
    pub fn from_graph(g: &EmbeddedGraph) -> Self {
        let outer = g.outer_darts();
        GraphJson {
            n: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            rotations: g.rotations().to_vec(),
            outer_dart: outer.first().copied(),
            outer_darts: (outer.len() > 1).then_some(outer),
        }
    }

    pub fn to_graph(&self) -> Result<EmbeddedGraph> {
        let mut outer: Vec<usize> = self.outer_dart.into_iter().collect();
        if let Some(more) = &self.outer_darts {
            outer.extend(more.iter().copied());
        }
        EmbeddedGraph::build(self.n, self.edges.iter().map(|e| (e[0], e[1])).collect(), self.rotations.clone(), &outer)
    }
}
