use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::outerplane::outerplane_colours;
use super::{certified, Colouring, OUTERPLANE_PALETTE, PLANE_PALETTE};
use crate::embed::{Corner, EmbeddedGraph, RotationBuilder};
use crate::error::Result;

/// `layer[v] = i` when `v` lies on the outer face once all layers below `i`
/// are removed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelingLayering {
    pub layer: Vec<usize>,
}

impl PeelingLayering {
    pub fn layer_count(&self) -> usize {
        self.layer.iter().map(|&l| l + 1).max().unwrap_or(0)
    }

    pub fn mask(&self, i: usize) -> Vec<bool> {
        self.layer.iter().map(|&l| l == i).collect()
    }
}

pub fn peeling_layering(g: &EmbeddedGraph) -> PeelingLayering {
    let n = g.vertex_count();
    let mut layer = vec![usize::MAX; n];
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut current = g.clone();
    let mut i = 0;
    while !remaining.is_empty() {
        let outer = current.outer_vertex_mask();
        let mut keep = vec![false; current.vertex_count()];
        for (local, &v) in remaining.iter().enumerate() {
            if outer[local] {
                layer[v] = i;
            } else {
                keep[local] = true;
            }
        }
        let (next, map) = current.induced_embedded_subgraph(&keep);
        remaining = map.vertices.iter().map(|&local| remaining[local]).collect();
        current = next;
        i += 1;
    }
    PeelingLayering { layer }
}

/// Adds, inside every inner face, an edge between each two consecutive
/// occurrences of the face's lowest layer along its walk. Loops that a
/// single occurrence would produce are left out.
pub fn augment_plus(g: &EmbeddedGraph, layering: &PeelingLayering) -> EmbeddedGraph {
    let mut b = RotationBuilder::from_graph(g);
    for f in g.inner_faces() {
        let walk = g.face_darts(f);
        let low = walk.iter().map(|&d| layering.layer[g.origin(d)]).min().unwrap_or(0);
        let occ: Vec<usize> = walk.iter().copied().filter(|&d| layering.layer[g.origin(d)] == low).collect();
        if occ.len() < 2 {
            continue;
        }
        let k = occ.len();
        let mut first = None;
        for j in 0..k {
            let to = if j + 1 < k { Corner::Before(occ[j + 1]) } else { Corner::Before(first.unwrap()) };
            let e = b.add_edge(Corner::Before(occ[j]), to);
            first.get_or_insert(2 * e);
        }
    }
    b.build().expect("edges added inside faces keep the graph plane")
}

/// Facial nonrepetitive colouring with at most 22 colours: each layer of
/// the augmented graph is coloured as an outerplane graph, even layers
/// from `1..=11` and odd layers from `12..=22`.
pub fn colour_plane(g: &EmbeddedGraph) -> Result<Colouring> {
    let layering = peeling_layering(g);
    let plus = augment_plus(g, &layering);
    let layers: Vec<(Vec<usize>, Vec<usize>)> = (0..layering.layer_count())
        .into_par_iter()
        .map(|i| {
            let (sub, map) = plus.induced_embedded_subgraph(&layering.mask(i));
            let offset = if i % 2 == 0 { 0 } else { OUTERPLANE_PALETTE };
            let colours = outerplane_colours(&sub)?;
            Ok((map.vertices, colours.into_iter().map(|c| c + offset).collect()))
        })
        .collect::<Result<_>>()?;
    let mut colours = vec![0; g.vertex_count()];
    for (vertices, cs) in layers {
        for (v, c) in vertices.into_iter().zip(cs) {
            colours[v] = c;
        }
    }
    certified(g, colours, PLANE_PALETTE)
}
