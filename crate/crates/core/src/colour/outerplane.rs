use super::cactus::cactus_colours;
use super::{certified, Colouring, OUTERPLANE_PALETTE, SINGLE_BLOCK_PALETTE};
use crate::blocking::{blocking_graph, blocking_set_even, blocking_set_good_size, BlockingSet};
use crate::embed::{EmbeddedGraph, Vertex};
use crate::error::{Error, Result};
use crate::words::{cycle_colouring, forest_colouring};

/// Colours `1..=11` for an outerplane graph, not yet verified: the blocking
/// graph of an even blocking set takes `5..=11`, the forest left after
/// removing the set takes `1..=4`.
pub(crate) fn outerplane_colours(g: &EmbeddedGraph) -> Result<Vec<usize>> {
    if !g.is_outerplane() {
        return Err(Error::NotOuterplane);
    }
    let s = g.simplify().graph;
    let b = blocking_set_even(&s)?;
    let bg = blocking_graph(&s, &b)?;
    let mut colours = forest_colouring(&s.simple_adjacency(), &complement(&b, s.vertex_count()), [1, 2, 3, 4]);
    for (i, c) in cactus_colours(&bg.graph)?.into_iter().enumerate() {
        colours[bg.host_vertex[i]] = c + 4;
    }
    Ok(colours)
}

fn complement(b: &BlockingSet, n: usize) -> Vec<bool> {
    b.mask(n).into_iter().map(|x| !x).collect()
}

/// Facial nonrepetitive colouring with at most 11 colours.
pub fn colour_outerplane(g: &EmbeddedGraph) -> Result<Colouring> {
    let colours = outerplane_colours(g)?;
    certified(g, colours, OUTERPLANE_PALETTE)
}

/// Facial nonrepetitive colouring with at most 7 colours of an outerplane
/// graph with at most one 2-connected component. The blocking set has a
/// size whose cycle takes three colours; the forest takes `4..=7`.
pub fn colour_outerplane_single_block(g: &EmbeddedGraph) -> Result<Colouring> {
    if !g.is_outerplane() {
        return Err(Error::NotOuterplane);
    }
    let s = g.simplify().graph;
    let n = s.vertex_count();
    let blocks: Vec<_> = s.blocks().into_iter().filter(|b| b.is_two_connected()).collect();
    if blocks.len() > 1 {
        return Err(Error::MultipleBlocks(blocks.len()));
    }
    let adj = s.simple_adjacency();
    let Some(block) = blocks.first() else {
        let colours = forest_colouring(&adj, &vec![true; n], [4, 5, 6, 7]);
        return certified(g, colours, SINGLE_BLOCK_PALETTE);
    };
    let (h, map) = s.edge_subgraph(&block.edges);
    let local = blocking_set_good_size(&h)?;
    let b = BlockingSet::new(local.vertices().iter().map(|&v| map.old_vertex(v)).collect());
    let mut colours = forest_colouring(&adj, &complement(&b, n), [4, 5, 6, 7]);
    let order = cycle_order(&h, &local);
    let cyc: Vec<usize> = match order.len() {
        1 => vec![0],
        2 => vec![0, 1],
        k => cycle_colouring(k)?,
    };
    for (&v, &c) in order.iter().zip(&cyc) {
        colours[map.old_vertex(v)] = c + 1;
    }
    certified(g, colours, SINGLE_BLOCK_PALETTE)
}

/// Members of `b` in the order the outer walk of `h` meets them.
fn cycle_order(h: &EmbeddedGraph, b: &BlockingSet) -> Vec<Vertex> {
    let f = h.outer_faces().next().expect("a block has an outer face");
    h.face_vertices(f).into_iter().filter(|&v| b.contains(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{fixtures, polygon_with_chords};

    #[test]
    fn triangle_gets_three_colours() {
        assert_eq!(blocking_set_even(&fixtures::triangle()).unwrap().len(), 2);
        let c = colour_outerplane(&fixtures::triangle()).unwrap();
        assert_eq!(c.distinct_colours(), 3);
        assert!(c.verified);
    }

    #[test]
    fn trees_stay_within_four() {
        let t =
            EmbeddedGraph::from_edges_any_embedding(7, vec![(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (5, 6)]).unwrap();
        assert!(colour_outerplane(&t).unwrap().distinct_colours() <= 4);
        assert!(colour_outerplane_single_block(&t).unwrap().distinct_colours() <= 4);
    }

    #[test]
    fn mixed_fixture() {
        let c = colour_outerplane(&fixtures::mixed()).unwrap();
        assert!(c.max_colour() <= 11);
    }

    #[test]
    fn seventeen_cycle_single_block() {
        let c = colour_outerplane_single_block(&polygon_with_chords(17, &[])).unwrap();
        assert!(c.distinct_colours() <= 7);
    }

    #[test]
    fn fan_single_block() {
        let c = colour_outerplane_single_block(&fixtures::fan(8)).unwrap();
        assert!(c.distinct_colours() <= 7);
    }

    #[test]
    fn two_blocks_are_rejected() {
        assert!(matches!(colour_outerplane_single_block(&fixtures::bowtie()), Err(Error::MultipleBlocks(2))));
    }

    #[test]
    fn non_outerplane_is_rejected() {
        assert!(matches!(colour_outerplane(&fixtures::k4()), Err(Error::NotOuterplane)));
    }

    #[test]
    fn multigraph_is_accepted() {
        let g = fixtures::triangle();
        let f = g.inner_faces().next().unwrap();
        let (g, _) = g.add_edge_in_face(0, 1, f, (0, 0)).unwrap();
        let f = g.inner_faces().find(|&f| g.face_vertices(f).contains(&2)).unwrap();
        let (g, _) = g.add_edge_in_face(2, 2, f, (0, 0)).unwrap();
        assert!(g.is_outerplane() && !g.is_simple());
        let c = colour_outerplane(&g).unwrap();
        assert!(c.verified);
    }
}
