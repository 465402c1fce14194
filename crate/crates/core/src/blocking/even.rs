use std::collections::VecDeque;

use super::biconnected::{even_biconnected_with, require_biconnected_outerplane, Constraint};
use super::{validate_blocking_set, BlockingSet};
use crate::embed::{EmbeddedGraph, Vertex};
use crate::error::{Error, Result};
use crate::words::EXCEPTIONAL_CYCLE_LENGTHS;

/// Sizes a good blocking set avoids: the cycle lengths without a
/// nonrepetitive 3-colouring.
pub const GOOD_SIZE_EXCLUDED: [usize; 6] = EXCEPTIONAL_CYCLE_LENGTHS;

fn require_simple_outerplane(g: &EmbeddedGraph) -> Result<()> {
    if !g.is_outerplane() {
        return Err(Error::NotOuterplane);
    }
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    Ok(())
}

/// Blocking set of a simple bridgeless outerplane graph whose blocking
/// graph has only even cycles. Blocks are handled outward from a root block
/// per component; each later block includes or excludes its attaching cut
/// vertex according to what the earlier blocks decided.
pub fn blocking_set_even_bridgeless(g: &EmbeddedGraph) -> Result<BlockingSet> {
    require_simple_outerplane(g)?;
    if !g.is_bridgeless() {
        return Err(Error::HasBridge);
    }
    let n = g.vertex_count();
    let blocks = g.blocks();
    let mut blocks_at: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, b) in blocks.iter().enumerate() {
        for &v in &b.vertices {
            blocks_at[v].push(i);
        }
    }
    let mut inb = vec![false; n];
    let mut done = vec![false; blocks.len()];
    for start in 0..blocks.len() {
        if done[start] {
            continue;
        }
        done[start] = true;
        let mut queue = VecDeque::from([(start, Constraint::Include(blocks[start].vertices[0]))]);
        while let Some((i, c)) = queue.pop_front() {
            let (sub, map) = g.edge_subgraph(&blocks[i].edges);
            let local = |v: Vertex| map.new_vertex(v).expect("constraint vertex in block");
            let c_local = match c {
                Constraint::Include(v) => Constraint::Include(local(v)),
                Constraint::Exclude(v) => Constraint::Exclude(local(v)),
                Constraint::Edge { a, b } => Constraint::Edge { a: local(a), b: local(b) },
            };
            for &v in even_biconnected_with(&sub, c_local)?.vertices() {
                inb[map.old_vertex(v)] = true;
            }
            for &v in &blocks[i].vertices {
                for &j in &blocks_at[v] {
                    if !done[j] {
                        done[j] = true;
                        let c = if inb[v] { Constraint::Include(v) } else { Constraint::Exclude(v) };
                        queue.push_back((j, c));
                    }
                }
            }
        }
    }
    Ok(BlockingSet::from_mask(&inb))
}

/// Blocking set of a simple outerplane graph whose blocking graph has only
/// even cycles. All bridges are contracted at once; a merged vertex in the
/// contracted set expands to every vertex merged into it.
pub fn blocking_set_even(g: &EmbeddedGraph) -> Result<BlockingSet> {
    require_simple_outerplane(g)?;
    let bridges = g.bridges();
    if bridges.is_empty() {
        return blocking_set_even_bridgeless(g);
    }
    let c = g.contract_edges(&bridges)?;
    let inner = blocking_set_even_bridgeless(&c.graph)?;
    let inb: Vec<bool> = c.vertex_map.iter().map(|&m| inner.contains(m)).collect();
    Ok(BlockingSet::from_mask(&inb))
}

/// Blocking set of a biconnected outerplane graph whose size is not in
/// [`GOOD_SIZE_EXCLUDED`].
pub fn blocking_set_good_size(g: &EmbeddedGraph) -> Result<BlockingSet> {
    good_size_parts(g).map(|(_, b)| b)
}

/// The even set found after cutting off an ear, and the final set.
pub(crate) fn good_size_parts(g: &EmbeddedGraph) -> Result<(Option<BlockingSet>, BlockingSet)> {
    require_biconnected_outerplane(g)?;
    if g.inner_faces().count() == 1 {
        let v = 0;
        let w = *g.neighbours(v).iter().min().expect("cycle vertex has neighbours");
        return Ok((None, BlockingSet::new(vec![v, w])));
    }
    let (ear, chord) = g.ears()?.into_iter().min().expect("two or more faces give ears");
    let (p, q) = g.edge(chord);
    let (keep, drop) = (p.min(q), p.max(q));
    let interior: Vec<Vertex> = g.face_vertices(ear).into_iter().filter(|&x| x != keep && x != drop).collect();
    let mut mask = vec![true; g.vertex_count()];
    for &x in &interior {
        mask[x] = false;
    }
    let (sub, map) = g.induced_embedded_subgraph(&mask);
    let local = |v: Vertex| map.new_vertex(v).expect("chord survives");
    let even = even_biconnected_with(&sub, Constraint::Edge { a: local(drop), b: local(keep) })?;
    let lifted = BlockingSet::new(even.vertices().iter().map(|&v| map.old_vertex(v)).collect());
    let mut out = lifted.vertices().to_vec();
    if lifted.len() == 10 || lifted.len() == 14 {
        let y = g
            .neighbours(keep)
            .into_iter()
            .find(|y| interior.contains(y))
            .expect("the ear has a vertex next to its chord");
        out.push(y);
    }
    let b = BlockingSet::new(out);
    if GOOD_SIZE_EXCLUDED.contains(&b.len()) || !validate_blocking_set(g, &b).is_valid() {
        return Err(Error::Internal(format!("good-size construction failed with |B| = {}", b.len())));
    }
    Ok((Some(lifted), b))
}
