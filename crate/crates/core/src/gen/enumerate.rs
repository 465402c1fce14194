use std::collections::HashSet;

use super::{circle_graph, GenKind};
use crate::embed::{canonical_code, Corner, EmbeddedGraph, RotationBuilder, Vertex};
use crate::error::{Error, Result};

pub const ENUMERATE_GUARD: usize = 9;

/// All connected graphs of the class on `n` vertices, one per embedded
/// isomorphism class (orientation and outer face preserved).
///
/// Outerplane classes come from non-crossing edge sets on `n` points in
/// convex position. Plane graphs are best effort: a biconnected outerplane
/// graph on `n - 1` vertices plus one vertex inside an inner face.
pub fn enumerate_small(kind: GenKind, n: usize) -> Result<Vec<EmbeddedGraph>> {
    if n > ENUMERATE_GUARD {
        return Err(Error::GuardExceeded { n, limit: ENUMERATE_GUARD });
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut keep = |g: EmbeddedGraph, out: &mut Vec<EmbeddedGraph>| {
        if kind.contains(&g) && seen.insert(canonical_code(&g)) {
            out.push(g);
        }
    };
    if kind == GenKind::Plane {
        for g in non_crossing_graphs(n)? {
            keep(g, &mut out);
        }
        if n >= 4 {
            for base in non_crossing_graphs(n - 1)? {
                if !base.is_biconnected() {
                    continue;
                }
                for g in with_inner_vertex(&base) {
                    keep(g, &mut out);
                }
            }
        }
    } else {
        for g in non_crossing_graphs(n)? {
            keep(g, &mut out);
        }
    }
    Ok(out)
}

fn crosses(a: (Vertex, Vertex), b: (Vertex, Vertex)) -> bool {
    let inside = |x: Vertex| a.0 < x && x < a.1;
    let shared = a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1;
    !shared && inside(b.0) != inside(b.1)
}

/// Connected non-crossing graphs on `n` points in convex position.
fn non_crossing_graphs(n: usize) -> Result<Vec<EmbeddedGraph>> {
    if n == 1 {
        return Ok(vec![EmbeddedGraph::build(1, vec![], vec![vec![]], &[])?]);
    }
    let pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<(Vertex, Vertex)> = Vec::new();
    fn rec(
        n: usize,
        pairs: &[(Vertex, Vertex)],
        i: usize,
        chosen: &mut Vec<(Vertex, Vertex)>,
        out: &mut Vec<EmbeddedGraph>,
    ) -> Result<()> {
        if i == pairs.len() {
            if chosen.len() + 1 >= n {
                let g = circle_graph(n, chosen.clone())?;
                if g.is_connected() {
                    out.push(g);
                }
            }
            return Ok(());
        }
        rec(n, pairs, i + 1, chosen, out)?;
        if chosen.iter().all(|&c| !crosses(c, pairs[i])) {
            chosen.push(pairs[i]);
            rec(n, pairs, i + 1, chosen, out)?;
            chosen.pop();
        }
        Ok(())
    }
    rec(n, &pairs, 0, &mut chosen, &mut out)?;
    Ok(out)
}

/// Every way of adding one vertex inside an inner face of `g`, joined to a
/// non-empty set of that face's vertices.
fn with_inner_vertex(g: &EmbeddedGraph) -> Vec<EmbeddedGraph> {
    let mut out = Vec::new();
    for f in g.inner_faces() {
        let walk = g.face_darts(f).to_vec();
        let len = walk.len();
        for mask in 1u32..(1 << len) {
            let mut b = RotationBuilder::from_graph(g);
            let x = b.add_vertex();
            let mut at_x = Corner::Isolated(x);
            for (i, &d) in walk.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    let e = b.add_edge(Corner::Before(d), at_x);
                    at_x = Corner::Before(2 * e + 1);
                }
            }
            if let Ok(h) = b.build() {
                out.push(h);
            }
        }
    }
    out
}
