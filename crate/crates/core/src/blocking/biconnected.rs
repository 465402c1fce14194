use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{validate_blocking_set, BlockingSet};
use crate::embed::{edge_of, Edge, EmbeddedGraph, FaceId, Vertex, WeakDual};
use crate::error::{Error, Result};

/// Membership requirement for the even constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Constraint {
    Include(Vertex),
    Exclude(Vertex),
    /// `ab` is an outer edge; `a` stays out and `b` goes in.
    Edge {
        a: Vertex,
        b: Vertex,
    },
}

pub(crate) fn require_biconnected_outerplane(g: &EmbeddedGraph) -> Result<()> {
    if !g.is_outerplane() {
        return Err(Error::NotOuterplane);
    }
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    if !g.is_biconnected() {
        return Err(Error::NotBiconnected);
    }
    Ok(())
}

fn check_vertex(g: &EmbeddedGraph, v: Vertex) -> Result<()> {
    if v >= g.vertex_count() {
        return Err(Error::Malformed(format!("vertex {v} out of range")));
    }
    Ok(())
}

/// Weak dual rooted at a face, with breadth-first order, parent chords and
/// depths. Children are visited in increasing face id.
struct RootedDual {
    dual: WeakDual,
    order: Vec<usize>,
    parent: Vec<Option<(usize, Edge)>>,
    depth: Vec<usize>,
}

impl RootedDual {
    fn new(g: &EmbeddedGraph, root: FaceId) -> Result<Self> {
        let mut dual = g.weak_dual()?;
        for adj in &mut dual.adjacency {
            adj.sort_unstable();
        }
        let k = dual.faces.len();
        let r = dual.node_of(root).ok_or_else(|| Error::Internal(format!("face {root} is not inner")))?;
        let mut parent = vec![None; k];
        let mut depth = vec![usize::MAX; k];
        let mut order = Vec::with_capacity(k);
        let mut queue = VecDeque::from([r]);
        depth[r] = 0;
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &(y, e) in &dual.adjacency[x] {
                if depth[y] == usize::MAX {
                    depth[y] = depth[x] + 1;
                    parent[y] = Some((x, e));
                    queue.push_back(y);
                }
            }
        }
        Ok(RootedDual { dual, order, parent, depth })
    }
}

fn smallest_face_containing(g: &EmbeddedGraph, v: Vertex) -> Result<FaceId> {
    g.inner_faces()
        .find(|&f| g.face_vertices(f).contains(&v))
        .ok_or_else(|| Error::Internal(format!("vertex {v} lies on no inner face")))
}

/// The edge `ab` if it exists and lies on the outer face.
fn outer_edge(g: &EmbeddedGraph, a: Vertex, b: Vertex) -> Option<Edge> {
    g.rotation(a).iter().find_map(|&d| {
        let e = edge_of(d);
        (g.head(d) == b && !g.is_chord(e)).then_some(e)
    })
}

/// The inner face on the other side of outer edge `e`.
fn inner_side(g: &EmbeddedGraph, e: Edge) -> FaceId {
    let d = if g.is_outer_dart(2 * e) { 2 * e + 1 } else { 2 * e };
    g.face_of(d)
}

fn outer_neighbours(g: &EmbeddedGraph, v: Vertex) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = g.rotation(v).iter().filter(|&&d| !g.is_chord(edge_of(d))).map(|&d| g.head(d)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// One vertex per inner face: `seed` is placed first, then faces are
/// visited outward from `root` and a face whose parent chord has no member
/// receives its smallest vertex off that chord.
fn one_per_face(g: &EmbeddedGraph, seed: Vertex, root: FaceId) -> Result<Vec<bool>> {
    let tree = RootedDual::new(g, root)?;
    let mut inb = vec![false; g.vertex_count()];
    inb[seed] = true;
    for &node in tree.order.iter().skip(1) {
        let (_, e) = tree.parent[node].expect("non-root node has a parent");
        let (u, w) = g.edge(e);
        if inb[u] || inb[w] {
            continue;
        }
        let f = tree.dual.faces[node];
        let x = g
            .face_vertices(f)
            .into_iter()
            .filter(|&x| x != u && x != w)
            .min()
            .expect("inner faces have at least three vertices");
        inb[x] = true;
    }
    Ok(inb)
}

/// Blocking set with exactly one vertex on every inner face, containing `v`
/// when `include` holds and avoiding it otherwise. Exclusion places the
/// smaller outer neighbour of `v` instead.
pub fn blocking_set_biconnected(g: &EmbeddedGraph, v: Vertex, include: bool) -> Result<BlockingSet> {
    require_biconnected_outerplane(g)?;
    check_vertex(g, v)?;
    let inb = if include { one_per_face_including(g, v)? } else { one_per_face_excluding(g, v)? };
    Ok(BlockingSet::from_mask(&inb))
}

fn one_per_face_including(g: &EmbeddedGraph, v: Vertex) -> Result<Vec<bool>> {
    one_per_face(g, v, smallest_face_containing(g, v)?)
}

fn one_per_face_excluding(g: &EmbeddedGraph, v: Vertex) -> Result<Vec<bool>> {
    let w = outer_neighbours(g, v)[0];
    let e = outer_edge(g, v, w).expect("outer neighbour joined by an outer edge");
    one_per_face(g, w, inner_side(g, e))
}

pub fn blocking_set_even_biconnected(g: &EmbeddedGraph, v: Vertex, include: bool) -> Result<BlockingSet> {
    let c = if include { Constraint::Include(v) } else { Constraint::Exclude(v) };
    even_biconnected_with(g, c)
}

pub fn blocking_set_even_biconnected_edge(g: &EmbeddedGraph, a: Vertex, b: Vertex) -> Result<BlockingSet> {
    even_biconnected_with(g, Constraint::Edge { a, b })
}

/// Blocking set whose blocking graph is a single even cycle, honouring the
/// constraint. Starts from a one-per-face set and, when its size is odd,
/// adds one vertex chosen by the first of three cases that applies.
pub fn even_biconnected_with(g: &EmbeddedGraph, c: Constraint) -> Result<BlockingSet> {
    require_biconnected_outerplane(g)?;
    let (inb, forbidden, ab) = match c {
        Constraint::Include(v) => {
            check_vertex(g, v)?;
            (one_per_face_including(g, v)?, None, None)
        }
        Constraint::Exclude(v) => {
            check_vertex(g, v)?;
            (one_per_face_excluding(g, v)?, Some(v), None)
        }
        Constraint::Edge { a, b } => {
            check_vertex(g, a)?;
            check_vertex(g, b)?;
            let e = outer_edge(g, a, b).ok_or(Error::NotOuterEdge(a, b))?;
            (one_per_face(g, b, inner_side(g, e))?, Some(a), Some(e))
        }
    };
    let mut inb = inb;
    if inb.iter().filter(|&&x| x).count() % 2 == 1 {
        let y = repair_vertex(g, c, &inb, forbidden, ab)?;
        inb[y] = true;
    }
    let b = BlockingSet::from_mask(&inb);
    check_even_result(g, &b, c)?;
    Ok(b)
}

fn check_even_result(g: &EmbeddedGraph, b: &BlockingSet, c: Constraint) -> Result<()> {
    let report = validate_blocking_set(g, b);
    if let Some(v) = report.violations.first() {
        return Err(Error::Internal(format!("even construction produced an invalid set: {v:?}")));
    }
    let honoured = match c {
        Constraint::Include(v) => b.contains(v),
        Constraint::Exclude(v) => !b.contains(v),
        Constraint::Edge { a, b: keep } => !b.contains(a) && b.contains(keep),
    };
    if b.len() % 2 == 1 || !honoured {
        return Err(Error::Internal(format!("even construction broke its postcondition for {c:?}")));
    }
    Ok(())
}

/// The two neighbours of `x` along the boundary cycle of face `f`.
fn face_neighbours(g: &EmbeddedGraph, f: FaceId, x: Vertex) -> Vec<Vertex> {
    let walk = g.face_vertices(f);
    let k = walk.len();
    let i = walk.iter().position(|&y| y == x).expect("vertex on face");
    vec![walk[(i + 1) % k], walk[(i + k - 1) % k]]
}

fn unique_member(g: &EmbeddedGraph, f: FaceId, inb: &[bool]) -> Result<Vertex> {
    let members: Vec<Vertex> = g.face_vertices(f).into_iter().filter(|&x| inb[x]).collect();
    match members[..] {
        [x] => Ok(x),
        _ => Err(Error::Internal(format!("face {f} holds {} members, expected one", members.len()))),
    }
}

fn face_has_edge(g: &EmbeddedGraph, f: FaceId, e: Option<Edge>) -> bool {
    e.is_some_and(|e| g.face_darts(f).iter().any(|&d| edge_of(d) == e))
}

fn repair_vertex(
    g: &EmbeddedGraph,
    c: Constraint,
    inb: &[bool],
    forbidden: Option<Vertex>,
    ab: Option<Edge>,
) -> Result<Vertex> {
    let inner: Vec<FaceId> = g.inner_faces().collect();
    if inner.len() == 1 {
        let u = unique_member(g, inner[0], inb)?;
        return face_neighbours(g, inner[0], u)
            .into_iter()
            .filter(|&w| Some(w) != forbidden)
            .min()
            .ok_or_else(|| Error::Internal("no neighbour to complete the 2-cycle".into()));
    }
    let v = match c {
        Constraint::Include(v) | Constraint::Exclude(v) => Some(v),
        Constraint::Edge { .. } => None,
    };
    let mut ears = g.ears()?;
    ears.sort_unstable();

    // Case 1: an ear with at least four vertices away from the constraint.
    for &(f, chord) in &ears {
        let verts = g.face_vertices(f);
        let (u, w) = g.edge(chord);
        let allowed = match v {
            Some(v) => !verts.contains(&v) || v == u || v == w,
            None => !face_has_edge(g, f, ab),
        };
        if verts.len() >= 4 && allowed {
            let x = unique_member(g, f, inb)?;
            if let Some(y) = face_neighbours(g, f, x).into_iter().filter(|&y| y != u && y != w).min() {
                return Ok(y);
            }
        }
    }

    // Case 2: a triangular ear whose chord already has a member.
    for &(f, chord) in &ears {
        let verts = g.face_vertices(f);
        if verts.len() != 3 {
            continue;
        }
        let (u, w) = g.edge(chord);
        let y = verts.iter().copied().find(|&y| y != u && y != w).expect("triangle apex");
        let allowed = match v {
            Some(v) => y != v,
            None => !face_has_edge(g, f, ab),
        };
        if (inb[u] || inb[w]) && allowed {
            return Ok(y);
        }
    }

    // Case 3: a face one level above the deepest leaves, seen from a root
    // face at the constraint, gives a fresh leaf of the tree G - B'.
    let root = match (v, ab) {
        (Some(v), _) => smallest_face_containing(g, v)?,
        (None, Some(e)) => inner_side(g, e),
        (None, None) => unreachable!("edge constraint always carries its edge"),
    };
    let tree = RootedDual::new(g, root)?;
    let h = tree.depth.iter().copied().max().unwrap_or(0);
    let has_child = |x: usize| tree.parent.iter().any(|p| p.is_some_and(|(q, _)| q == x));
    let node = (0..tree.dual.faces.len())
        .filter(|&x| tree.depth[x] + 1 == h && has_child(x))
        .min_by_key(|&x| tree.dual.faces[x])
        .ok_or_else(|| Error::Internal("no face above the deepest level".into()))?;
    let f = tree.dual.faces[node];
    let (u, w) = match tree.parent[node] {
        Some((_, e)) => g.edge(e),
        None => match (v, ab) {
            (Some(v), _) => {
                let mut best: Option<(Vertex, Vertex)> = None;
                for &d in g.face_darts(f) {
                    let (p, q) = (g.origin(d), g.head(d));
                    let other = if p == v {
                        q
                    } else if q == v {
                        p
                    } else {
                        continue;
                    };
                    if best.is_none_or(|(_, o)| other < o) {
                        best = Some((v, other));
                    }
                }
                best.ok_or_else(|| Error::Internal("root face misses its vertex".into()))?
            }
            (None, Some(e)) => g.edge(e),
            (None, None) => unreachable!(),
        },
    };
    let x = unique_member(g, f, inb)?;
    face_neighbours(g, f, x)
        .into_iter()
        .filter(|&y| y != u && y != w && !inb[y] && Some(y) != forbidden)
        .min()
        .ok_or_else(|| Error::Internal(format!("no leaf vertex next to {x} on face {f}")))
}
