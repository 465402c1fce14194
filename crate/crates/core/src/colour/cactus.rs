use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::{certified, Colouring, CACTUS_PALETTE};
use crate::embed::{EmbeddedGraph, FaceId, Vertex};
use crate::error::{Error, Result};
use crate::words::{
    bfs_levels, cycle_colouring, palindrome_free_nonrepetitive, ternary_nonrepetitive, EXCEPTIONAL_CYCLE_LENGTHS,
};

/// How a cactus with even cycles is coloured: one root per component, the
/// breadth-first levels, the set `H` coloured from `{1, 2, 3}`, and the
/// paths or cycles `H` splits into. Everything else gets `4 + s[level]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CactusPlan {
    pub roots: Vec<Vertex>,
    pub levels: Vec<usize>,
    pub h: Vec<Vertex>,
    /// Vertices added to `H` so its cycle length avoids the exceptional
    /// lengths.
    pub patched: Vec<Vertex>,
    /// `H` in outer-walk order, split where the walk stops being a path.
    pub h_runs: Vec<Vec<Vertex>>,
    /// Per run, whether it closes into a cycle.
    pub h_closed: Vec<bool>,
    /// Components that are a single cycle, coloured directly.
    pub cycles: Vec<Vec<Vertex>>,
}

fn simple_cactus(g: &EmbeddedGraph) -> Result<EmbeddedGraph> {
    let s = g.simplify().graph;
    if !s.is_outerplane() {
        return Err(Error::NotOuterplane);
    }
    for len in s.cactus_cycle_lengths()? {
        if len % 2 == 1 {
            return Err(Error::OddCycle(len));
        }
    }
    Ok(s)
}

/// Computes the plan on the simplification of `g`.
pub fn cactus_plan(g: &EmbeddedGraph) -> Result<CactusPlan> {
    let s = simple_cactus(g)?;
    plan_simple(&s)
}

fn plan_simple(s: &EmbeddedGraph) -> Result<CactusPlan> {
    let n = s.vertex_count();
    let adj = s.simple_adjacency();
    let deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let cycles: Vec<Vec<Vertex>> = s.blocks().into_iter().filter(|b| b.is_cycle()).map(|b| b.vertices).collect();
    let mut cycles_of_comp: HashMap<usize, Vec<usize>> = HashMap::new();
    for (i, c) in cycles.iter().enumerate() {
        cycles_of_comp.entry(s.component_of(c[0])).or_default().push(i);
    }
    let mut members: Vec<Vec<Vertex>> = vec![Vec::new(); s.component_count()];
    for v in 0..n {
        members[s.component_of(v)].push(v);
    }

    let mut plan = CactusPlan {
        roots: Vec::new(),
        levels: vec![0; n],
        h: Vec::new(),
        patched: Vec::new(),
        h_runs: Vec::new(),
        h_closed: Vec::new(),
        cycles: Vec::new(),
    };
    let active = vec![true; n];
    for (comp, verts) in members.iter().enumerate() {
        let comp_cycles = cycles_of_comp.get(&comp).cloned().unwrap_or_default();
        if comp_cycles.len() == 1 && cycles[comp_cycles[0]].len() == verts.len() {
            let f = s.outer_face_of_component(comp).expect("cycle has an outer face");
            plan.cycles.push(s.face_vertices(f));
            continue;
        }
        let root = verts
            .iter()
            .copied()
            .find(|&v| deg[v] == 1)
            .or_else(|| verts.iter().copied().find(|&v| deg[v] >= 3))
            .unwrap_or(verts[0]);
        plan.roots.push(root);
        let lv = bfs_levels(&adj, &active, &[root]);
        for &v in verts {
            plan.levels[v] = lv[v];
        }
        let mut h: Vec<Vertex> = Vec::new();
        for &ci in &comp_cycles {
            let top = cycles[ci].iter().map(|&v| lv[v]).max().unwrap();
            h.extend(cycles[ci].iter().copied().filter(|&v| lv[v] == top && deg[v] == 2));
        }
        if deg[root] != 1 && !comp_cycles.is_empty() {
            let (a, c) = leaf_cycle_neighbours(s, comp, &deg, &h)?;
            let patch: &[Vertex] = match h.len() {
                5 | 7 | 10 | 14 | 17 => &[a],
                9 => &[a, c],
                _ => &[],
            };
            h.extend_from_slice(patch);
            plan.patched.extend_from_slice(patch);
        }
        if h.is_empty() {
            continue;
        }
        let (runs, closed) = split_by_outer_walk(s, comp, &h);
        if closed && EXCEPTIONAL_CYCLE_LENGTHS.contains(&h.len()) {
            return Err(Error::Internal(format!("H closes into a cycle of length {}", h.len())));
        }
        plan.h.extend_from_slice(&h);
        plan.h_closed.extend(runs.iter().map(|_| closed));
        plan.h_runs.extend(runs);
    }
    plan.h.sort_unstable();
    Ok(plan)
}

/// The neighbours `a < c` of the deepest vertex `b` on the first inner face
/// with a single vertex of degree above two.
fn leaf_cycle_neighbours(s: &EmbeddedGraph, comp: usize, deg: &[usize], h: &[Vertex]) -> Result<(Vertex, Vertex)> {
    let face: FaceId = s
        .inner_faces()
        .filter(|&f| s.component_of(s.origin(s.face_darts(f)[0])) == comp)
        .find(|&f| s.face_vertices(f).iter().filter(|&&v| deg[v] > 2).count() == 1)
        .ok_or_else(|| Error::Internal("no leaf cycle in a cactus without leaves".into()))?;
    let walk = s.face_vertices(face);
    let k = walk.len();
    let i = walk
        .iter()
        .position(|v| h.contains(v))
        .ok_or_else(|| Error::Internal(format!("leaf cycle {face} has no vertex of H")))?;
    let (x, y) = (walk[(i + 1) % k], walk[(i + k - 1) % k]);
    Ok((x.min(y), x.max(y)))
}

/// Orders `h` along the outer walk of the component and links consecutive
/// members when the stretch of walk between them is a path.
fn split_by_outer_walk(s: &EmbeddedGraph, comp: usize, h: &[Vertex]) -> (Vec<Vec<Vertex>>, bool) {
    let Some(f) = s.outer_face_of_component(comp) else {
        return (vec![h.to_vec()], false);
    };
    let walk = s.face_vertices(f);
    let len = walk.len();
    let members: HashSet<Vertex> = h.iter().copied().collect();
    let pos: Vec<usize> = (0..len).filter(|&i| members.contains(&walk[i])).collect();
    let k = pos.len();
    if k <= 1 {
        return (vec![pos.iter().map(|&i| walk[i]).collect()], false);
    }
    let linked: Vec<bool> = (0..k)
        .map(|j| {
            let (from, to) = (pos[j], pos[(j + 1) % k]);
            let steps = (to + len - from) % len;
            let mut seen = HashSet::new();
            (0..=steps).all(|t| seen.insert(walk[(from + t) % len]))
        })
        .collect();
    let Some(cut) = linked.iter().position(|&l| !l) else {
        return (vec![pos.iter().map(|&i| walk[i]).collect()], k >= 3);
    };
    let mut runs = Vec::new();
    let mut current = Vec::new();
    for t in 1..=k {
        let j = (cut + t) % k;
        current.push(walk[pos[j]]);
        if !linked[j] {
            runs.push(std::mem::take(&mut current));
        }
    }
    (runs, false)
}

/// Colours `1..=7` for the simplification of `g`, not yet verified.
pub(crate) fn cactus_colours(g: &EmbeddedGraph) -> Result<Vec<usize>> {
    let s = simple_cactus(g)?;
    let plan = plan_simple(&s)?;
    let n = s.vertex_count();
    let height = plan.levels.iter().copied().max().unwrap_or(0);
    let word = palindrome_free_nonrepetitive(height + 1);
    let mut colours: Vec<usize> = plan.levels.iter().map(|&l| 4 + word[l]).collect();
    for cyc in &plan.cycles {
        let c = cycle_colouring(cyc.len())?;
        for (&v, &x) in cyc.iter().zip(&c) {
            colours[v] = 1 + x;
        }
    }
    for (run, &closed) in plan.h_runs.iter().zip(&plan.h_closed) {
        let c = if closed { cycle_colouring(run.len())? } else { ternary_nonrepetitive(run.len()) };
        for (&v, &x) in run.iter().zip(&c) {
            colours[v] = 1 + x;
        }
    }
    debug_assert_eq!(colours.len(), n);
    Ok(colours)
}

/// Facial nonrepetitive colouring with at most 7 colours of a cactus (loops
/// and parallel edges allowed) whose cycles are all even.
pub fn colour_cactus_even(g: &EmbeddedGraph) -> Result<Colouring> {
    let colours = cactus_colours(g)?;
    certified(g, colours, CACTUS_PALETTE)
}
