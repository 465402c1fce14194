//! Independent certification of facial nonrepetitive colourings.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::embed::{EmbeddedGraph, FaceId, Vertex};
use crate::error::{Error, Result};
use crate::words::{has_repetition, squares::square_families};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FacialPath {
    pub face: FaceId,
    pub vertices: Vec<Vertex>,
    pub outer: bool,
}

/// A repetitively coloured facial path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub face: FaceId,
    pub vertices: Vec<Vertex>,
    pub colours: Vec<usize>,
}

fn normalized(mut p: Vec<Vertex>) -> Vec<Vertex> {
    if p.len() > 1 && p[0] > p[p.len() - 1] {
        p.reverse();
    }
    p
}

/// For each position `s` of the doubled walk, the end of the longest window
/// starting at `s` with distinct vertices and at most `len` entries.
fn reach(doubled: &[Vertex], len: usize, stamp: &mut HashMap<Vertex, usize>) -> Vec<usize> {
    let m = doubled.len();
    let mut out = vec![0; m];
    stamp.clear();
    let mut end = 0;
    for s in 0..m {
        while end < m && end - s < len {
            match stamp.get(&doubled[end]) {
                Some(&at) if at >= s => break,
                _ => {
                    stamp.insert(doubled[end], end);
                    end += 1;
                }
            }
        }
        out[s] = end;
        if end == s {
            end += 1;
        }
    }
    out
}

/// Every facial path, once per face, written with the smaller endpoint
/// first. Single vertices are included.
pub fn facial_paths(g: &EmbeddedGraph) -> Vec<FacialPath> {
    let mut out = Vec::new();
    let mut stamp = HashMap::new();
    for f in 0..g.face_count() {
        let walk = g.face_vertices(f);
        let len = walk.len();
        let doubled: Vec<Vertex> = walk.iter().chain(walk.iter()).copied().collect();
        let r = reach(&doubled, len, &mut stamp);
        let mut set = BTreeSet::new();
        for s in 0..len {
            for e in s + 1..=r[s] {
                set.insert(normalized(doubled[s..e].to_vec()));
            }
        }
        let outer = g.is_outer_face(f);
        out.extend(set.into_iter().map(|vertices| FacialPath { face: f, vertices, outer }));
    }
    out
}

/// Facial paths by brute force: every simple path of the graph that occurs
/// contiguously, in either direction, on some face walk.
pub fn facial_paths_naive(g: &EmbeddedGraph) -> Vec<FacialPath> {
    let adj = g.simple_adjacency();
    let n = g.vertex_count();
    let mut paths: Vec<Vec<Vertex>> = Vec::new();
    let mut stack: Vec<Vertex> = Vec::new();
    fn extend(adj: &[Vec<Vertex>], stack: &mut Vec<Vertex>, paths: &mut Vec<Vec<Vertex>>) {
        paths.push(stack.clone());
        let v = *stack.last().unwrap();
        for &w in &adj[v] {
            if !stack.contains(&w) {
                stack.push(w);
                extend(adj, stack, paths);
                stack.pop();
            }
        }
    }
    for v in 0..n {
        stack.push(v);
        extend(&adj, &mut stack, &mut paths);
        stack.pop();
    }
    let mut out = BTreeSet::new();
    for f in 0..g.face_count() {
        let walk = g.face_vertices(f);
        let len = walk.len();
        for p in &paths {
            if p.len() > len {
                continue;
            }
            let occurs = (0..len).any(|i| {
                (0..p.len()).all(|j| walk[(i + j) % len] == p[j])
                    || (0..p.len()).all(|j| walk[(i + len - j) % len] == p[j])
            });
            if occurs {
                out.insert(FacialPath { face: f, vertices: normalized(p.clone()), outer: g.is_outer_face(f) });
            }
        }
    }
    out.into_iter().collect()
}

fn check_total(g: &EmbeddedGraph, colours: &[usize]) -> Result<()> {
    let got = colours.iter().filter(|&&c| c != 0).count();
    if colours.len() != g.vertex_count() || got != colours.len() {
        return Err(Error::PartialColouring { expected: g.vertex_count(), got });
    }
    Ok(())
}

/// Sparse table answering range-maximum queries.
struct RangeMax {
    table: Vec<Vec<usize>>,
}

impl RangeMax {
    fn new(values: Vec<usize>) -> Self {
        let mut table = vec![values];
        let mut width = 1;
        while 2 * width <= table[0].len() {
            let prev = table.last().unwrap();
            let next: Vec<usize> = (0..prev.len() - width).map(|i| prev[i].max(prev[i + width])).collect();
            table.push(next);
            width *= 2;
        }
        RangeMax { table }
    }

    /// Maximum over `lo..=hi`.
    fn query(&self, lo: usize, hi: usize) -> usize {
        let k = (usize::BITS - 1 - (hi - lo + 1).leading_zeros()) as usize;
        self.table[k][lo].max(self.table[k][hi + 1 - (1 << k)])
    }
}

/// First (by walk position, then half-length) repetitive facial path on
/// face `f`, as `(start, half)` on the walk.
fn face_counterexample(g: &EmbeddedGraph, f: FaceId, colours: &[usize]) -> Option<Counterexample> {
    let walk = g.face_vertices(f);
    let len = walk.len();
    if len < 2 {
        return None;
    }
    let doubled: Vec<Vertex> = walk.iter().chain(walk.iter()).copied().collect();
    let seq: Vec<usize> = doubled.iter().map(|&v| colours[v]).collect();
    let mut stamp = HashMap::new();
    let r = reach(&doubled, len, &mut stamp);
    let room = RangeMax::new(r.iter().enumerate().map(|(s, &e)| e - s).collect());
    let mut best: Option<(usize, usize)> = None;
    for fam in square_families(&seq) {
        if fam.first >= len {
            continue;
        }
        let (lo, hi) = (fam.first, fam.last.min(len - 1));
        let need = 2 * fam.period;
        if room.query(lo, hi) < need {
            continue;
        }
        let (mut a, mut b) = (lo, hi);
        while a < b {
            let m = (a + b) / 2;
            if room.query(a, m) >= need {
                b = m;
            } else {
                a = m + 1;
            }
        }
        if best.is_none_or(|x| (a, fam.period) < x) {
            best = Some((a, fam.period));
        }
    }
    best.map(|(start, half)| {
        let vertices = doubled[start..start + 2 * half].to_vec();
        let colours = seq[start..start + 2 * half].to_vec();
        Counterexample { face: f, vertices, colours }
    })
}

/// `Ok(None)` if every facial path has a square-free colour sequence,
/// otherwise the first counterexample by face id.
pub fn verify_facial_nonrepetitive(g: &EmbeddedGraph, colours: &[usize]) -> Result<Option<Counterexample>> {
    check_total(g, colours)?;
    let faces: Vec<FaceId> = (0..g.face_count()).collect();
    Ok(faces.par_iter().find_map_first(|&f| face_counterexample(g, f, colours)))
}

/// Verification by checking every enumerated facial path separately.
pub fn verify_facial_nonrepetitive_naive(g: &EmbeddedGraph, colours: &[usize]) -> Result<Option<Counterexample>> {
    check_total(g, colours)?;
    for p in facial_paths(g) {
        let seq: Vec<usize> = p.vertices.iter().map(|&v| colours[v]).collect();
        if let Some(rep) = has_repetition(&seq) {
            let range = rep.start..rep.start + 2 * rep.half;
            return Ok(Some(Counterexample {
                face: p.face,
                vertices: p.vertices[range.clone()].to_vec(),
                colours: seq[range].to_vec(),
            }));
        }
    }
    Ok(None)
}

pub const EXACT_GUARD: usize = 12;
pub const EXACT_TREE_GUARD: usize = 16;

/// Smallest number of colours, at most `max_colours`, admitting a facial
/// nonrepetitive colouring; `None` if more are needed.
pub fn exact_pi_f(g: &EmbeddedGraph, max_colours: usize) -> Result<Option<usize>> {
    let n = g.vertex_count();
    if n > EXACT_GUARD {
        return Err(Error::GuardExceeded { n, limit: EXACT_GUARD });
    }
    let paths: Vec<Vec<Vertex>> =
        facial_paths(g).into_iter().map(|p| p.vertices).filter(|v| v.len() >= 2 && v.len() % 2 == 0).collect();
    Ok(min_colours(n, &paths, max_colours))
}

/// Smallest number of colours making every path of the tree `t`
/// nonrepetitive; `None` if more than `max_colours` are needed.
pub fn exact_pi_tree_paths(t: &EmbeddedGraph, max_colours: usize) -> Result<Option<usize>> {
    let n = t.vertex_count();
    if !t.is_simple() || !t.is_tree() {
        return Err(Error::NotATree);
    }
    if n > EXACT_TREE_GUARD {
        return Err(Error::GuardExceeded { n, limit: EXACT_TREE_GUARD });
    }
    let adj = t.simple_adjacency();
    let mut paths = Vec::new();
    for x in 0..n {
        let mut stack = vec![vec![x]];
        while let Some(p) = stack.pop() {
            let v = *p.last().unwrap();
            if p.len() >= 2 && p.len() % 2 == 0 && x < v {
                paths.push(p.clone());
            }
            for &w in &adj[v] {
                if p.len() < 2 || p[p.len() - 2] != w {
                    let mut q = p.clone();
                    q.push(w);
                    stack.push(q);
                }
            }
        }
    }
    Ok(min_colours(n, &paths, max_colours))
}

/// Backtracking over colourings of `0..n` in vertex order. Each listed path
/// (of even length) must not be a square; it is checked once its largest
/// vertex is coloured. Colours are introduced in increasing order.
fn min_colours(n: usize, paths: &[Vec<Vertex>], max_colours: usize) -> Option<usize> {
    if n == 0 {
        return Some(0);
    }
    let mut by_last: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, p) in paths.iter().enumerate() {
        by_last[*p.iter().max().unwrap()].push(i);
    }
    (1..=max_colours).find(|&k| colourable(n, paths, &by_last, k))
}

fn colourable(n: usize, paths: &[Vec<Vertex>], by_last: &[Vec<usize>], k: usize) -> bool {
    let mut colour = vec![0usize; n];
    let mut max_used = vec![0usize; n + 1];
    let mut v = 0;
    loop {
        let limit = k.min(max_used[v] + 1);
        if colour[v] == limit {
            colour[v] = 0;
            if v == 0 {
                return false;
            }
            v -= 1;
            continue;
        }
        colour[v] += 1;
        let ok = by_last[v].iter().all(|&i| {
            let p = &paths[i];
            let h = p.len() / 2;
            (0..h).any(|j| colour[p[j]] != colour[p[j + h]])
        });
        if ok {
            if v + 1 == n {
                return true;
            }
            max_used[v + 1] = max_used[v].max(colour[v]);
            v += 1;
        }
    }
}
