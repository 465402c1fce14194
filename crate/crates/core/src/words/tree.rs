use std::collections::VecDeque;

use super::palindrome_free_nonrepetitive;
use crate::embed::{EmbeddedGraph, Vertex};
use crate::error::{Error, Result};

/// Trees larger than this are not re-verified path by path.
const PATH_CHECK_LIMIT: usize = 512;
/// Largest tree handed to the exhaustive fallback search.
const BACKTRACK_LIMIT: usize = 16;

/// Adjacent vertices differ in level by at most one.
pub fn levelling_ok(edges: &[(Vertex, Vertex)], levels: &[usize]) -> bool {
    edges.iter().all(|&(u, v)| levels[u].abs_diff(levels[v]) <= 1)
}

pub fn level_pattern(path: &[Vertex], levels: &[usize]) -> Vec<usize> {
    path.iter().map(|&v| levels[v]).collect()
}

/// Breadth-first distances from `roots`, restricted to `active` vertices.
pub(crate) fn bfs_levels(adj: &[Vec<Vertex>], active: &[bool], roots: &[Vertex]) -> Vec<usize> {
    let mut level = vec![usize::MAX; adj.len()];
    let mut queue = VecDeque::new();
    for &r in roots {
        level[r] = 0;
        queue.push_back(r);
    }
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if active[w] && level[w] == usize::MAX {
                level[w] = level[v] + 1;
                queue.push_back(w);
            }
        }
    }
    level
}

/// Colours every component of the forest induced by `active` with
/// `palette[s[level]]`, where levels are distances from the component's
/// smallest vertex and `s` is palindrome-free and nonrepetitive. Inactive
/// vertices get colour 0.
pub fn forest_colouring(adj: &[Vec<Vertex>], active: &[bool], palette: [usize; 4]) -> Vec<usize> {
    let n = adj.len();
    let mut level = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for r in 0..n {
        if !active[r] || level[r] != usize::MAX {
            continue;
        }
        level[r] = 0;
        queue.push_back(r);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if active[w] && level[w] == usize::MAX {
                    level[w] = level[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    let height = (0..n).filter(|&v| active[v]).map(|v| level[v]).max().unwrap_or(0);
    let s = palindrome_free_nonrepetitive(height + 1);
    (0..n).map(|v| if active[v] { palette[s[level[v]]] } else { 0 }).collect()
}

/// Every path of the tree (given by adjacency) has a square-free colour
/// sequence. Checks, for every pair of endpoints, whether the path between
/// them is itself a square; every repetition is such a path.
pub fn is_path_nonrepetitive_tree(adj: &[Vec<Vertex>], colours: &[usize]) -> bool {
    let n = adj.len();
    let mut path: Vec<usize> = Vec::with_capacity(n);
    for x in 0..n {
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(x, usize::MAX, 0usize)];
        path.clear();
        path.push(colours[x]);
        while let Some(top) = stack.last_mut() {
            let (v, parent, idx) = *top;
            if idx < adj[v].len() {
                top.2 += 1;
                let w = adj[v][idx];
                if w == parent {
                    continue;
                }
                path.push(colours[w]);
                let len = path.len();
                if len.is_multiple_of(2) && path[..len / 2] == path[len / 2..] {
                    return false;
                }
                stack.push((w, v, 0));
            } else {
                stack.pop();
                path.pop();
            }
        }
    }
    true
}

/// Nonrepetitive colouring of a tree from the breadth-first levelling at
/// `root`, using colours from `palette`. The result is re-verified on all
/// paths for small trees, with an exhaustive search as fallback.
pub fn tree_colouring(t: &EmbeddedGraph, root: Vertex, palette: [usize; 4]) -> Result<Vec<usize>> {
    if !t.is_simple() || !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.vertex_count();
    if n == 0 {
        return Ok(Vec::new());
    }
    if root >= n {
        return Err(Error::Malformed(format!("root {root} out of range")));
    }
    let adj = t.simple_adjacency();
    let active = vec![true; n];
    let level = bfs_levels(&adj, &active, &[root]);
    let height = level.iter().copied().max().unwrap_or(0);
    let s = palindrome_free_nonrepetitive(height + 1);
    let colours: Vec<usize> = level.iter().map(|&l| palette[s[l]]).collect();
    if n > PATH_CHECK_LIMIT || is_path_nonrepetitive_tree(&adj, &colours) {
        return Ok(colours);
    }
    if n <= BACKTRACK_LIMIT {
        if let Some(c) = tree_backtrack(&adj, root, palette) {
            return Ok(c);
        }
    }
    Err(Error::Internal("tree colouring failed its path check".into()))
}

/// Exhaustive search over 4-colourings in breadth-first order, checking
/// every path that ends at the newly coloured vertex.
fn tree_backtrack(adj: &[Vec<Vertex>], root: Vertex, palette: [usize; 4]) -> Option<Vec<usize>> {
    let n = adj.len();
    let active = vec![true; n];
    let level = bfs_levels(adj, &active, &[root]);
    let mut order: Vec<Vertex> = (0..n).collect();
    order.sort_by_key(|&v| (level[v], v));
    let mut colour = vec![usize::MAX; n];
    let mut choice = vec![0usize; n];
    let mut k = 0;
    loop {
        let v = order[k];
        if choice[k] == 4 {
            choice[k] = 0;
            colour[v] = usize::MAX;
            if k == 0 {
                return None;
            }
            k -= 1;
            continue;
        }
        colour[v] = palette[choice[k]];
        choice[k] += 1;
        if paths_to_ok(adj, &colour, v) {
            if k + 1 == n {
                return Some(colour);
            }
            k += 1;
        }
    }
}

fn paths_to_ok(adj: &[Vec<Vertex>], colour: &[usize], v: Vertex) -> bool {
    let mut stack = vec![(v, usize::MAX, 0usize)];
    let mut path = vec![colour[v]];
    while let Some(top) = stack.last_mut() {
        let (x, parent, idx) = *top;
        if idx < adj[x].len() {
            top.2 += 1;
            let w = adj[x][idx];
            if w == parent || colour[w] == usize::MAX {
                continue;
            }
            path.push(colour[w]);
            let len = path.len();
            if len.is_multiple_of(2) && path[..len / 2] == path[len / 2..] {
                return false;
            }
            stack.push((w, x, 0));
        } else {
            stack.pop();
            path.pop();
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::has_repetition_naive;

    const PALETTE: [usize; 4] = [1, 2, 3, 4];

    fn tree(n: usize, edges: &[(usize, usize)]) -> EmbeddedGraph {
        EmbeddedGraph::from_edges_any_embedding(n, edges.to_vec()).unwrap()
    }

    /// Every path, listed explicitly, checked with the naive square finder.
    fn all_paths_ok(adj: &[Vec<usize>], colours: &[usize]) -> bool {
        let n = adj.len();
        for x in 0..n {
            let mut parent = vec![usize::MAX; n];
            let mut order = vec![x];
            let mut i = 0;
            while i < order.len() {
                let v = order[i];
                i += 1;
                for &w in &adj[v] {
                    if w != x && parent[w] == usize::MAX {
                        parent[w] = v;
                        order.push(w);
                    }
                }
            }
            for &y in &order {
                let mut seq = vec![colours[y]];
                let mut v = y;
                while v != x {
                    v = parent[v];
                    seq.push(colours[v]);
                }
                if has_repetition_naive(&seq).is_some() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn single_vertex() {
        let t = tree(1, &[]);
        assert_eq!(tree_colouring(&t, 0, PALETTE).unwrap().len(), 1);
    }

    #[test]
    fn path_on_ten_vertices() {
        let edges: Vec<_> = (0..9).map(|i| (i, i + 1)).collect();
        let t = tree(10, &edges);
        let c = tree_colouring(&t, 0, PALETTE).unwrap();
        assert!(all_paths_ok(&t.simple_adjacency(), &c));
        assert!(c.iter().all(|x| PALETTE.contains(x)));
    }

    #[test]
    fn star_uses_two_colours() {
        let t = tree(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]);
        let mut c = tree_colouring(&t, 0, PALETTE).unwrap();
        c.sort();
        c.dedup();
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn rejects_cycle() {
        let t = crate::gen::polygon_with_chords(4, &[]);
        assert!(matches!(tree_colouring(&t, 0, PALETTE), Err(Error::NotATree)));
    }

    #[test]
    fn fast_path_check_agrees_with_naive() {
        let t = tree(7, &[(0, 1), (1, 2), (2, 3), (1, 4), (4, 5), (5, 6)]);
        let adj = t.simple_adjacency();
        for code in 0..3usize.pow(7) {
            let c: Vec<usize> = (0..7).map(|i| code / 3usize.pow(i as u32) % 3).collect();
            assert_eq!(is_path_nonrepetitive_tree(&adj, &c), all_paths_ok(&adj, &c));
        }
    }

    #[test]
    fn backtracking_finds_colouring() {
        let t = tree(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6), (6, 7)]);
        let adj = t.simple_adjacency();
        let c = tree_backtrack(&adj, 0, PALETTE).unwrap();
        assert!(all_paths_ok(&adj, &c));
    }

    #[test]
    fn levelling_and_pattern() {
        let edges = [(0, 1), (1, 2)];
        assert!(levelling_ok(&edges, &[0, 1, 2]));
        assert!(!levelling_ok(&edges, &[0, 2, 2]));
        assert_eq!(level_pattern(&[2, 1, 0], &[0, 1, 2]), vec![2, 1, 0]);
    }
}
