use super::{twin, Dart, EmbeddedGraph};

/// Code identifying the embedded graph up to orientation-preserving
/// isomorphism that maps outer faces to outer faces.
///
/// Each component is coded by a breadth-first traversal started from every
/// dart on its outer face; the least code wins. Component codes are sorted
/// and concatenated, with isolated vertices contributing `[0]`.
pub fn canonical_code(g: &EmbeddedGraph) -> Vec<usize> {
    let mut parts: Vec<Vec<usize>> = Vec::new();
    let mut seen_component = vec![false; g.component_count()];
    for v in 0..g.vertex_count() {
        let c = g.component_of(v);
        if seen_component[c] {
            continue;
        }
        seen_component[c] = true;
        let starts: Vec<Dart> = match g.outer_face_of_component(c) {
            Some(f) => g.face_darts(f).to_vec(),
            None => Vec::new(),
        };
        let best = starts.iter().map(|&d| code_from(g, d)).min().unwrap_or_else(|| vec![0]);
        parts.push(best);
    }
    parts.sort();
    let mut out = vec![g.vertex_count(), g.edge_count(), parts.len()];
    for p in parts {
        out.push(p.len());
        out.extend(p);
    }
    out
}

fn code_from(g: &EmbeddedGraph, d0: Dart) -> Vec<usize> {
    const NONE: usize = usize::MAX;
    let mut label = vec![NONE; g.vertex_count()];
    let mut start = vec![NONE; g.vertex_count()];
    let mut queue = std::collections::VecDeque::new();
    let root = g.origin(d0);
    label[root] = 0;
    start[root] = d0;
    queue.push_back(root);
    let mut next_label = 1;
    let mut code = Vec::new();
    let offset = |start: &[usize], d: Dart| {
        let v = g.origin(d);
        let deg = g.degree(v);
        (g.rotation_index(d) + deg - g.rotation_index(start[v])) % deg
    };
    while let Some(v) = queue.pop_front() {
        let deg = g.degree(v);
        code.push(deg);
        let base = g.rotation_index(start[v]);
        for i in 0..deg {
            let d = g.rotation(v)[(base + i) % deg];
            let w = g.head(d);
            if label[w] == NONE {
                label[w] = next_label;
                next_label += 1;
                start[w] = twin(d);
                queue.push_back(w);
            }
            code.push(label[w]);
            code.push(offset(&start, twin(d)));
        }
    }
    code
}
