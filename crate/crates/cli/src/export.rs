//! DOT and SVG renderings. Outerplane graphs are drawn with their outer
//! walk on a circle; other graphs get one concentric ring per peeling
//! layer.

use std::f64::consts::TAU;
use std::fmt::Write;

use nonrep::colour::peeling_layering;
use nonrep::EmbeddedGraph;

pub const PALETTE: [&str; 22] = [
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6", "#bcf60c", "#fabebe",
    "#008080", "#e6beff", "#9a6324", "#fffac8", "#800000", "#aaffc3", "#808000", "#ffd8b1", "#000075", "#808080",
    "#b15928", "#6a3d9a",
];

const UNCOLOURED: &str = "#ffffff";

fn fill(colours: Option<&[usize]>, v: usize) -> &'static str {
    match colours.map(|c| c[v]) {
        Some(c) if c >= 1 => PALETTE[(c - 1) % PALETTE.len()],
        _ => UNCOLOURED,
    }
}

pub fn to_dot(g: &EmbeddedGraph, colours: Option<&[usize]>) -> String {
    let mut s = String::from("graph G {\n  node [style=filled];\n");
    for v in 0..g.vertex_count() {
        let label = match colours {
            Some(c) => format!("{v}:{}", c[v]),
            None => v.to_string(),
        };
        writeln!(s, "  {v} [label=\"{label}\", fillcolor=\"{}\"];", fill(colours, v)).unwrap();
    }
    for &(u, w) in g.edges() {
        writeln!(s, "  {u} -- {w};").unwrap();
    }
    s.push_str("}\n");
    s
}

/// Vertex positions in a `[-1, 1]` square.
pub fn layout(g: &EmbeddedGraph) -> Vec<(f64, f64)> {
    let n = g.vertex_count();
    let layering = peeling_layering(g);
    let rings = layering.layer_count().max(1);
    let mut order: Vec<Vec<usize>> = vec![Vec::new(); rings];
    let mut placed = vec![false; n];
    let mut current = g.clone();
    let mut alive: Vec<usize> = (0..n).collect();
    for ring in order.iter_mut() {
        for f in current.outer_faces() {
            for v in current.face_vertices(f) {
                let old = alive[v];
                if !placed[old] {
                    placed[old] = true;
                    ring.push(old);
                }
            }
        }
        for (local, &old) in alive.iter().enumerate() {
            if !placed[old] && current.degree(local) == 0 {
                placed[old] = true;
                ring.push(old);
            }
        }
        let keep: Vec<bool> = alive.iter().map(|&v| !placed[v]).collect();
        let (next, map) = current.induced_embedded_subgraph(&keep);
        alive = map.vertices.iter().map(|&l| alive[l]).collect();
        current = next;
    }
    let mut pos = vec![(0.0, 0.0); n];
    for (i, ring) in order.iter().enumerate() {
        let r = (rings - i) as f64 / rings as f64;
        for (j, &v) in ring.iter().enumerate() {
            let a = TAU * j as f64 / ring.len() as f64;
            pos[v] = if ring.len() == 1 && i > 0 { (0.0, 0.0) } else { (r * a.cos(), r * a.sin()) };
        }
    }
    pos
}

pub fn to_svg(g: &EmbeddedGraph, colours: Option<&[usize]>) -> String {
    let size = 40.0 * (g.vertex_count() as f64).sqrt().max(4.0);
    let half = size / 2.0;
    let pad = 20.0;
    let pos: Vec<(f64, f64)> =
        layout(g).into_iter().map(|(x, y)| (half + pad + x * half, half + pad + y * half)).collect();
    let total = size + 2.0 * pad;
    let mut s = String::new();
    writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{total:.0}" height="{total:.0}">"#).unwrap();
    s.push_str("<g stroke=\"#333\" stroke-width=\"1.5\" fill=\"none\">\n");
    for &(u, w) in g.edges() {
        let (a, b) = (pos[u], pos[w]);
        if u == w {
            writeln!(s, r#"<circle cx="{:.1}" cy="{:.1}" r="10"/>"#, a.0, a.1 - 10.0).unwrap();
        } else {
            writeln!(s, r#"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}"/>"#, a.0, a.1, b.0, b.1).unwrap();
        }
    }
    s.push_str("</g>\n<g stroke=\"#000\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">\n");
    for (v, &(x, y)) in pos.iter().enumerate() {
        writeln!(s, r#"<circle cx="{x:.1}" cy="{y:.1}" r="8" fill="{}"/>"#, fill(colours, v)).unwrap();
        let label = colours.map_or(v.to_string(), |c| c[v].to_string());
        writeln!(s, r#"<text x="{x:.1}" y="{:.1}" stroke="none">{label}</text>"#, y + 3.5).unwrap();
    }
    s.push_str("</g>\n</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use nonrep::gen::fixtures;

    #[test]
    fn dot_lists_every_edge() {
        let d = to_dot(&fixtures::triangle(), Some(&[1, 2, 3]));
        assert_eq!(d.matches(" -- ").count(), 3);
        assert!(d.contains(PALETTE[2]));
    }

    #[test]
    fn wheel_hub_sits_in_the_middle() {
        let pos = layout(&fixtures::wheel(5));
        assert_eq!(pos[5], (0.0, 0.0));
        for p in &pos[..5] {
            assert!(((p.0 * p.0 + p.1 * p.1).sqrt() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn svg_has_one_disc_per_vertex() {
        let svg = to_svg(&fixtures::nested_triangles(), None);
        assert_eq!(svg.matches("r=\"8\"").count(), 6);
    }
}
