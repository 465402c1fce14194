//! Small hand-made graphs used across tests and examples.

use std::f64::consts::TAU;

use super::{from_drawing, polygon_with_chords};
use crate::embed::EmbeddedGraph;

pub fn triangle() -> EmbeddedGraph {
    polygon_with_chords(3, &[])
}

/// K4 drawn as a triangle with a vertex (3) in the middle.
pub fn k4() -> EmbeddedGraph {
    let points = [(0.0, 0.0), (4.0, 0.0), (2.0, 4.0), (2.0, 1.5)];
    let edges = vec![(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)];
    from_drawing(&points, edges).unwrap()
}

/// Rim `0..k` around hub `k`.
pub fn wheel(k: usize) -> EmbeddedGraph {
    let mut points: Vec<(f64, f64)> =
        (0..k).map(|i| ((TAU * i as f64 / k as f64).cos(), (TAU * i as f64 / k as f64).sin())).collect();
    points.push((0.0, 0.0));
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    edges.extend((0..k).map(|i| (i, k)));
    from_drawing(&points, edges).unwrap()
}

/// Triangle 3-4-5 inside triangle 0-1-2, joined by 0-3, 1-4, 2-5.
pub fn nested_triangles() -> EmbeddedGraph {
    let points = [(0.0, 0.0), (6.0, 0.0), (3.0, 6.0), (2.0, 1.5), (4.0, 1.5), (3.0, 3.5)];
    let edges = vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)];
    from_drawing(&points, edges).unwrap()
}

/// Triangles 0-1-2 and 3-4-5 joined by the bridge 2-3.
pub fn two_triangles_with_bridge() -> EmbeddedGraph {
    let points = [(0.0, 1.0), (0.0, -1.0), (1.0, 0.0), (2.0, 0.0), (3.0, 1.0), (3.0, -1.0)];
    let edges = vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)];
    from_drawing(&points, edges).unwrap()
}

/// Triangles 0-1-2 and 2-3-4 sharing vertex 2.
pub fn bowtie() -> EmbeddedGraph {
    let points = [(0.0, 1.0), (0.0, -1.0), (1.0, 0.0), (2.0, 1.0), (2.0, -1.0)];
    let edges = vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)];
    from_drawing(&points, edges).unwrap()
}

/// Fan on `n` vertices: the `n`-gon with every chord from vertex 0.
pub fn fan(n: usize) -> EmbeddedGraph {
    let chords: Vec<(usize, usize)> = (2..n - 1).map(|j| (0, j)).collect();
    polygon_with_chords(n, &chords)
}

/// 22-gon whose even blocking set, after cutting off its first ear, has ten
/// members.
pub fn ten_member_strip() -> EmbeddedGraph {
    let chords = [
        (1, 5),
        (2, 5),
        (3, 5),
        (5, 7),
        (5, 10),
        (8, 10),
        (10, 13),
        (13, 15),
        (15, 21),
        (16, 19),
        (16, 21),
        (17, 19),
        (19, 21),
    ];
    polygon_with_chords(22, &chords)
}

/// Outerplane graph with two 2-connected components, a pendant path and a
/// bridge between blocks: square 0-1-2-3 with chord 0-2, bridge 2-4,
/// pentagon 4-5-6-7-8 with chords 4-6 and 4-7, pendant path 8-9-10, and
/// pendant 1-11.
pub fn mixed() -> EmbeddedGraph {
    let points = [
        (0.0, 0.0),
        (1.0, -1.0),
        (2.0, 0.0),
        (1.0, 1.0),
        (3.0, 0.0),
        (4.0, -1.0),
        (5.0, -0.5),
        (5.0, 0.5),
        (4.0, 1.0),
        (4.0, 2.0),
        (4.0, 3.0),
        (1.0, -2.0),
    ];
    let edges = vec![
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 0),
        (0, 2),
        (2, 4),
        (4, 5),
        (5, 6),
        (6, 7),
        (7, 8),
        (8, 4),
        (4, 6),
        (4, 7),
        (8, 9),
        (9, 10),
        (1, 11),
    ];
    from_drawing(&points, edges).unwrap()
}
