//! Colouring pipelines. Every public entry point verifies its result with
//! the facial verifier before returning it.

mod cactus;
mod outerplane;
mod plane;

pub use cactus::{cactus_plan, colour_cactus_even, CactusPlan};
pub use outerplane::{colour_outerplane, colour_outerplane_single_block};
pub use plane::{augment_plus, colour_plane, peeling_layering, PeelingLayering};

use serde::{Deserialize, Serialize};

use crate::embed::{EmbeddedGraph, Vertex};
use crate::error::{Error, Result};
use crate::verify::verify_facial_nonrepetitive;

pub const CACTUS_PALETTE: usize = 7;
pub const OUTERPLANE_PALETTE: usize = 11;
pub const SINGLE_BLOCK_PALETTE: usize = 7;
pub const PLANE_PALETTE: usize = 22;

/// Colours are `1..=palette_max`, indexed by vertex id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Colouring {
    pub colours: Vec<usize>,
    pub palette_max: usize,
    pub verified: bool,
}

impl Colouring {
    pub fn distinct_colours(&self) -> usize {
        let mut c = self.colours.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    pub fn max_colour(&self) -> usize {
        self.colours.iter().copied().max().unwrap_or(0)
    }
}

/// Runs the verifier and wraps the colours, or reports the counterexample.
pub(crate) fn certified(g: &EmbeddedGraph, colours: Vec<usize>, palette_max: usize) -> Result<Colouring> {
    if let Some(&c) = colours.iter().find(|&&c| c == 0 || c > palette_max) {
        return Err(Error::Internal(format!("colour {c} outside palette 1..={palette_max}")));
    }
    if let Some(cx) = verify_facial_nonrepetitive(g, &colours)? {
        return Err(Error::Unverified(Box::new(cx)));
    }
    Ok(Colouring { colours, palette_max, verified: true })
}

/// `P` split as `A_0, B_1, A_1, ..., B_k, A_k`: maximal runs inside `B`
/// alternate with runs outside it, and only the end runs `A_0`, `A_k` may
/// be empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interleaving {
    pub outside: Vec<Vec<Vertex>>,
    pub inside: Vec<Vec<Vertex>>,
}

pub fn interleave_check_decomposition(path: &[Vertex], in_b: impl Fn(Vertex) -> bool) -> Interleaving {
    let mut outside = vec![Vec::new()];
    let mut inside: Vec<Vec<Vertex>> = Vec::new();
    let mut was_inside = false;
    for &v in path {
        let now = in_b(v);
        match (now, was_inside) {
            (true, true) => inside.last_mut().unwrap().push(v),
            (true, false) => inside.push(vec![v]),
            (false, true) => outside.push(vec![v]),
            (false, false) => outside.last_mut().unwrap().push(v),
        }
        was_inside = now;
    }
    if was_inside {
        outside.push(Vec::new());
    }
    Interleaving { outside, inside }
}
