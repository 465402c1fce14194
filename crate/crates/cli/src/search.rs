//! Exhaustive sweep of small graphs for their exact facial nonrepetitive
//! chromatic number.

use nonrep::embed::GraphJson;
use nonrep::gen::{enumerate_small, GenKind};
use nonrep::verify::{exact_pi_f, exact_pi_tree_paths};
use nonrep::EmbeddedGraph;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::CliResult;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchRow {
    pub kind: String,
    pub n: usize,
    pub graphs: usize,
    pub min_pi: Option<usize>,
    pub max_pi: Option<usize>,
    /// Graphs needing more than `max_colours`.
    pub exceeded: usize,
    /// A graph attaining `max_pi`, or one that exceeded the limit.
    pub witness: Option<GraphJson>,
}

fn pi(kind: GenKind, g: &EmbeddedGraph, max_colours: usize) -> nonrep::Result<Option<usize>> {
    if kind == GenKind::Tree {
        exact_pi_tree_paths(g, max_colours)
    } else {
        exact_pi_f(g, max_colours)
    }
}

pub fn search_n(kind: GenKind, n: usize, max_colours: usize) -> CliResult<SearchRow> {
    let graphs = enumerate_small(kind, n)?;
    let values: Vec<Option<usize>> =
        graphs.par_iter().map(|g| pi(kind, g, max_colours)).collect::<nonrep::Result<_>>()?;
    let found: Vec<usize> = values.iter().flatten().copied().collect();
    let exceeded = values.iter().filter(|v| v.is_none()).count();
    let worst = values.iter().position(|v| v.is_none()).or_else(|| {
        let max = found.iter().max()?;
        values.iter().position(|v| v.as_ref() == Some(max))
    });
    Ok(SearchRow {
        kind: kind.name().into(),
        n,
        graphs: graphs.len(),
        min_pi: found.iter().min().copied(),
        max_pi: found.iter().max().copied(),
        exceeded,
        witness: worst.map(|i| graphs[i].to_json()),
    })
}

pub fn search(kind: GenKind, max_n: usize, max_colours: usize) -> CliResult<Vec<SearchRow>> {
    (1..=max_n).map(|n| search_n(kind, n, max_colours)).collect()
}
