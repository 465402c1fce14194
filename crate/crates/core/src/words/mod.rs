//! Nonrepetitive sequences and the colourings built from them.

mod cycle;
pub mod squares;
mod tree;

pub use cycle::{cycle_colouring, cycle_colouring_backtrack, is_cyclically_nonrepetitive, EXCEPTIONAL_CYCLE_LENGTHS};
pub(crate) use tree::bfs_levels;
pub use tree::{forest_colouring, is_path_nonrepetitive_tree, level_pattern, levelling_ok, tree_colouring};

use serde::{Deserialize, Serialize};

use squares::square_families;

/// A block `s[start..start + 2 * half]` whose halves agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Repetition {
    pub start: usize,
    pub half: usize,
}

/// The repetition with the smallest start (then smallest half), if any.
pub fn has_repetition<T: Eq + Copy>(s: &[T]) -> Option<Repetition> {
    square_families(s).into_iter().map(|f| (f.first, f.period)).min().map(|(start, half)| Repetition { start, half })
}

pub fn is_nonrepetitive<T: Eq + Copy>(s: &[T]) -> bool {
    has_repetition(s).is_none()
}

/// Brute-force counterpart of [`has_repetition`].
pub fn has_repetition_naive<T: Eq>(s: &[T]) -> Option<Repetition> {
    let mut best: Option<(usize, usize)> = None;
    for half in 1..=s.len() / 2 {
        let mut run = 0;
        for i in 0..s.len() - half {
            if s[i] == s[i + half] {
                run += 1;
                if run == half {
                    let start = i + 1 - half;
                    if best.is_none_or(|b| (start, half) < b) {
                        best = Some((start, half));
                    }
                    break;
                }
            } else {
                run = 0;
            }
        }
    }
    best.map(|(start, half)| Repetition { start, half })
}

/// No block of length at least 2 equals its reverse. Any such block
/// contains a palindrome of length 2 or 3 at its centre, so only those are
/// checked.
pub fn is_palindrome_free<T: Eq>(s: &[T]) -> bool {
    s.windows(2).all(|w| w[0] != w[1]) && s.windows(3).all(|w| w[0] != w[2])
}

/// Prefix of length `n` of the fixed point of `0 -> 012, 1 -> 02, 2 -> 1`,
/// a square-free word over `{0, 1, 2}`.
pub fn ternary_nonrepetitive(n: usize) -> Vec<usize> {
    let mut w = vec![0usize];
    let mut expanded = 0;
    while w.len() < n {
        let x = w[expanded];
        match x {
            0 => w.extend_from_slice(&[0, 1, 2][usize::from(expanded == 0)..]),
            1 => w.extend_from_slice(&[0, 2]),
            _ => w.push(1),
        }
        expanded += 1;
    }
    w.truncate(n);
    w
}

/// Prefix of length `n` of the ternary word with symbol `3` inserted after
/// every two letters. Square-free and palindrome-free over `{0, 1, 2, 3}`.
pub fn palindrome_free_nonrepetitive(n: usize) -> Vec<usize> {
    let base = ternary_nonrepetitive(n);
    let mut out = Vec::with_capacity(n);
    for (i, &x) in base.iter().enumerate() {
        if out.len() == n {
            break;
        }
        out.push(x);
        if i % 2 == 1 && out.len() < n {
            out.push(3);
        }
    }
    out
}
