use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::squares::{crossing_families, square_families};
use super::ternary_nonrepetitive;
use crate::error::{Error, Result};

/// Cycle lengths that need four symbols.
pub const EXCEPTIONAL_CYCLE_LENGTHS: [usize; 6] = [5, 7, 9, 10, 14, 17];

/// Lengths up to which the lexicographically least colouring is searched
/// directly; longer cycles close a factor of the ternary word with a
/// searched tail.
const BACKTRACK_LIMIT: usize = 24;
const TAIL: usize = 20;
const OFFSETS: usize = 64;
const TAIL_BUDGET: usize = 20_000;

/// Every arc of at most `c.len()` consecutive positions of the cyclic
/// sequence `c` is square-free.
pub fn is_cyclically_nonrepetitive<T: Eq + Copy>(c: &[T]) -> bool {
    let n = c.len();
    let doubled: Vec<T> = c.iter().chain(c.iter()).copied().collect();
    square_families(&doubled).iter().all(|f| 2 * f.period > n)
}

fn cache() -> &'static Mutex<HashMap<usize, Vec<usize>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<usize>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// A cyclically nonrepetitive sequence of length `n` over `{0, 1, 2}`, or
/// over `{0, 1, 2, 3}` when `n` is one of [`EXCEPTIONAL_CYCLE_LENGTHS`].
pub fn cycle_colouring(n: usize) -> Result<Vec<usize>> {
    if n < 3 {
        return Err(Error::CycleTooShort(n));
    }
    if let Some(c) = cache().lock().expect("cycle cache poisoned").get(&n) {
        return Ok(c.clone());
    }
    let alphabet = if EXCEPTIONAL_CYCLE_LENGTHS.contains(&n) { 4 } else { 3 };
    let found = if n <= BACKTRACK_LIMIT {
        cycle_colouring_backtrack(n, alphabet)
    } else {
        close_factor(n).or_else(|| cycle_colouring_backtrack(n, alphabet))
    };
    let c = found.ok_or_else(|| Error::Internal(format!("no cyclic colouring found for n = {n}")))?;
    cache().lock().expect("cycle cache poisoned").insert(n, c.clone());
    Ok(c)
}

/// Looks for a tail `t` such that `u t` is cyclically square-free, where
/// `u` is a factor of the ternary word. Arcs inside `u` are square-free
/// already; squares ending inside `t` are ruled out while extending it, and
/// the remaining ones cross the point where `t` meets `u` again.
fn close_factor(n: usize) -> Option<Vec<usize>> {
    let tail = TAIL.min(n / 2);
    let word = ternary_nonrepetitive(n - tail + OFFSETS);
    (0..OFFSETS).find_map(|o| close_with_tail(&word[o..o + n - tail], tail))
}

fn close_with_tail(u: &[usize], tail: usize) -> Option<Vec<usize>> {
    let n = u.len() + tail;
    let mut s = u.to_vec();
    let mut next = vec![0usize; tail];
    let mut k = 0;
    for _ in 0..TAIL_BUDGET {
        if next[k] == 3 {
            next[k] = 0;
            if k == 0 {
                return None;
            }
            k -= 1;
            s.pop();
            continue;
        }
        s.push(next[k]);
        next[k] += 1;
        if suffix_square(&s) {
            s.pop();
            continue;
        }
        if k + 1 < tail {
            k += 1;
            continue;
        }
        let doubled: Vec<usize> = s.iter().chain(s.iter()).copied().collect();
        if crossing_families(&doubled, n).iter().all(|f| 2 * f.period > n) {
            return Some(s);
        }
        s.pop();
    }
    None
}

/// Lexicographically least cyclically nonrepetitive sequence of length `n`
/// over `alphabet` symbols, if any.
pub fn cycle_colouring_backtrack(n: usize, alphabet: usize) -> Option<Vec<usize>> {
    let mut c = vec![0usize; n];
    let mut k = 0usize;
    let mut next = vec![0usize; n];
    loop {
        if next[k] == alphabet {
            if k == 0 {
                return None;
            }
            next[k] = 0;
            k -= 1;
            continue;
        }
        c[k] = next[k];
        next[k] += 1;
        if !suffix_square(&c[..=k]) && (k + 1 < n || is_cyclically_nonrepetitive(&c)) {
            if k + 1 == n {
                return Some(c);
            }
            k += 1;
        }
    }
}

/// Whether `s` ends with a square.
fn suffix_square(s: &[usize]) -> bool {
    let n = s.len();
    (1..=n / 2).any(|p| (0..p).all(|j| s[n - 1 - j] == s[n - 1 - p - j]))
}
