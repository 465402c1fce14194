//! Squares (repetitions) in sequences via the Main–Lorentz divide and
//! conquer. Every occurrence of a square is covered by some
//! [`SquareFamily`], and the total number of families is `O(n log n)`.

/// Squares of half-length `period` starting at every position in
/// `first..=last`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SquareFamily {
    pub period: usize,
    pub first: usize,
    pub last: usize,
}

pub fn square_families<T: Eq + Copy>(s: &[T]) -> Vec<SquareFamily> {
    let mut out = Vec::new();
    let mut stack = vec![(0usize, s.len())];
    while let Some((l, r)) = stack.pop() {
        if r - l < 2 {
            continue;
        }
        let mid = (l + r) / 2;
        crossing(s, l, mid, r, &mut out);
        stack.push((l, mid));
        stack.push((mid, r));
    }
    out
}

/// Squares of `s` containing both `s[mid - 1]` and `s[mid]`.
pub fn crossing_families<T: Eq + Copy>(s: &[T], mid: usize) -> Vec<SquareFamily> {
    let mut out = Vec::new();
    if 0 < mid && mid < s.len() {
        crossing(s, 0, mid, s.len(), &mut out);
    }
    out
}

fn z_function<T: Eq>(s: &[T]) -> Vec<usize> {
    let n = s.len();
    let mut z = vec![0; n];
    if n == 0 {
        return z;
    }
    z[0] = n;
    let (mut l, mut r) = (0, 0);
    for i in 1..n {
        if i < r {
            z[i] = (r - i).min(z[i - l]);
        }
        while i + z[i] < n && s[z[i]] == s[i + z[i]] {
            z[i] += 1;
        }
        if i + z[i] > r {
            l = i;
            r = i + z[i];
        }
    }
    z
}

/// Squares in `s[l..r)` that contain both `s[mid - 1]` and `s[mid]`.
fn crossing<T: Eq + Copy>(s: &[T], l: usize, mid: usize, r: usize, out: &mut Vec<SquareFamily>) {
    let u = &s[l..mid];
    let v = &s[mid..r];
    let (nu, nv) = (u.len(), v.len());

    // Centre at or left of `mid`.
    let rev_u: Vec<T> = u.iter().rev().copied().collect();
    let z_rev_u = z_function(&rev_u);
    let mut v_sep_u: Vec<Option<T>> = v.iter().map(|&x| Some(x)).collect();
    v_sep_u.push(None);
    v_sep_u.extend(u.iter().map(|&x| Some(x)));
    let z_vu = z_function(&v_sep_u);
    for p in 1..=nu {
        let k1 = if p < nu { z_rev_u[p] } else { 0 };
        let k2 = z_vu[nv + 1 + nu - p];
        let lo = p.saturating_sub(k2);
        let hi = k1.min(p - 1);
        if lo <= hi {
            out.push(SquareFamily { period: p, first: mid - p - hi, last: mid - p - lo });
        }
    }

    // Centre strictly right of `mid`.
    let z_v = z_function(v);
    let mut rev_u_sep_rev_v: Vec<Option<T>> = rev_u.iter().map(|&x| Some(x)).collect();
    rev_u_sep_rev_v.push(None);
    rev_u_sep_rev_v.extend(v.iter().rev().map(|&x| Some(x)));
    let z_uv = z_function(&rev_u_sep_rev_v);
    for p in 1..=nv {
        let k1 = z_uv[nu + 1 + nv - p];
        let k2 = if p < nv { z_v[p] } else { 0 };
        let lo = p.saturating_sub(k1).max(1);
        let hi = k2.min(p - 1);
        if lo <= hi {
            out.push(SquareFamily { period: p, first: mid + lo - p, last: mid + hi - p });
        }
    }
}

/// Every square `(start, period)` by brute force, for cross-checking.
pub fn naive_squares<T: Eq>(s: &[T]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for p in 1..=s.len() / 2 {
        for i in 0..=s.len() - 2 * p {
            if s[i..i + p] == s[i + p..i + 2 * p] {
                out.push((i, p));
            }
        }
    }
    out.sort_unstable();
    out
}
