//! An independent brute-force reimplementation of the root search, used to
//! cross-check the engine. It enumerates every candidate vector up to a k0
//! bound by direct recursion, sorts the whole list by the distance ordering,
//! and replays the greedy acceptance. No cell queue, no divisibility
//! stepping, no prefix pruning.
//!
//! Candidates are restricted to nonincreasing, nonnegative spatial
//! coordinates: any other vector has positive inner product with one of the
//! initial walls -vi + v(i+1), -vn and is rejected by the greedy pass anyway.

use crate::engine::initial_roots;
use crate::lattice::{QuadraticForm, Root};

fn isqrt(v: i64) -> i64 {
    if v <= 0 {
        return 0;
    }
    let mut r = (v as f64).sqrt() as i64;
    while r * r > v {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= v {
        r += 1;
    }
    r
}

/// Every valid root with 1 <= k0 <= max_k0 and nonincreasing nonnegative
/// spatial coordinates, in acceptance order: priority ascending, then norm
/// descending, then spatial coordinates lexicographically descending.
pub fn enumerate_candidates(form: &QuadraticForm, max_k0: i64) -> Vec<Root> {
    let mut out = Vec::new();
    for k0 in 1..=max_k0 {
        for d in form.admissible_norms() {
            let target = d + form.phi() * k0 * k0;
            let mut coords = vec![0i64; form.dim()];
            coords[0] = k0;
            collect(form, &mut coords, 1, target, isqrt(target), &mut out);
        }
    }
    out.sort_by(|a, b| {
        a.priority()
            .cmp(&b.priority())
            .then(b.norm().cmp(&a.norm()))
            .then(b.coords().cmp(a.coords()))
    });
    out
}

fn collect(
    form: &QuadraticForm,
    coords: &mut Vec<i64>,
    idx: usize,
    remaining: i64,
    max_val: i64,
    out: &mut Vec<Root>,
) {
    if idx == form.dim() {
        if remaining == 0 {
            if let Ok(root) = Root::new(form, coords.clone()) {
                out.push(root);
            }
        }
        return;
    }
    for v in (0..=max_val.min(isqrt(remaining))).rev() {
        coords[idx] = v;
        collect(form, coords, idx + 1, remaining - v * v, v, out);
        coords[idx] = 0;
    }
}

/// Greedy acceptance over the brute-force candidate list.
pub fn brute_force_roots(form: &QuadraticForm, max_k0: i64, max_roots: usize) -> Vec<Root> {
    let mut accepted = initial_roots(form);
    for c in enumerate_candidates(form, max_k0) {
        if accepted.len() >= max_roots {
            break;
        }
        if accepted
            .iter()
            .all(|r| form.ip_unchecked(c.coords(), r.coords()) <= 0)
        {
            accepted.push(c);
        }
    }
    accepted
}
