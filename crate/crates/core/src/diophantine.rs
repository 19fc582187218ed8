//! Enumeration of candidate roots with fixed k0 and norm: integer solutions of
//! sum ki^2 = d + phi*k0^2 with k1 >= ... >= kn >= 0, filtered by the
//! crystallographic condition, primitivity, and non-positive inner product
//! with the already accepted roots.

use num_integer::Integer;

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

struct Search<'a> {
    form: &'a QuadraticForm,
    d: i64,
    /// Coordinate modulus forced by d | 2*ki.
    step: i64,
    /// Accepted roots with nonnegative spatial coordinates: eligible for
    /// exact prefix pruning. Others are checked at the leaves.
    prune: Vec<&'a Root>,
    check: Vec<&'a Root>,
    coords: Vec<i64>,
    /// Running inner products with each root in `prune`.
    partial: Vec<i64>,
    out: Vec<Root>,
}

impl Search<'_> {
    fn descend(&mut self, idx: usize, remaining: i64, max_val: i64) {
        let n = self.form.n();
        if idx > n {
            if remaining == 0 {
                self.emit();
            }
            return;
        }
        let slots_left = (n - idx + 1) as i64;
        let mut hi = max_val.min(isqrt(remaining));
        hi -= hi % self.step;
        let mut v = hi;
        while v >= 0 {
            let rest = remaining - v * v;
            // The remaining slots are bounded by v, so they can contribute at
            // most (slots_left - 1) * v^2.
            if rest <= (slots_left - 1) * v * v {
                if self.push(idx, v) {
                    self.descend(idx + 1, rest, v);
                }
                self.pop(idx, v);
            }
            if v == 0 {
                break;
            }
            v -= self.step;
        }
    }

    /// Returns false when a pruning constraint is already violated.
    fn push(&mut self, idx: usize, v: i64) -> bool {
        self.coords[idx] = v;
        let mut ok = true;
        for (p, r) in self.partial.iter_mut().zip(&self.prune) {
            *p += v * r.coords()[idx];
            // All later coordinates of both vectors are nonnegative, so a
            // positive partial inner product can never recover.
            if *p > 0 {
                ok = false;
            }
        }
        ok
    }

    fn pop(&mut self, idx: usize, v: i64) {
        self.coords[idx] = 0;
        for (p, r) in self.partial.iter_mut().zip(&self.prune) {
            *p -= v * r.coords()[idx];
        }
    }

    fn emit(&mut self) {
        let Ok(root) = Root::new(self.form, self.coords.clone()) else {
            return;
        };
        debug_assert_eq!(root.norm(), self.d);
        for r in &self.check {
            if self.form.ip_unchecked(root.coords(), r.coords()) > 0 {
                return;
            }
        }
        self.out.push(root);
    }
}

/// All candidate roots with time-like coefficient `k0` and norm `d`, ordered
/// lexicographically descending on the spatial coordinates.
///
/// `accepted` supplies the linear admissibility constraints (e, r) <= 0; pass
/// the roots accepted so far, or an empty slice for the raw solution set.
pub fn solve_diophantine(form: &QuadraticForm, k0: i64, d: i64, accepted: &[Root]) -> Vec<Root> {
    assert!(k0 >= 1 && d >= 1);
    // d must divide 2*phi*k0 for the crystallographic condition to be
    // satisfiable at all.
    if (2 * form.phi() * k0) % d != 0 {
        return Vec::new();
    }
    let step = d / d.gcd(&2);
    let target = d + form.phi() * k0 * k0;
    let mut coords = vec![0i64; form.dim()];
    coords[0] = k0;
    let (prune, check): (Vec<&Root>, Vec<&Root>) = accepted
        .iter()
        .partition(|r| r.coords()[1..].iter().all(|&c| c >= 0));
    let partial = prune
        .iter()
        .map(|r| -form.phi() * k0 * r.coords()[0])
        .collect();
    let mut search = Search {
        form,
        d,
        step,
        prune,
        check,
        coords,
        partial,
        out: Vec::new(),
    };
    search.descend(1, target, i64::MAX);
    search.out
}
