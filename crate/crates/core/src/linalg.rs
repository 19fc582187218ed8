//! Exact rational linear algebra: row reduction, nullspace extraction, and
//! definiteness tests for symmetric integer matrices.

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

/// Wide rational type used for eliminations; entries stay small for the Gram
/// matrices that arise here, but intermediate products can outgrow i64.
pub type Qq = Ratio<i128>;

pub fn qq(v: i64) -> Qq {
    Ratio::from_integer(v as i128)
}

/// Reduced row echelon form in place; returns pivot column indices.
pub fn rref(mat: &mut Vec<Vec<Qq>>) -> Vec<usize> {
    let rows = mat.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = mat[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let inv = mat[r][c].clone();
        for x in mat[r].iter_mut() {
            *x /= inv.clone();
        }
        for i in 0..rows {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c].clone();
                for j in 0..cols {
                    let s = mat[r][j].clone() * f.clone();
                    mat[i][j] -= s;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Canonical nullspace basis of `mat` (one vector per free column, with a 1 in
/// the free coordinate), derived from the RREF.
pub fn nullspace(mat: &[Vec<Qq>]) -> Vec<Vec<Qq>> {
    if mat.is_empty() {
        return Vec::new();
    }
    let cols = mat[0].len();
    let mut m: Vec<Vec<Qq>> = mat.to_vec();
    let pivots = rref(&mut m);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Qq::zero(); cols];
        v[free] = Qq::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

pub fn rank(mat: &[Vec<Qq>]) -> usize {
    let mut m = mat.to_vec();
    rref(&mut m).len()
}

/// Does `v` lie in the span of `basis`?
pub fn in_span(basis: &[Vec<Qq>], v: &[Qq]) -> bool {
    if basis.is_empty() {
        return v.iter().all(|x| x.is_zero());
    }
    let mut m: Vec<Vec<Qq>> = basis.to_vec();
    let r = rank(&m);
    m.push(v.to_vec());
    rank(&m) == r
}

/// Shape of a symmetric bilinear form restricted to a subset of walls.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Definiteness {
    PositiveDefinite,
    /// Positive semidefinite and singular; payload is the matrix rank.
    SemidefiniteSingular(usize),
    Indefinite,
}

/// Definiteness of a symmetric rational matrix via symmetric elimination with
/// diagonal pivoting. Exact: no floating point.
pub fn symmetric_definiteness(mat: &[Vec<Qq>]) -> Definiteness {
    let n = mat.len();
    let mut m = mat.to_vec();
    let mut active: Vec<usize> = (0..n).collect();
    let mut rank = 0usize;
    while !active.is_empty() {
        if let Some(pos) = active.iter().position(|&i| m[i][i].is_positive()) {
            let p = active.remove(pos);
            let d = m[p][p].clone();
            rank += 1;
            for &i in &active {
                let fi = m[i][p].clone() / d.clone();
                for &j in &active {
                    let s = fi.clone() * m[p][j].clone();
                    m[i][j] -= s;
                }
            }
        } else {
            // No positive diagonal left. PSD requires the rest to vanish.
            for &i in &active {
                if m[i][i].is_negative() {
                    return Definiteness::Indefinite;
                }
                for &j in &active {
                    if !m[i][j].is_zero() {
                        return Definiteness::Indefinite;
                    }
                }
            }
            break;
        }
    }
    if rank == n {
        Definiteness::PositiveDefinite
    } else {
        Definiteness::SemidefiniteSingular(rank)
    }
}
