//! Exact Gram data for a set of roots: raw integer inner products plus the
//! normalized squares c_ij = (ei,ej)^2 / ((ei,ei)(ej,ej)).
//!
//! The normalized entry of the wall arrangement is sign * sqrt(c); storing the
//! exact square with its sign keeps every comparison rational.

use crate::lattice::{QuadraticForm, Rat, Root};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    norms: Vec<i64>,
    entries: Vec<Vec<i64>>,
}

impl GramMatrix {
    pub fn from_raw(norms: Vec<i64>, entries: Vec<Vec<i64>>) -> Self {
        assert_eq!(norms.len(), entries.len());
        for (i, row) in entries.iter().enumerate() {
            assert_eq!(row.len(), norms.len());
            assert_eq!(row[i], norms[i], "diagonal must equal the stored norm");
            assert!(norms[i] > 0, "norms must be positive");
        }
        GramMatrix { norms, entries }
    }

    pub fn size(&self) -> usize {
        self.norms.len()
    }

    pub fn raw(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn norm(&self, i: usize) -> i64 {
        self.norms[i]
    }

    pub fn norms(&self) -> &[i64] {
        &self.norms
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// The exact square of the normalized entry, c_ij >= 0.
    pub fn cos2(&self, i: usize, j: usize) -> Rat {
        let g = self.entries[i][j];
        Rat::new(g * g, self.norms[i] * self.norms[j])
    }

    /// Sign of the raw inner product: -1, 0, or 1.
    pub fn sign(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j].signum()
    }
}

/// Pairwise inner products and norms of `roots`, exactly.
pub fn gram(form: &QuadraticForm, roots: &[Root]) -> GramMatrix {
    let m = roots.len();
    let mut entries = vec![vec![0i64; m]; m];
    for i in 0..m {
        for j in i..m {
            let ip = form
                .inner_product(roots[i].coords(), roots[j].coords())
                .expect("roots share the form's dimension");
            entries[i][j] = ip;
            entries[j][i] = ip;
        }
    }
    let norms = roots.iter().map(|r| r.norm()).collect();
    GramMatrix { norms, entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::initial_roots;
    use crate::lattice::QuadraticForm;

    #[test]
    fn simplex_normalized_entries() {
        // n = 3: initial walls plus v0 + 3v1.
        let f = QuadraticForm::new(3, 3).unwrap();
        let mut roots = initial_roots(&f);
        roots.push(Root::new(&f, vec![1, 3, 0, 0]).unwrap());
        let g = gram(&f, &roots);
        assert_eq!(g.cos2(0, 1), Rat::new(1, 4));
        assert_eq!(g.cos2(1, 2), Rat::new(1, 2));
        assert_eq!(g.cos2(0, 3), Rat::new(3, 4));
        for &(i, j) in &[(0, 2), (1, 3), (2, 3)] {
            assert_eq!(g.cos2(i, j), Rat::new(0, 1));
        }
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    assert!(g.sign(i, j) <= 0);
                }
            }
        }
    }

    #[test]
    fn single_root() {
        let f = QuadraticForm::new(3, 2).unwrap();
        let r = Root::new(&f, vec![1, 3, 0]).unwrap();
        let g = gram(&f, &[r]);
        assert_eq!(g.size(), 1);
        assert_eq!(g.cos2(0, 0), Rat::new(1, 1));
    }

    #[test]
    fn orthogonal_roots() {
        let f = QuadraticForm::new(3, 3).unwrap();
        let a = Root::new(&f, vec![0, 0, -1, 0]).unwrap();
        let b = Root::new(&f, vec![0, 0, 0, -1]).unwrap();
        let g = gram(&f, &[a, b]);
        assert_eq!(g.cos2(0, 1), Rat::new(0, 1));
    }
}
