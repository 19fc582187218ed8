//! Coxeter diagram extraction: edge labels from the exact normalized squares.
//!
//! c = 0        -> no edge (angle pi/2)
//! c = cos^2(pi/m), m in {3, 4, 6} -> edge labelled m (c = 1/4, 1/2, 3/4)
//! c = 1        -> heavy edge (parallel walls, dihedral angle zero)
//! c > 1        -> dashed edge (divergent walls)
//! other c in (0, 1) -> not a Coxeter polyhedron wall pair.

use crate::error::DiagramError;
use crate::gram::GramMatrix;
use crate::lattice::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeLabel {
    /// Dihedral angle pi/m; only m = 3, 4, 6 occur for these lattices.
    Finite(u32),
    /// Parallel walls: dihedral angle zero.
    Heavy,
    /// Divergent walls.
    Dashed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterDiagram {
    gram: GramMatrix,
    labels: Vec<Vec<Option<EdgeLabel>>>,
    /// Bitmask of neighbors (any edge kind) per vertex.
    adjacency: Vec<u64>,
}

pub fn label_for_cos2(c: Rat) -> Result<Option<EdgeLabel>, Rat> {
    let zero = Rat::new(0, 1);
    let one = Rat::new(1, 1);
    if c == zero {
        Ok(None)
    } else if c == Rat::new(1, 4) {
        Ok(Some(EdgeLabel::Finite(3)))
    } else if c == Rat::new(1, 2) {
        Ok(Some(EdgeLabel::Finite(4)))
    } else if c == Rat::new(3, 4) {
        Ok(Some(EdgeLabel::Finite(6)))
    } else if c == one {
        Ok(Some(EdgeLabel::Heavy))
    } else if c > one {
        Ok(Some(EdgeLabel::Dashed))
    } else {
        Err(c)
    }
}

/// Build the Coxeter diagram of a Gram matrix.
pub fn diagram(gram: &GramMatrix) -> Result<CoxeterDiagram, DiagramError> {
    let m = gram.size();
    assert!(m <= 64, "diagrams are limited to 64 vertices");
    let mut labels = vec![vec![None; m]; m];
    let mut adjacency = vec![0u64; m];
    for i in 0..m {
        for j in (i + 1)..m {
            let label = label_for_cos2(gram.cos2(i, j))
                .map_err(|c| DiagramError::NonCoxeterAngle { i, j, c })?;
            labels[i][j] = label;
            labels[j][i] = label;
            if label.is_some() {
                adjacency[i] |= 1 << j;
                adjacency[j] |= 1 << i;
            }
        }
    }
    Ok(CoxeterDiagram {
        gram: gram.clone(),
        labels,
        adjacency,
    })
}

impl CoxeterDiagram {
    /// Build a diagram directly from an edge list, for comparison against a
    /// computed diagram. The backing Gram matrix is the identity.
    pub fn from_edges(size: usize, edges: &[(usize, usize, EdgeLabel)]) -> CoxeterDiagram {
        assert!(size <= 64, "diagrams are limited to 64 vertices");
        let mut labels = vec![vec![None; size]; size];
        let mut adjacency = vec![0u64; size];
        for &(i, j, l) in edges {
            assert!(i < size && j < size && i != j, "bad edge ({i}, {j})");
            labels[i][j] = Some(l);
            labels[j][i] = Some(l);
            adjacency[i] |= 1 << j;
            adjacency[j] |= 1 << i;
        }
        CoxeterDiagram {
            gram: GramMatrix::from_raw(
                vec![1; size],
                (0..size)
                    .map(|i| (0..size).map(|j| i64::from(i == j)).collect())
                    .collect(),
            ),
            labels,
            adjacency,
        }
    }

    pub fn size(&self) -> usize {
        self.gram.size()
    }

    pub fn gram(&self) -> &GramMatrix {
        &self.gram
    }

    pub fn label(&self, i: usize, j: usize) -> Option<EdgeLabel> {
        self.labels[i][j]
    }

    pub fn neighbors(&self, i: usize) -> u64 {
        self.adjacency[i]
    }

    /// Neighbors of any vertex in `subset` that are outside `subset`.
    pub fn boundary(&self, subset: u64) -> u64 {
        let mut b = 0u64;
        let mut s = subset;
        while s != 0 {
            let v = s.trailing_zeros() as usize;
            s &= s - 1;
            b |= self.adjacency[v];
        }
        b & !subset
    }

    /// Edges (i, j, label) with i < j, in deterministic order.
    pub fn edges(&self) -> Vec<(usize, usize, EdgeLabel)> {
        let mut out = Vec::new();
        for i in 0..self.size() {
            for j in (i + 1)..self.size() {
                if let Some(l) = self.labels[i][j] {
                    out.push((i, j, l));
                }
            }
        }
        out
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].count_ones() as usize
    }
}

/// Label-preserving graph isomorphism test for small diagrams; a test and
/// comparison facility, not an output normalization.
pub fn isomorphic(a: &CoxeterDiagram, b: &CoxeterDiagram) -> bool {
    if a.size() != b.size() {
        return false;
    }
    let n = a.size();
    // Degree/label fingerprints must match as multisets.
    let fp = |d: &CoxeterDiagram, v: usize| {
        let mut labels: Vec<EdgeLabel> = (0..n).filter_map(|u| d.label(v, u)).collect();
        labels.sort();
        labels
    };
    let mut fa: Vec<_> = (0..n).map(|v| fp(a, v)).collect();
    let mut fb: Vec<_> = (0..n).map(|v| fp(b, v)).collect();
    let orig_fa: Vec<_> = fa.clone();
    let orig_fb: Vec<_> = fb.clone();
    fa.sort();
    fb.sort();
    if fa != fb {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    backtrack(a, b, &orig_fa, &orig_fb, &mut map, &mut used, 0)
}

fn backtrack(
    a: &CoxeterDiagram,
    b: &CoxeterDiagram,
    fa: &[Vec<EdgeLabel>],
    fb: &[Vec<EdgeLabel>],
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    v: usize,
) -> bool {
    let n = a.size();
    if v == n {
        return true;
    }
    for w in 0..n {
        if used[w] || fa[v] != fb[w] {
            continue;
        }
        if (0..v).all(|u| a.label(v, u) == b.label(w, map[u])) {
            map[v] = w;
            used[w] = true;
            if backtrack(a, b, fa, fb, map, used, v + 1) {
                return true;
            }
            used[w] = false;
            map[v] = usize::MAX;
        }
    }
    false
}
