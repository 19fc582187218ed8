//! Symmetries of the fundamental polyhedron: permutations of the walls that
//! preserve all inner products and norms, i.e. automorphisms of the raw Gram
//! matrix. Every such permutation extends to an isometry of the lattice
//! preserving the polyhedron.

use crate::diagram::CoxeterDiagram;
use crate::gram::GramMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryGroup {
    /// All automorphisms, identity first, in lexicographic order.
    pub elements: Vec<Vec<usize>>,
    /// A small generating set (greedy closure).
    pub generators: Vec<Vec<usize>>,
}

impl SymmetryGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Human-readable isomorphism type for the small groups that occur here.
    pub fn name(&self) -> String {
        let order = self.order();
        let max_elt_order = self
            .elements
            .iter()
            .map(|p| perm_order(p))
            .max()
            .unwrap_or(1);
        match (order, max_elt_order) {
            (1, _) => "1".to_string(),
            (2, _) => "Z2".to_string(),
            (4, 2) => "Z2 x Z2".to_string(),
            (4, 4) => "Z4".to_string(),
            _ => format!("order {order}"),
        }
    }

    /// Number of orbits of the group acting on the given wall subsets.
    pub fn orbit_count(&self, subsets: &[Vec<usize>]) -> usize {
        let canon: Vec<Vec<usize>> = subsets
            .iter()
            .map(|s| {
                let mut v = s.clone();
                v.sort_unstable();
                v
            })
            .collect();
        let mut seen = vec![false; canon.len()];
        let mut orbits = 0;
        for i in 0..canon.len() {
            if seen[i] {
                continue;
            }
            orbits += 1;
            for p in &self.elements {
                let mut img: Vec<usize> = canon[i].iter().map(|&v| p[v]).collect();
                img.sort_unstable();
                if let Some(j) = canon.iter().position(|c| *c == img) {
                    seen[j] = true;
                }
            }
        }
        orbits
    }
}

fn perm_order(p: &[usize]) -> usize {
    let n = p.len();
    let mut order = 1usize;
    let mut cur: Vec<usize> = p.to_vec();
    let id: Vec<usize> = (0..n).collect();
    while cur != id {
        cur = cur.iter().map(|&v| p[v]).collect();
        order += 1;
    }
    order
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    // (a then b): x -> b[a[x]]
    a.iter().map(|&v| b[v]).collect()
}

/// All permutations of wall indices preserving the raw Gram matrix.
pub fn gram_automorphisms(g: &GramMatrix) -> Vec<Vec<usize>> {
    let n = g.size();
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        g: &GramMatrix,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        v: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = g.size();
        if v == n {
            out.push(map.clone());
            return;
        }
        for w in 0..n {
            if used[w] || g.norm(v) != g.norm(w) {
                continue;
            }
            if (0..v).all(|u| g.raw(v, u) == g.raw(w, map[u])) {
                map[v] = w;
                used[w] = true;
                rec(g, map, used, v + 1, out);
                used[w] = false;
                map[v] = usize::MAX;
            }
        }
    }
    rec(g, &mut map, &mut used, 0, &mut out);
    out.sort();
    out
}

/// The symmetry group of a diagram (equivalently of its Gram matrix).
pub fn diagram_symmetries(d: &CoxeterDiagram) -> SymmetryGroup {
    let elements = gram_automorphisms(d.gram());
    let n = d.size();
    let id: Vec<usize> = (0..n).collect();
    // Greedy generating set: add elements not yet in the closure.
    let mut generators: Vec<Vec<usize>> = Vec::new();
    let mut closure: Vec<Vec<usize>> = vec![id];
    for e in &elements {
        if closure.contains(e) {
            continue;
        }
        generators.push(e.clone());
        // Rebuild the closure.
        loop {
            let mut grew = false;
            let snapshot = closure.clone();
            for a in &snapshot {
                for g in &generators {
                    let c = compose(a, g);
                    if !closure.contains(&c) {
                        closure.push(c);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
    }
    SymmetryGroup {
        elements,
        generators,
    }
}
