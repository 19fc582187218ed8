//! Finite-volume and compactness tests for the polyhedron bounded by a set of
//! walls, read off combinatorially from the Coxeter diagram.
//!
//! Vertices of the polyhedron are the elliptic subdiagrams of rank n
//! (ordinary vertices) and the parabolic subdiagrams of rank n - 1 (ideal
//! vertices). Edges are the elliptic subdiagrams of rank n - 1. The
//! polyhedron has finite volume iff it has at least one vertex and every edge
//! lies in exactly two vertices; it is compact iff in addition no vertex is
//! ideal.

use crate::classify::{elliptic_sets_at_least, parabolic_subdiagrams_of_rank, vertices_of_mask};
use crate::diagram::{diagram, CoxeterDiagram};
use crate::error::EngineError;
use crate::gram::gram;
use crate::lattice::{QuadraticForm, Root};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// No elliptic rank-n and no parabolic rank-(n-1) subdiagram exists.
    NoVertices,
    /// An edge with the wrong number of incident vertices.
    OpenEdge {
        subset: Vec<usize>,
        extensions: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VolumeReport {
    pub finite: bool,
    pub compact: bool,
    /// Ordinary vertices: elliptic rank-n subdiagrams, as wall index sets.
    pub ordinary_vertices: Vec<Vec<usize>>,
    /// Ideal vertices: parabolic rank-(n-1) subdiagrams.
    pub ideal_vertices: Vec<Vec<usize>>,
    /// Present exactly when `finite` is false.
    pub witness: Option<Witness>,
}

impl VolumeReport {
    pub fn cusps(&self) -> usize {
        self.ideal_vertices.len()
    }
}

/// Analyze the polyhedron bounded by `roots`.
pub fn analyze(
    form: &QuadraticForm,
    roots: &[Root],
    enum_cap: usize,
) -> Result<VolumeReport, EngineError> {
    let d = diagram(&gram(form, roots))?;
    analyze_diagram(form.n(), &d, enum_cap)
}

/// Analyze a wall arrangement given only its Coxeter diagram, for a space of
/// hyperbolic dimension `n`.
pub fn analyze_diagram(
    n: usize,
    d: &CoxeterDiagram,
    enum_cap: usize,
) -> Result<VolumeReport, EngineError> {
    let m = d.size();
    // Only subsets of size n - 1 (edges) and n (vertices) matter here.
    let ell = elliptic_sets_at_least(d, n - 1, enum_cap)?;
    let ordinary = ell.of_size(n);
    let ideal = parabolic_subdiagrams_of_rank(d, n - 1, enum_cap)?;
    let mut finite = true;
    let mut witness = None;
    if ordinary.is_empty() && ideal.is_empty() {
        finite = false;
        witness = Some(Witness::NoVertices);
    } else {
        for &e in &ell.of_size(n - 1) {
            let mut extensions = (0..m)
                .filter(|&v| e & (1 << v) == 0 && ell.contains(e | (1 << v)))
                .count();
            extensions += ideal.iter().filter(|&&p| p & e == e).count();
            if extensions != 2 {
                finite = false;
                witness = Some(Witness::OpenEdge {
                    subset: vertices_of_mask(e),
                    extensions,
                });
                break;
            }
        }
    }
    let compact = finite && ideal.is_empty();
    Ok(VolumeReport {
        finite,
        compact,
        ordinary_vertices: ordinary.into_iter().map(vertices_of_mask).collect(),
        ideal_vertices: ideal.into_iter().map(vertices_of_mask).collect(),
        witness,
    })
}
