//! Reflection groups of the quadratic lattices -phi*x0^2 + x1^2 + ... + xn^2.
//!
//! The library builds the fundamental polyhedron of the reflection subgroup
//! wall by wall, classifies the resulting Coxeter diagram, decides finite
//! volume and compactness, computes diagram symmetries, and certifies
//! non-reflectivity in high dimensions.

pub mod classify;
pub mod diagram;
pub mod diophantine;
pub mod engine;
pub mod error;
pub mod gram;
pub mod lattice;
pub mod linalg;
pub mod obstruction;
pub mod oracle;
pub mod symmetry;
pub mod volume;

pub use diagram::{diagram, isomorphic, CoxeterDiagram, EdgeLabel};
pub use engine::{
    initial_roots, is_admissible, run, run_to_budget, Budget, RunReport, StepLog, Verdict,
};
pub use error::{CertifyError, DiagramError, EngineError, LatticeError};
pub use gram::{gram, GramMatrix};
pub use obstruction::{certify_nonreflective, CaseTag, ObstructionCertificate};
pub use symmetry::{diagram_symmetries, SymmetryGroup};
pub use lattice::{QuadraticForm, Rat, Root};
pub use volume::{analyze, analyze_diagram, VolumeReport, Witness};
