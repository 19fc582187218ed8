use num_rational::Ratio;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("the zero vector is not primitive")]
    ZeroVector,
    #[error("vector has non-positive norm {norm}")]
    NonPositiveNorm { norm: i64 },
    #[error("coordinates have a common divisor")]
    NotPrimitive,
    #[error("reflection does not preserve the lattice (crystallographic condition fails)")]
    NotCrystallographic,
    #[error("invalid form parameters: phi={phi}, n={n} (need phi >= 1, n >= 2)")]
    InvalidForm { phi: i64, n: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("walls {i} and {j} meet at a non-Coxeter angle (cos^2 = {c})")]
    NonCoxeterAngle { i: usize, j: usize, c: Ratio<i64> },
}

/// Subset enumeration hit its safety cap before completing.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("subdiagram enumeration exceeded the budget of {cap} subsets")]
pub struct EnumerationBudgetExceeded {
    pub cap: usize,
}

#[derive(Debug, Error)]
pub enum EngineError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationBudgetExceeded),
    #[error("budget must allow at least the initial roots (max_roots={max_roots}, n={n})")]
    BadBudget { max_roots: usize, n: usize },
}

#[derive(Debug, Error)]
pub enum CertifyError {
    #[error("non-reflectivity certification requires n >= 14, got {0}")]
    DimensionTooSmall(usize),
    #[error("certification requires phi = 3, got {0}")]
    WrongForm(i64),
    #[error("re-derivation failed at step `{step}`: {detail}")]
    CertificationFailed { step: String, detail: String },
    #[error(transparent)]
    Engine(#[from] EngineError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("orthogonality system is inconsistent")]
pub struct InconsistentSystem;
