use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("structure constants are not antisymmetric: C[{i}][{j}][{k}] != -C[{j}][{i}][{k}]")]
    NotAntisymmetric { i: usize, j: usize, k: usize },

    #[error("not a Lie algebra: Jacobi defect {defect:e} exceeds {limit:e}")]
    Jacobi { defect: f64, limit: f64 },

    #[error("structure identity `{name}` violated (residual {residual:e})")]
    Structure { name: &'static str, residual: f64 },

    #[error("metric is not orthonormal on the frame; only g = E is supported")]
    NonOrthonormalMetric,

    #[error("class {0} has no closed-form group (the algebra is Abelian, e^A = E)")]
    AbelianClass(crate::structure::ClassId),

    #[error("tolerance must be positive, got {0:e}")]
    BadTolerance(f64),

    #[error("unknown class id `{0}` (expected one of F0, F1, F4, F5, F8, F9, F10, F11)")]
    UnknownClass(String),
}

pub type Result<T> = std::result::Result<T, Error>;
