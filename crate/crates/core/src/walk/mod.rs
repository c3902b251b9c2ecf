//! Walk operators: polygon vectors, implicit reflections, the two-step
//! evolution `U = U1 U0`, and its Szegedy and coined forms.

mod coined;
mod evolution;
pub mod io;
mod reflection;
mod state;
mod szegedy;

use thiserror::Error;

use crate::classify::ClassifyError;
use crate::tessellation::TessellationError;

pub use coined::{coined_reduce, CoinedForm, LoopPolicy};
pub use evolution::EvolutionOperator;
pub use reflection::{reflection_from, ReflectionOperator};
pub use state::{uniform_polygon_vector, Amplitude, PolygonStateVector, StateVector};
pub use szegedy::{
    intertwining_deviation, szegedy_convert, szegedy_from_matrices, verify_block_structure,
    verify_block_structure_with_cap, BlockCheck, SzegedyInstance,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum WalkError {
    #[error("polygon is empty")]
    EmptyPolygon,

    #[error("polygon has {expected} vertices but {found} amplitudes were given")]
    AmplitudeCount { expected: usize, found: usize },

    #[error("amplitude on vertex {vertex} is zero")]
    ZeroAmplitude { vertex: usize },

    #[error("vector norm is {norm}, expected 1")]
    NotNormalized { norm: f64 },

    #[error("vector {index} does not match polygon {index} of the tessellation")]
    VectorPolygonMismatch { index: usize },

    #[error("vertex {vertex} appears in two vectors or lies outside dimension {dimension}")]
    BadSupport { vertex: usize, dimension: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dense matrix of dimension {dimension} exceeds the cap of {cap}")]
    TooLarge { dimension: usize, cap: usize },

    #[error("{matrix} row {row} sums to {sum}")]
    NotStochastic {
        matrix: &'static str,
        row: usize,
        sum: f64,
    },

    #[error("support mismatch: p[{x}][{y}] and q[{y}][{x}] disagree on being nonzero")]
    SupportMismatch { x: usize, y: usize },

    #[error("edge {{{u}, {v}}} lies in both a blue and a red polygon")]
    EdgeInIntersection { u: usize, v: usize },

    #[error("not reducible to a coined walk: {0}")]
    NotClass2bPrime(String),

    #[error("red polygon {polygon} is a matched pair with unequal amplitudes")]
    NonUniformMatchingVector { polygon: usize },

    #[error(transparent)]
    Tessellation(#[from] TessellationError),

    #[error(transparent)]
    Classify(#[from] ClassifyError),

    #[error("amplitude file: {0}")]
    Parse(String),
}

impl WalkError {
    /// Variant name, used in machine-readable reports; wrapped errors
    /// report their own.
    pub fn kind(&self) -> &'static str {
        match self {
            Self::EmptyPolygon => "EmptyPolygon",
            Self::AmplitudeCount { .. } => "AmplitudeCount",
            Self::ZeroAmplitude { .. } => "ZeroAmplitude",
            Self::NotNormalized { .. } => "NotNormalized",
            Self::VectorPolygonMismatch { .. } => "VectorPolygonMismatch",
            Self::BadSupport { .. } => "BadSupport",
            Self::DimensionMismatch { .. } => "DimensionMismatch",
            Self::TooLarge { .. } => "TooLarge",
            Self::NotStochastic { .. } => "NotStochastic",
            Self::SupportMismatch { .. } => "SupportMismatch",
            Self::EdgeInIntersection { .. } => "EdgeInIntersection",
            Self::NotClass2bPrime(_) => "NotClass2bPrime",
            Self::NonUniformMatchingVector { .. } => "NonUniformMatchingVector",
            Self::Tessellation(e) => e.kind(),
            Self::Classify(e) => e.kind(),
            Self::Parse(_) => "Parse",
        }
    }
}

pub type WalkResult<T> = Result<T, WalkError>;

/// Largest entrywise modulus of `a - b`.
pub fn max_abs_diff(a: &nalgebra::DMatrix<Amplitude>, b: &nalgebra::DMatrix<Amplitude>) -> f64 {
    assert_eq!(a.shape(), b.shape());
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}
