//! Marked-clique search with a partial tessellation: the torus of 8-cliques,
//! the success-probability series, peak extraction, scaling fits and a
//! classical random-walk baseline.

mod classical;
mod fit;
mod run;
mod torus;

use thiserror::Error;

use crate::graph::GraphError;
use crate::tessellation::TessellationViolation;
use crate::walk::WalkError;

pub use classical::{hitting_time, HittingEstimate};
pub use fit::{
    amplified_cost, combined_exponents, fit_line, fit_scaling, scaling_experiment, scaling_points, sweep,
    LineFit, ScalingFit, ScalingPoint, MIN_FIT_POINTS,
};
pub use run::{peak, run_search, run_search_with, uniform_state, Peak, SearchOptions, SearchResult};
pub use torus::{
    check_instance, torus_index, torus_instance, torus_instance_at, PartialTessellation, SearchInstance,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SearchError {
    #[error("{parameter} = {value} is below the minimum {min}")]
    TooSmall {
        parameter: &'static str,
        value: usize,
        min: usize,
    },

    #[error("series has no local maximum above its starting value")]
    NoPeak,

    #[error("success probability {0} is not positive")]
    ZeroProbability(f64),

    #[error("need at least {required} points to fit, got {found}")]
    TooFewPoints { found: usize, required: usize },

    #[error("fit input is degenerate: {0}")]
    DegenerateFit(String),

    #[error("instance invariant broken: {0}")]
    Invariant(String),

    #[error("partial tessellation invalid: {0}")]
    Partial(#[from] TessellationViolation),

    #[error(transparent)]
    Graph(#[from] GraphError),

    #[error(transparent)]
    Walk(#[from] WalkError),
}

impl SearchError {
    /// Variant name; wrapped errors report their own.
    pub fn kind(&self) -> &'static str {
        match self {
            Self::TooSmall { .. } => "TooSmall",
            Self::NoPeak => "NoPeak",
            Self::ZeroProbability(_) => "ZeroProbability",
            Self::TooFewPoints { .. } => "TooFewPoints",
            Self::DegenerateFit(_) => "DegenerateFit",
            Self::Invariant(_) => "Invariant",
            Self::Partial(v) => v.kind(),
            Self::Graph(e) => e.kind(),
            Self::Walk(e) => e.kind(),
        }
    }
}

pub type Result<T> = std::result::Result<T, SearchError>;
