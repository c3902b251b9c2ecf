//! The two worked coined-equivalent models: the triangle-inflated
//! honeycomb torus and the three-state walk on a ring.

mod honeycomb;
mod three_state;

use thiserror::Error;

use crate::graph::GraphError;
use crate::walk::WalkError;

pub use honeycomb::{honeycomb, honeycomb_index, BlueAmplitudes, HoneycombModel};
pub use three_state::{alpha_rho, coin_matrix, three_state, ThreeStateModel};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModelError {
    #[error("m = {0} must be even")]
    OddM(usize),

    #[error("{parameter} = {value} is below the minimum {min}")]
    TooSmall {
        parameter: &'static str,
        value: usize,
        min: usize,
    },

    #[error("rho = {0} must lie strictly between 0 and 1")]
    BadRho(f64),

    #[error(transparent)]
    Graph(#[from] GraphError),

    #[error(transparent)]
    Walk(#[from] WalkError),
}

pub type ModelResult<T> = Result<T, ModelError>;

impl ModelError {
    /// Variant name; wrapped errors report their own.
    pub fn kind(&self) -> &'static str {
        match self {
            Self::OddM(_) => "OddM",
            Self::TooSmall { .. } => "TooSmall",
            Self::BadRho(_) => "BadRho",
            Self::Graph(e) => e.kind(),
            Self::Walk(e) => e.kind(),
        }
    }
}
