//! Staggered quantum walks on simple graphs.
//!
//! The crate builds the two-reflection walk `U = U1 U0` from a pair of
//! graph tessellations, decides which graphs admit such a pair, sorts
//! graphs into the line-graph taxonomy that governs conversion to
//! Szegedy and coined walks, and runs the marked-clique search experiment
//! with partial tessellations.

pub mod classify;
pub mod graph;
pub mod limits;
pub mod models;
pub mod search;
pub mod tessellation;
pub mod tolerance;
pub mod walk;
