//! Numerical tolerances used throughout the crate.
//!
//! | constant   | value  | used for                                          |
//! |------------|--------|---------------------------------------------------|
//! | `OPERATOR` | 1e-10  | entrywise max deviation between operators         |
//! | `NORM`     | 1e-12  | unit-norm checks and per-step norm drift          |
//! | `STOCHASTIC` | 1e-12 | row sums of stochastic matrices                  |
//! | `AMPLITUDE_ZERO` | 1e-15 | amplitudes treated as zero               |

pub const OPERATOR: f64 = 1e-10;
pub const NORM: f64 = 1e-12;
pub const STOCHASTIC: f64 = 1e-12;
pub const AMPLITUDE_ZERO: f64 = 1e-15;
