use serde::Serialize;

use super::{Result, SearchError, SearchInstance};
use crate::walk::{Amplitude, StateVector};

/// Equal superposition over `n` vertices.
pub fn uniform_state(n: usize) -> StateVector {
    StateVector::uniform(n)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchOptions {
    /// Also record the plain sum of marked amplitudes at every step. Only
    /// useful for comparison; it is not a probability.
    pub record_raw_sums: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Peak {
    pub t: usize,
    pub p: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchResult {
    /// Probability on the marked vertices for `t = 0..=t_max`.
    pub series: Vec<f64>,
    /// `None` when the series never rises above `p(0)`.
    pub peak: Option<Peak>,
    /// Largest `| ||psi_t||^2 - 1 |` seen.
    pub max_norm_drift: f64,
    pub raw_sums: Option<Vec<Amplitude>>,
}

pub fn run_search(inst: &SearchInstance, t_max: usize) -> Result<SearchResult> {
    run_search_with(inst, t_max, SearchOptions::default())
}

/// Applies `U = U1 U0` to the uniform state `t_max` times, recording the
/// marked-set probability before each application and after the last.
pub fn run_search_with(inst: &SearchInstance, t_max: usize, opts: SearchOptions) -> Result<SearchResult> {
    if t_max < 1 {
        return Err(SearchError::TooSmall {
            parameter: "t_max",
            value: t_max,
            min: 1,
        });
    }
    let walk = inst.walk()?;
    let mut psi = uniform_state(inst.vertex_count());
    let mut series = Vec::with_capacity(t_max + 1);
    let mut raw = opts.record_raw_sums.then(|| Vec::with_capacity(t_max + 1));
    let mut drift: f64 = 0.0;
    for t in 0..=t_max {
        if t > 0 {
            walk.apply_in_place(&mut psi)?;
        }
        drift = drift.max((psi.norm_sqr() - 1.0).abs());
        series.push(psi.probability_on(&inst.marked));
        if let Some(r) = raw.as_mut() {
            r.push(inst.marked.iter().map(|&v| psi.as_slice()[v]).sum());
        }
    }
    let peak = peak(&series).ok();
    Ok(SearchResult {
        series,
        peak,
        max_norm_drift: drift,
        raw_sums: raw,
    })
}

/// Values closer than this are treated as one plateau.
const PLATEAU_TOL: f64 = 1e-12;

/// First local maximum of the raw series that exceeds `p(0)`.
///
/// A run of equal values counts as one point: it is a maximum when the
/// values on both sides of the run are lower (the end of the series counts
/// as lower), and the reported time is the start of the run. The walk
/// produces such runs of length two, so a plain `>=` test would stop on the
/// first rising step.
pub fn peak(series: &[f64]) -> Result<Peak> {
    if series.len() < 3 {
        return Err(SearchError::TooSmall {
            parameter: "series length",
            value: series.len(),
            min: 3,
        });
    }
    let same = |a: f64, b: f64| (a - b).abs() <= PLATEAU_TOL;
    let mut start = 1;
    while start < series.len() {
        let mut end = start;
        while end + 1 < series.len() && same(series[end + 1], series[start]) {
            end += 1;
        }
        let p = series[start];
        let left_lower = series[start - 1] < p;
        let right_lower = end + 1 == series.len() || series[end + 1] < p;
        if left_lower && right_lower && p > series[0] && !same(p, series[0]) {
            return Ok(Peak { t: start, p });
        }
        start = end + 1;
    }
    Err(SearchError::NoPeak)
}
