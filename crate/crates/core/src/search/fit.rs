use rayon::prelude::*;
use serde::Serialize;

use super::{run_search_with, torus_instance, Result, SearchError, SearchOptions, SearchResult};

pub const MIN_FIT_POINTS: usize = 4;

/// Least-squares line `y = intercept + slope x`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LineFit {
    pub intercept: f64,
    pub slope: f64,
    /// Euclidean norm of the residual vector.
    pub residual: f64,
}

pub fn fit_line(xs: &[f64], ys: &[f64]) -> Result<LineFit> {
    if xs.len() != ys.len() {
        return Err(SearchError::DegenerateFit(format!(
            "{} abscissae for {} ordinates",
            xs.len(),
            ys.len()
        )));
    }
    if xs.len() < 2 {
        return Err(SearchError::TooFewPoints {
            found: xs.len(),
            required: 2,
        });
    }
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx == 0.0 || !sxx.is_finite() {
        return Err(SearchError::DegenerateFit("abscissae do not vary".into()));
    }
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let residual = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| (y - intercept - slope * x).powi(2))
        .sum::<f64>()
        .sqrt();
    Ok(LineFit {
        intercept,
        slope,
        residual,
    })
}

/// One instance's peak.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ScalingPoint {
    pub n: usize,
    pub vertex_count: usize,
    pub t_star: usize,
    pub p_star: f64,
}

/// `t* ~ a N^b` and `p* ~ c / (ln N)^d`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScalingFit {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub time_residual: f64,
    pub probability_residual: f64,
    pub points: Vec<ScalingPoint>,
    /// Sides whose series had no peak, with the reason.
    pub skipped: Vec<(usize, String)>,
}

/// Fits `ln t*` against `ln N` and `ln(1/p*)` against `ln ln N`.
pub fn fit_scaling(points: &[ScalingPoint]) -> Result<ScalingFit> {
    if points.len() < MIN_FIT_POINTS {
        return Err(SearchError::TooFewPoints {
            found: points.len(),
            required: MIN_FIT_POINTS,
        });
    }
    if let Some(pt) = points.iter().find(|pt| pt.vertex_count < 3 || pt.t_star == 0) {
        return Err(SearchError::DegenerateFit(format!("unusable point {pt:?}")));
    }
    if let Some(pt) = points.iter().find(|pt| !(pt.p_star > 0.0)) {
        return Err(SearchError::ZeroProbability(pt.p_star));
    }
    let ln_n: Vec<f64> = points.iter().map(|pt| (pt.vertex_count as f64).ln()).collect();
    let ln_t: Vec<f64> = points.iter().map(|pt| (pt.t_star as f64).ln()).collect();
    let ln_ln_n: Vec<f64> = ln_n.iter().map(|x| x.ln()).collect();
    let ln_inv_p: Vec<f64> = points.iter().map(|pt| -pt.p_star.ln()).collect();
    let time = fit_line(&ln_n, &ln_t)?;
    let prob = fit_line(&ln_ln_n, &ln_inv_p)?;
    Ok(ScalingFit {
        a: time.intercept.exp(),
        b: time.slope,
        c: (-prob.intercept).exp(),
        d: prob.slope,
        time_residual: time.residual,
        probability_residual: prob.residual,
        points: points.to_vec(),
        skipped: Vec::new(),
    })
}

/// Runs one torus instance per side, in parallel, returning results in
/// input order.
pub fn sweep(n_values: &[usize], t_max: usize, opts: SearchOptions) -> Result<Vec<(usize, SearchResult)>> {
    n_values
        .par_iter()
        .map(|&n| {
            let inst = torus_instance(n)?;
            Ok((n, run_search_with(&inst, t_max, opts)?))
        })
        .collect()
}

/// Peaks of a sweep as fit points, with the sides that had none.
pub fn scaling_points(results: &[(usize, SearchResult)]) -> (Vec<ScalingPoint>, Vec<(usize, String)>) {
    let mut points = Vec::new();
    let mut skipped = Vec::new();
    for (n, r) in results {
        match r.peak {
            Some(pk) => points.push(ScalingPoint {
                n: *n,
                vertex_count: 8 * n * n,
                t_star: pk.t,
                p_star: pk.p,
            }),
            None => skipped.push((*n, SearchError::NoPeak.kind().to_string())),
        }
    }
    (points, skipped)
}

/// Sweeps the sides and fits the peaks. Sides without a peak are skipped;
/// at least four must survive.
pub fn scaling_experiment(n_values: &[usize], t_max: usize) -> Result<ScalingFit> {
    let results = sweep(n_values, t_max, SearchOptions::default())?;
    let (points, skipped) = scaling_points(&results);
    let mut fit = fit_scaling(&points)?;
    fit.skipped = skipped;
    Ok(fit)
}

/// Steps times the amplitude-amplification repetition count `1/sqrt(p*)`.
pub fn amplified_cost(t_star: f64, p_star: f64) -> Result<f64> {
    if !(p_star > 0.0) {
        return Err(SearchError::ZeroProbability(p_star));
    }
    Ok(t_star / p_star.sqrt())
}

/// Exponents of `N` and `ln N` in the amplified cost implied by fitted
/// exponents `b` and `d`.
pub fn combined_exponents(b: f64, d: f64) -> (f64, f64) {
    (b, d / 2.0)
}
