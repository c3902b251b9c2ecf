use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{Result, SearchError};
use crate::graph::Graph;

/// Monte-Carlo estimate of the expected hitting time.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct HittingEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub trials: usize,
    /// Walks stopped at the step cap; they enter the mean at the cap, so
    /// the mean is then a lower bound.
    pub capped: usize,
}

/// Simple random walk (uniform move to a neighbour, no laziness) from a
/// uniformly random vertex until it stands on a marked vertex.
pub fn hitting_time(
    g: &Graph,
    marked: &[usize],
    trials: usize,
    seed: u64,
    step_cap: usize,
) -> Result<HittingEstimate> {
    let n = g.vertex_count();
    if trials == 0 {
        return Err(SearchError::TooSmall {
            parameter: "trials",
            value: 0,
            min: 1,
        });
    }
    if marked.is_empty() || marked.iter().any(|&v| v >= n) {
        return Err(SearchError::Invariant("marked set empty or out of range".into()));
    }
    let mut is_marked = vec![false; n];
    for &v in marked {
        is_marked[v] = true;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = Vec::with_capacity(trials);
    let mut capped = 0;
    for _ in 0..trials {
        let mut v = rng.random_range(0..n);
        let mut steps = 0usize;
        while !is_marked[v] && steps < step_cap {
            let nb = g.neighbors(v);
            if nb.is_empty() {
                break;
            }
            v = nb[rng.random_range(0..nb.len())];
            steps += 1;
        }
        if !is_marked[v] {
            capped += 1;
        }
        samples.push(steps as f64);
    }
    let k = trials as f64;
    let mean = samples.iter().sum::<f64>() / k;
    let var = if trials > 1 {
        samples.iter().map(|s| (s - mean).powi(2)).sum::<f64>() / (k - 1.0)
    } else {
        0.0
    };
    Ok(HittingEstimate {
        mean,
        std_error: (var / k).sqrt(),
        trials,
        capped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_matches_geometric_law() {
        // From an unmarked vertex of K_n with one marked vertex the time is
        // geometric with mean n - 1; the start is marked with chance 1/n.
        let n = 10;
        let g = Graph::complete(n);
        let est = hitting_time(&g, &[0], 20_000, 7, 10_000).unwrap();
        let exact = (n as f64 - 1.0) * (n as f64 - 1.0) / n as f64;
        assert!((est.mean - exact).abs() < 5.0 * est.std_error, "{est:?}");
        assert_eq!(est.capped, 0);
    }

    #[test]
    fn deterministic_for_seed() {
        let g = Graph::complete(6);
        let a = hitting_time(&g, &[0], 100, 3, 1000).unwrap();
        let b = hitting_time(&g, &[0], 100, 3, 1000).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn cap_and_errors() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let est = hitting_time(&g, &[0], 50, 1, 20).unwrap();
        assert!(est.capped > 0);
        assert!(hitting_time(&g, &[], 5, 1, 5).is_err());
        assert!(hitting_time(&g, &[0], 0, 1, 5).is_err());
    }
}
