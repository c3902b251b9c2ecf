use nalgebra::Matrix3;

use super::{ModelError, ModelResult};
use crate::graph::Graph;
use crate::tessellation::{Color, Polygon, Tessellation, TessellationPair};
use crate::walk::{reflection_from, EvolutionOperator, PolygonStateVector, ReflectionOperator};
use num_complex::Complex64;

/// The coin `C(rho)` written out entrywise.
pub fn coin_matrix(rho: f64) -> Matrix3<f64> {
    let r2 = rho * rho;
    let off = rho * (2.0 - 2.0 * r2).sqrt();
    Matrix3::new(
        -r2,
        off,
        1.0 - r2, //
        off,
        2.0 * r2 - 1.0,
        off, //
        1.0 - r2,
        off,
        -r2,
    )
}

/// The unique +1 eigenvector of `C(rho)`.
pub fn alpha_rho(rho: f64) -> [f64; 3] {
    let s = ((1.0 - rho * rho) / 2.0).sqrt();
    [s, rho, s]
}

/// Three-state walk on a ring of `sites` sites; vertex `(n, i)` has index
/// `3 n + i`. Site arithmetic wraps modulo `sites`.
#[derive(Clone, Debug)]
pub struct ThreeStateModel {
    pub sites: usize,
    pub rho: f64,
    pub graph: Graph,
    /// Blue: site triangles. Red: pairs `{(n,0), (n+1,2)}` for each `n`,
    /// then singletons `{(n,1)}`.
    pub pair: TessellationPair,
}

pub fn three_state(sites: usize, rho: f64) -> ModelResult<ThreeStateModel> {
    if sites < 3 {
        return Err(ModelError::TooSmall {
            parameter: "sites",
            value: sites,
            min: 3,
        });
    }
    if !(rho > 0.0 && rho < 1.0) {
        return Err(ModelError::BadRho(rho));
    }
    let n = 3 * sites;
    let blue: Vec<Vec<usize>> = (0..sites).map(|s| vec![3 * s, 3 * s + 1, 3 * s + 2]).collect();
    let mut red: Vec<Vec<usize>> = (0..sites)
        .map(|s| vec![3 * s, 3 * ((s + 1) % sites) + 2])
        .collect();
    red.extend((0..sites).map(|s| vec![3 * s + 1]));
    let mut graph = Graph::empty(n);
    for p in blue.iter().chain(&red) {
        for (a, &u) in p.iter().enumerate() {
            for &v in &p[a + 1..] {
                graph.add_edge(u, v)?;
            }
        }
    }
    let labels = (0..n).map(|v| format!("({},{})", v / 3, v % 3)).collect();
    Ok(ThreeStateModel {
        sites,
        rho,
        graph: graph.with_labels(labels)?,
        pair: TessellationPair::new(
            Tessellation::new(n, Color::Blue, blue),
            Tessellation::new(n, Color::Red, red),
        ),
    })
}

impl ThreeStateModel {
    /// `alpha_rho` on every site triangle, uniform red vectors.
    pub fn walk(&self) -> ModelResult<EvolutionOperator> {
        let a = alpha_rho(self.rho);
        let blue = self
            .pair
            .blue
            .polygons
            .iter()
            .map(|p: &Polygon| {
                PolygonStateVector::new(p.clone(), a.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(EvolutionOperator::new(
            reflection_from(&self.pair.blue, blue)?,
            ReflectionOperator::uniform(&self.pair.red)?,
        )?)
    }

    /// The flip-flop shift as a permutation: `|n,0> -> |n+1,2>`,
    /// `|n,1> -> |n,1>`, `|n,2> -> |n-1,0>`.
    pub fn shift_target(&self, v: usize) -> usize {
        let (s, i) = (v / 3, v % 3);
        let l = self.sites;
        match i {
            0 => 3 * ((s + 1) % l) + 2,
            1 => v,
            _ => 3 * ((s + l - 1) % l),
        }
    }
}
