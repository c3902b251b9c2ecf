use super::{ModelError, ModelResult};
use crate::graph::Graph;
use crate::tessellation::{Color, Tessellation, TessellationPair};
use crate::walk::{reflection_from, EvolutionOperator, PolygonStateVector, ReflectionOperator};

/// Honeycomb torus with every site replaced by a triangle. Vertex
/// `(x, y, i, k)` has index `((x m + y) 2 + i) 3 + k`.
#[derive(Clone, Debug)]
pub struct HoneycombModel {
    pub m: usize,
    pub graph: Graph,
    /// Blue: triangles `(x, y, i, *)` ordered by `(x, y, i)`. Red: pairs
    /// `(x, y, 0, k)`, `(x - [k=1], y - [k=2], 1, k)` ordered by `(x, y, k)`.
    pub pair: TessellationPair,
}

pub fn honeycomb_index(m: usize, x: usize, y: usize, i: usize, k: usize) -> usize {
    ((x * m + y) * 2 + i) * 3 + k
}

pub fn honeycomb(m: usize) -> ModelResult<HoneycombModel> {
    if m < 2 {
        return Err(ModelError::TooSmall {
            parameter: "m",
            value: m,
            min: 2,
        });
    }
    if m % 2 == 1 {
        return Err(ModelError::OddM(m));
    }
    let idx = |x, y, i, k| honeycomb_index(m, x, y, i, k);
    let mut blue = Vec::with_capacity(2 * m * m);
    let mut red = Vec::with_capacity(3 * m * m);
    for x in 0..m {
        for y in 0..m {
            for i in 0..2 {
                blue.push((0..3).map(|k| idx(x, y, i, k)).collect::<Vec<_>>());
            }
            for k in 0..3 {
                let (dx, dy) = match k {
                    1 => (1, 0),
                    2 => (0, 1),
                    _ => (0, 0),
                };
                red.push(vec![
                    idx(x, y, 0, k),
                    idx((x + m - dx) % m, (y + m - dy) % m, 1, k),
                ]);
            }
        }
    }
    let n = 6 * m * m;
    let mut graph = Graph::empty(n);
    for p in blue.iter().chain(&red) {
        for (a, &u) in p.iter().enumerate() {
            for &v in &p[a + 1..] {
                graph.add_edge(u, v)?;
            }
        }
    }
    let mut labels = vec![String::new(); n];
    for x in 0..m {
        for y in 0..m {
            for i in 0..2 {
                for k in 0..3 {
                    labels[idx(x, y, i, k)] = format!("({x},{y},{i},{k})");
                }
            }
        }
    }
    let graph = graph.with_labels(labels)?;
    Ok(HoneycombModel {
        m,
        graph,
        pair: TessellationPair::new(
            Tessellation::new(n, Color::Blue, blue),
            Tessellation::new(n, Color::Red, red),
        ),
    })
}

/// Vectors on the blue triangles. Red pairs are always uniform.
#[derive(Clone, Debug)]
pub enum BlueAmplitudes {
    Uniform,
    /// One vector per blue polygon, in polygon order.
    Custom(Vec<PolygonStateVector>),
}

impl HoneycombModel {
    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn walk(&self, blue: BlueAmplitudes) -> ModelResult<EvolutionOperator> {
        let u0 = match blue {
            BlueAmplitudes::Uniform => ReflectionOperator::uniform(&self.pair.blue)?,
            BlueAmplitudes::Custom(v) => reflection_from(&self.pair.blue, v)?,
        };
        Ok(EvolutionOperator::new(
            u0,
            ReflectionOperator::uniform(&self.pair.red)?,
        )?)
    }
}
