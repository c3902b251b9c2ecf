//! Polygons and tessellations: partitions of the vertex set into cliques.

mod build;
pub mod io;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub use build::{
    brute_force_two_tessellable, brute_force_two_tessellable_with_cap, build_two_tessellation,
    build_two_tessellation_with, enumerate_tessellation_pairs, is_two_tessellable, is_two_tessellable_with,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Blue,
    Red,
}

/// A clique of the host graph used as one element of a tessellation.
/// Vertices are kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polygon(Vec<usize>);

impl Polygon {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        Polygon(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Unordered vertex pairs inside the polygon, `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(move |(i, &u)| self.0[i + 1..].iter().map(move |&v| (u, v)))
    }
}

impl From<Vec<usize>> for Polygon {
    fn from(v: Vec<usize>) -> Self {
        Polygon::new(v)
    }
}

/// A list of polygons over a host graph with `vertex_count` vertices.
/// Validity is checked by [`validate_tessellation`], not on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tessellation {
    pub vertex_count: usize,
    pub color: Color,
    pub polygons: Vec<Polygon>,
}

impl Tessellation {
    pub fn new<P: Into<Polygon>>(vertex_count: usize, color: Color, polygons: Vec<P>) -> Self {
        Tessellation {
            vertex_count,
            color,
            polygons: polygons.into_iter().map(Into::into).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.polygons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polygons.is_empty()
    }

    /// Index of the polygon holding each vertex (first one wins if the
    /// tessellation is invalid and polygons overlap).
    pub fn polygon_of(&self) -> Vec<Option<usize>> {
        let mut owner = vec![None; self.vertex_count];
        for (i, p) in self.polygons.iter().enumerate() {
            for &v in p.vertices() {
                if v < self.vertex_count && owner[v].is_none() {
                    owner[v] = Some(i);
                }
            }
        }
        owner
    }
}

/// Blue and red tessellations over one host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TessellationPair {
    pub blue: Tessellation,
    pub red: Tessellation,
}

impl TessellationPair {
    pub fn new(blue: Tessellation, red: Tessellation) -> Self {
        TessellationPair { blue, red }
    }

    /// Convenience constructor from raw polygon lists.
    pub fn from_lists(vertex_count: usize, blue: Vec<Vec<usize>>, red: Vec<Vec<usize>>) -> Self {
        TessellationPair {
            blue: Tessellation::new(vertex_count, Color::Blue, blue),
            red: Tessellation::new(vertex_count, Color::Red, red),
        }
    }
}

/// First violation found while checking a tessellation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TessellationViolation {
    #[error("tessellation is for {found} vertices, graph has {expected}")]
    VertexCountMismatch { expected: usize, found: usize },

    #[error("polygon {polygon} is empty")]
    EmptyPolygon { polygon: usize },

    #[error("polygon {polygon} names vertex {vertex}, out of range")]
    OutOfRange { polygon: usize, vertex: usize },

    #[error("polygon {polygon} is not a clique: {u} and {v} are not adjacent")]
    NotAClique { polygon: usize, u: usize, v: usize },

    #[error("polygon {polygon} overlaps an earlier polygon at vertex {vertex}")]
    Overlap { polygon: usize, vertex: usize },

    #[error("vertex {vertex} is in no polygon")]
    UncoveredVertex { vertex: usize },
}

impl TessellationViolation {
    /// Variant name, used in machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Self::VertexCountMismatch { .. } => "VertexCountMismatch",
            Self::EmptyPolygon { .. } => "EmptyPolygon",
            Self::OutOfRange { .. } => "OutOfRange",
            Self::NotAClique { .. } => "NotAClique",
            Self::Overlap { .. } => "Overlap",
            Self::UncoveredVertex { .. } => "UncoveredVertex",
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TessellationError {
    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not 2-tessellable: its clique graph has an odd cycle")]
    NotTwoTessellable,

    #[error("{color:?} tessellation invalid: {violation}")]
    Invalid {
        color: Color,
        violation: TessellationViolation,
    },

    #[error(transparent)]
    Graph(#[from] GraphError),

    #[error("tessellation file: {0}")]
    Parse(String),
}

impl TessellationError {
    /// Variant name; invalid tessellations report the violation.
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Disconnected => "Disconnected",
            Self::NotTwoTessellable => "NotTwoTessellable",
            Self::Invalid { violation, .. } => violation.kind(),
            Self::Graph(e) => e.kind(),
            Self::Parse(_) => "Parse",
        }
    }
}

/// Checks cliqueness, disjointness and vertex coverage, polygon by polygon.
pub fn validate_tessellation(g: &Graph, t: &Tessellation) -> Result<(), TessellationViolation> {
    let covered = check_polygons(g, t.vertex_count, &t.polygons)?;
    match covered.iter().position(|&c| !c) {
        Some(vertex) => Err(TessellationViolation::UncoveredVertex { vertex }),
        None => Ok(()),
    }
}

/// Shared by complete and partial tessellations: polygons must be nonempty,
/// in range, cliques and pairwise disjoint. Returns the coverage mask.
pub(crate) fn check_polygons(
    g: &Graph,
    vertex_count: usize,
    polygons: &[Polygon],
) -> Result<Vec<bool>, TessellationViolation> {
    let n = g.vertex_count();
    if vertex_count != n {
        return Err(TessellationViolation::VertexCountMismatch {
            expected: n,
            found: vertex_count,
        });
    }
    let mut covered = vec![false; n];
    for (i, p) in polygons.iter().enumerate() {
        if p.is_empty() {
            return Err(TessellationViolation::EmptyPolygon { polygon: i });
        }
        if let Some(&vertex) = p.vertices().iter().find(|&&v| v >= n) {
            return Err(TessellationViolation::OutOfRange { polygon: i, vertex });
        }
        if let Some((u, v)) = p.edges().find(|&(u, v)| u != v && !g.has_edge(u, v)) {
            return Err(TessellationViolation::NotAClique { polygon: i, u, v });
        }
        for w in p.vertices().windows(2) {
            if w[0] == w[1] {
                return Err(TessellationViolation::Overlap {
                    polygon: i,
                    vertex: w[0],
                });
            }
        }
        for &v in p.vertices() {
            if covered[v] {
                return Err(TessellationViolation::Overlap {
                    polygon: i,
                    vertex: v,
                });
            }
            covered[v] = true;
        }
    }
    Ok(covered)
}

/// Validates both colours of a pair.
pub fn validate_pair(g: &Graph, pair: &TessellationPair) -> Result<(), TessellationError> {
    for t in [&pair.blue, &pair.red] {
        validate_tessellation(g, t).map_err(|violation| TessellationError::Invalid {
            color: t.color,
            violation,
        })?;
    }
    Ok(())
}

/// Result of the edge-coverage check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coverage {
    pub covered: bool,
    /// Edges of the graph lying in no polygon of either colour.
    pub missing: Vec<(usize, usize)>,
}

/// Whether every edge lies inside a polygon of one of the two colours.
pub fn union_covers_edges(g: &Graph, pair: &TessellationPair) -> Coverage {
    let inside: BTreeSet<(usize, usize)> = pair
        .blue
        .polygons
        .iter()
        .chain(&pair.red.polygons)
        .flat_map(|p| p.edges().collect::<Vec<_>>())
        .collect();
    let missing: Vec<(usize, usize)> = g.edges().filter(|e| !inside.contains(e)).collect();
    Coverage {
        covered: missing.is_empty(),
        missing,
    }
}

/// Edges whose endpoints share a blue polygon and also share a red polygon.
pub fn intersection_edges(pair: &TessellationPair) -> Vec<(usize, usize)> {
    let red_of = pair.red.polygon_of();
    let mut out: Vec<(usize, usize)> = pair
        .blue
        .polygons
        .iter()
        .flat_map(|p| p.edges().collect::<Vec<_>>())
        .filter(|&(u, v)| {
            let ru = red_of.get(u).copied().flatten();
            ru.is_some() && ru == red_of.get(v).copied().flatten()
        })
        .collect();
    out.sort_unstable();
    out
}

/// True when every maximal clique of `g` lies inside a single polygon of
/// the pair.
pub fn maximal_cliques_inside_polygons(cliques: &[Vec<usize>], pair: &TessellationPair) -> bool {
    cliques.iter().all(|c| {
        pair.blue
            .polygons
            .iter()
            .chain(&pair.red.polygons)
            .any(|p| c.iter().all(|&v| p.contains(v)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;

    fn fig1_pair() -> TessellationPair {
        TessellationPair::from_lists(
            5,
            vec![vec![0, 1, 2, 3], vec![4]],
            vec![vec![0, 1], vec![2, 3, 4]],
        )
    }

    #[test]
    fn validate_examples() {
        let g = named_graph("fig1").unwrap();
        assert_eq!(validate_tessellation(&g, &fig1_pair().blue), Ok(()));
        assert_eq!(validate_tessellation(&g, &fig1_pair().red), Ok(()));
        let t = Tessellation::new(5, Color::Blue, vec![vec![0, 1, 2, 3], vec![3, 4]]);
        assert_eq!(
            validate_tessellation(&g, &t),
            Err(TessellationViolation::Overlap {
                polygon: 1,
                vertex: 3
            })
        );
        let t = Tessellation::new(5, Color::Blue, vec![vec![0, 4], vec![1, 2, 3]]);
        assert_eq!(
            validate_tessellation(&g, &t),
            Err(TessellationViolation::NotAClique {
                polygon: 0,
                u: 0,
                v: 4
            })
        );
        let t = Tessellation::new(5, Color::Blue, vec![vec![0, 1, 2, 3]]);
        assert_eq!(
            validate_tessellation(&g, &t),
            Err(TessellationViolation::UncoveredVertex { vertex: 4 })
        );
        let t = Tessellation::new(5, Color::Blue, vec![vec![0, 1, 2, 3], vec![], vec![4]]);
        assert_eq!(
            validate_tessellation(&g, &t),
            Err(TessellationViolation::EmptyPolygon { polygon: 1 })
        );
        let t = Tessellation::new(5, Color::Blue, vec![vec![0, 1, 2, 3], vec![4, 4]]);
        assert!(matches!(
            validate_tessellation(&g, &t),
            Err(TessellationViolation::Overlap {
                polygon: 1,
                vertex: 4
            })
        ));
    }

    #[test]
    fn coverage_examples() {
        let g = named_graph("fig1").unwrap();
        assert!(union_covers_edges(&g, &fig1_pair()).covered);
        let singletons = (0..5).map(|v| vec![v]).collect();
        let pair = TessellationPair::from_lists(5, vec![vec![0, 1, 2, 3], vec![4]], singletons);
        let cov = union_covers_edges(&g, &pair);
        assert!(!cov.covered);
        assert_eq!(cov.missing, vec![(2, 4), (3, 4)]);

        let edgeless = Graph::empty(3);
        let s: Vec<Vec<usize>> = (0..3).map(|v| vec![v]).collect();
        assert!(union_covers_edges(&edgeless, &TessellationPair::from_lists(3, s.clone(), s)).covered);
    }

    #[test]
    fn intersection_examples() {
        assert!(intersection_edges(&fig1_pair()).contains(&(0, 1)));
        let barbell_a = TessellationPair::from_lists(
            6,
            vec![vec![0, 1, 2], vec![3, 4, 5]],
            vec![vec![0, 1], vec![2, 3], vec![4, 5]],
        );
        assert_eq!(intersection_edges(&barbell_a), vec![(0, 1), (4, 5)]);
        let barbell_b = TessellationPair::from_lists(
            6,
            vec![vec![0, 1, 2], vec![3, 4, 5]],
            vec![vec![0], vec![1], vec![2, 3], vec![4], vec![5]],
        );
        assert!(intersection_edges(&barbell_b).is_empty());
    }
}
