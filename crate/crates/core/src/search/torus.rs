use std::collections::BTreeSet;

use super::{Result, SearchError};
use crate::graph::Graph;
use crate::tessellation::{check_polygons, Color, Polygon, Tessellation};
use crate::walk::{EvolutionOperator, ReflectionOperator};

/// Disjoint cliques of a host graph that need not cover every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialTessellation {
    vertex_count: usize,
    polygons: Vec<Polygon>,
}

impl PartialTessellation {
    pub fn new<P: Into<Polygon>>(g: &Graph, polygons: Vec<P>) -> Result<Self> {
        let polygons: Vec<Polygon> = polygons.into_iter().map(Into::into).collect();
        check_polygons(g, g.vertex_count(), &polygons)?;
        Ok(PartialTessellation {
            vertex_count: g.vertex_count(),
            polygons,
        })
    }

    pub fn polygons(&self) -> &[Polygon] {
        &self.polygons
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Vertices in no polygon, ascending.
    pub fn uncovered(&self) -> Vec<usize> {
        let mut covered = vec![false; self.vertex_count];
        for p in &self.polygons {
            for &v in p.vertices() {
                covered[v] = true;
            }
        }
        (0..self.vertex_count).filter(|&v| !covered[v]).collect()
    }

    pub fn as_tessellation(&self, color: Color) -> Tessellation {
        Tessellation::new(self.vertex_count, color, self.polygons.clone())
    }
}

/// Torus of `n * n` 8-cliques joined by `2 n^2` 4-cliques, with one
/// 8-clique left out of the blue tessellation. Vertex `(x, y, k)` has
/// index `(x n + y) 8 + k`.
#[derive(Clone, Debug)]
pub struct SearchInstance {
    pub n: usize,
    pub graph: Graph,
    /// Every 8-clique except the marked one.
    pub blue: PartialTessellation,
    /// All 4-cliques, ordered by `(x, y)` then the two kinds.
    pub red: Tessellation,
    /// The eight vertices of the missing blue polygon.
    pub marked: Vec<usize>,
}

impl SearchInstance {
    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Uniform reflections about the blue and red polygons; marked
    /// vertices are flipped by the blue reflection.
    pub fn walk(&self) -> Result<EvolutionOperator> {
        let u0 = ReflectionOperator::uniform(&self.blue.as_tessellation(Color::Blue))?;
        let u1 = ReflectionOperator::uniform(&self.red)?;
        Ok(EvolutionOperator::new(u0, u1)?)
    }
}

pub fn torus_index(n: usize, x: usize, y: usize, k: usize) -> usize {
    ((x % n) * n + (y % n)) * 8 + k
}

/// Instance with the marked clique at `(0, 0)`.
pub fn torus_instance(n: usize) -> Result<SearchInstance> {
    torus_instance_at(n, 0, 0)
}

/// Instance with the marked clique at `(x0, y0)` (taken modulo `n`).
pub fn torus_instance_at(n: usize, x0: usize, y0: usize) -> Result<SearchInstance> {
    if n < 2 {
        return Err(SearchError::TooSmall {
            parameter: "n",
            value: n,
            min: 2,
        });
    }
    let (x0, y0) = (x0 % n, y0 % n);
    let idx = |x, y, k| torus_index(n, x, y, k);
    let count = 8 * n * n;
    let mut cliques8 = Vec::with_capacity(n * n);
    let mut red = Vec::with_capacity(2 * n * n);
    for x in 0..n {
        for y in 0..n {
            cliques8.push(((x, y), (0..8).map(|k| idx(x, y, k)).collect::<Vec<_>>()));
            red.push(vec![
                idx(x, y, 0),
                idx(x, y, 7),
                idx(x + 1, y, 3),
                idx(x + 1, y, 4),
            ]);
            red.push(vec![
                idx(x, y, 1),
                idx(x, y, 2),
                idx(x, y + 1, 5),
                idx(x, y + 1, 6),
            ]);
        }
    }
    let mut graph = Graph::empty(count);
    for p in cliques8.iter().map(|(_, c)| c).chain(&red) {
        for (a, &u) in p.iter().enumerate() {
            for &v in &p[a + 1..] {
                if !graph.has_edge(u, v) {
                    graph.add_edge(u, v)?;
                }
            }
        }
    }
    let mut labels = vec![String::new(); count];
    for x in 0..n {
        for y in 0..n {
            for k in 0..8 {
                labels[idx(x, y, k)] = format!("({x},{y},{k})");
            }
        }
    }
    let graph = graph.with_labels(labels)?;
    let marked: Vec<usize> = (0..8).map(|k| idx(x0, y0, k)).collect();
    let blue_polygons: Vec<Vec<usize>> = cliques8
        .into_iter()
        .filter(|&(xy, _)| xy != (x0, y0))
        .map(|(_, c)| c)
        .collect();
    let blue = PartialTessellation::new(&graph, blue_polygons)?;
    let red = Tessellation::new(count, Color::Red, red);
    let inst = SearchInstance {
        n,
        graph,
        blue,
        red,
        marked,
    };
    check_instance(&inst)?;
    Ok(inst)
}

/// Combinatorial checks on an instance:
/// - red is a complete tessellation and blue a valid partial one;
/// - marked vertices lie in exactly one polygon, all others in two;
/// - the edges outside every polygon are exactly the edges of the marked
///   clique that no red polygon contains, and there is at least one.
pub fn check_instance(inst: &SearchInstance) -> Result<()> {
    let g = &inst.graph;
    let n = g.vertex_count();
    let red_cover = check_polygons(g, inst.red.vertex_count, &inst.red.polygons)?;
    if let Some(v) = red_cover.iter().position(|&c| !c) {
        return Err(SearchError::Invariant(format!("vertex {v} is in no red polygon")));
    }
    let blue_cover = check_polygons(g, inst.blue.vertex_count(), inst.blue.polygons())?;
    let marked: BTreeSet<usize> = inst.marked.iter().copied().collect();
    for v in 0..n {
        let count = usize::from(blue_cover[v]) + usize::from(red_cover[v]);
        let expected = if marked.contains(&v) { 1 } else { 2 };
        if count != expected {
            return Err(SearchError::Invariant(format!(
                "vertex {v} is in {count} polygons, expected {expected}"
            )));
        }
    }
    let inside: BTreeSet<(usize, usize)> = inst
        .blue
        .polygons()
        .iter()
        .chain(&inst.red.polygons)
        .flat_map(|p| p.edges().collect::<Vec<_>>())
        .collect();
    let outside: Vec<(usize, usize)> = g.edges().filter(|e| !inside.contains(e)).collect();
    if outside.is_empty() {
        return Err(SearchError::Invariant(
            "every edge lies in the tessellation union".into(),
        ));
    }
    if let Some(&(u, v)) = outside
        .iter()
        .find(|(u, v)| !marked.contains(u) || !marked.contains(v))
    {
        return Err(SearchError::Invariant(format!(
            "edge ({u},{v}) outside the union is not in the marked clique"
        )));
    }
    let m: Vec<usize> = marked.iter().copied().collect();
    let expected = m
        .iter()
        .enumerate()
        .flat_map(|(a, &u)| m[a + 1..].iter().map(move |&v| (u, v)))
        .filter(|e| !inside.contains(e))
        .count();
    if outside.len() != expected {
        return Err(SearchError::Invariant(format!(
            "{} edges outside the union, expected {expected}",
            outside.len()
        )));
    }
    Ok(())
}
