use std::collections::BTreeMap;

use super::{Graph, GraphError, GraphResult};

/// Bijection between the edges of a root graph and the vertices of its line
/// graph. Edges are stored normalised as `(u, v)` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeVertexMap {
    vertex_to_edge: Vec<(usize, usize)>,
    edge_to_vertex: BTreeMap<(usize, usize), usize>,
}

impl EdgeVertexMap {
    /// Builds the map from the root edge assigned to each line-graph vertex.
    /// Fails on a repeated edge.
    pub fn new(vertex_to_edge: Vec<(usize, usize)>) -> GraphResult<Self> {
        let vertex_to_edge: Vec<(usize, usize)> = vertex_to_edge
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        let mut edge_to_vertex = BTreeMap::new();
        for (k, &e) in vertex_to_edge.iter().enumerate() {
            if edge_to_vertex.insert(e, k).is_some() {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(EdgeVertexMap {
            vertex_to_edge,
            edge_to_vertex,
        })
    }

    pub fn len(&self) -> usize {
        self.vertex_to_edge.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_to_edge.is_empty()
    }

    pub fn edge_of(&self, vertex: usize) -> (usize, usize) {
        self.vertex_to_edge[vertex]
    }

    pub fn vertex_of(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_to_vertex.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.vertex_to_edge
    }

    /// Checks that this map is an isomorphism from `L(root)` onto `line`:
    /// the mapped edges are exactly the edges of `root`, and two vertices
    /// of `line` are adjacent iff their edges share an endpoint.
    pub fn certifies(&self, root: &Graph, line: &Graph) -> bool {
        if self.len() != line.vertex_count() || root.edge_count() != self.len() {
            return false;
        }
        if !self.vertex_to_edge.iter().all(|&(a, b)| root.has_edge(a, b)) {
            return false;
        }
        (0..self.len()).all(|i| {
            (i + 1..self.len()).all(|j| {
                let (a, b) = self.vertex_to_edge[i];
                let (c, d) = self.vertex_to_edge[j];
                let share = a == c || a == d || b == c || b == d;
                share == line.has_edge(i, j)
            })
        })
    }
}

/// Line graph of `g`: vertex `i` is the `i`-th edge of `g` in lexicographic
/// order; two vertices are adjacent when their edges share an endpoint.
pub fn line_graph(g: &Graph) -> GraphResult<(Graph, EdgeVertexMap)> {
    if g.edge_count() == 0 {
        return Err(GraphError::NoEdges);
    }
    let map = EdgeVertexMap::new(g.edges().collect())?;
    let mut lg = Graph::empty(map.len());
    for v in 0..g.vertex_count() {
        let incident: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| map.vertex_of(v, w).expect("edge of g"))
            .collect();
        for (i, &a) in incident.iter().enumerate() {
            for &b in &incident[i + 1..] {
                // two edges share at most one endpoint in a simple graph
                lg.add_edge(a, b)?;
            }
        }
    }
    Ok((lg, map))
}
