//! Simple undirected graphs and the clique machinery built on top of them.
//!
//! Vertices are `0..N`. Adjacency lists are kept sorted so that membership
//! tests are a binary search and edge iteration is deterministic.

mod catalog;
mod cliques;
mod coloring;
pub mod enumerate;
mod induced;
pub mod io;
mod iso;
mod line;

use std::collections::VecDeque;

use thiserror::Error;

pub use catalog::{beineke, named_graph, BEINEKE_COUNT};
pub(crate) use cliques::clique_graph_from;
pub use cliques::{clique_graph, maximal_cliques, maximal_cliques_with_cap, CliqueGraph};
pub use coloring::{two_coloring, Coloring};
pub use induced::{find_induced_subgraph, is_diamond_free, is_diamond_free_by_cliques};
pub use iso::{are_isomorphic, are_isomorphic_with_cap, canonical_form};
pub use line::{line_graph, EdgeVertexMap};

/// Ordered set of distinct vertex indices of some host graph.
pub type VertexSubset = Vec<usize>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    OutOfRange { vertex: usize, vertex_count: usize },

    #[error("graph has no edges")]
    NoEdges,

    #[error("unknown graph name `{0}`")]
    UnknownName(String),

    #[error("bad parameters for `{name}`: {reason}")]
    BadParams { name: String, reason: String },

    #[error("graph with {vertex_count} vertices exceeds the cap of {cap} for {operation}")]
    TooLarge {
        operation: &'static str,
        vertex_count: usize,
        cap: usize,
    },

    #[error("expected {expected} labels, found {found}")]
    LabelCount { expected: usize, found: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type GraphResult<T> = Result<T, GraphError>;

impl GraphError {
    /// Variant name, used in machine-readable reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Self::SelfLoop(_) => "SelfLoop",
            Self::DuplicateEdge(..) => "DuplicateEdge",
            Self::OutOfRange { .. } => "OutOfRange",
            Self::NoEdges => "NoEdges",
            Self::UnknownName(_) => "UnknownName",
            Self::BadParams { .. } => "BadParams",
            Self::TooLarge { .. } => "TooLarge",
            Self::LabelCount { .. } => "LabelCount",
            Self::Parse { .. } => "Parse",
        }
    }
}

/// A simple undirected graph on vertices `0..N`, optionally labelled.
#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    /// Structural equality; labels are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
            labels: None,
        }
    }

    /// Builds a graph from an explicit edge list. Self-loops, repeated
    /// unordered pairs and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, pairs: I) -> GraphResult<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in pairs {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            g.adj[u] = (0..n).filter(|&v| v != u).collect();
        }
        g.edge_count = n * n.saturating_sub(1) / 2;
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> GraphResult<()> {
        let n = self.adj.len();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::OutOfRange {
                    vertex: w,
                    vertex_count: n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => return Err(GraphError::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => self.adj[u].insert(pos, v),
        }
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        self.edge_count += 1;
        Ok(())
    }

    /// Attaches one label per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> GraphResult<Self> {
        if labels.len() != self.vertex_count() {
            return Err(GraphError::LabelCount {
                expected: self.vertex_count(),
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    /// True when every pair of distinct vertices in `vertices` is adjacent.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]` of `self`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j).expect("distinct induced vertices");
                }
            }
        }
        g
    }

    /// Copy of `self` with the given edges removed (missing edges are ignored).
    pub fn without_edges(&self, removed: &[(usize, usize)]) -> Graph {
        let mut g = Graph::empty(self.vertex_count());
        for (u, v) in self.edges() {
            if !removed.iter().any(|&(a, b)| (a, b) == (u, v) || (b, a) == (u, v)) {
                g.add_edge(u, v).expect("edges of a simple graph");
            }
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The null graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}
