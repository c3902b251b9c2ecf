//! The matching-decomposable subclass: a perfect matching of isolated
//! edges whose removal leaves disjoint cliques.

use super::{ClassifyError, ClassifyResult, KrauszPartition};
use crate::graph::{Graph, GraphError};
use crate::limits::Limits;
use crate::tessellation::Polygon;

/// Perfect matching `M` plus the cliques making up `g - M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingDecomposition {
    /// Matched pairs `(u, v)`, `u < v`, sorted.
    pub matching: Vec<(usize, usize)>,
    /// Components of `g` with the matching removed, each a clique.
    pub cliques: Vec<Vec<usize>>,
}

impl MatchingDecomposition {
    /// Re-validates every condition against `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        let mut hit = vec![0u8; n];
        for &(u, v) in &self.matching {
            if u >= n || v >= n || !g.has_edge(u, v) || !is_bare(g, u, v) {
                return false;
            }
            hit[u] += 1;
            hit[v] += 1;
        }
        if hit.iter().any(|&h| h != 1) {
            return false;
        }
        let rest = g.without_edges(&self.matching);
        let comps = rest.components();
        comps == self.cliques && comps.iter().all(|c| g.is_clique(c))
    }

    /// The 2-colourable Krausz partition this decomposition induces:
    /// cliques coloured 0, matched pairs coloured 1.
    pub fn krausz_partition(&self, vertex_count: usize) -> KrauszPartition {
        let elements: Vec<Polygon> = self
            .cliques
            .iter()
            .cloned()
            .map(Polygon::new)
            .chain(self.matching.iter().map(|&(u, v)| Polygon::new(vec![u, v])))
            .collect();
        let mut coloring = vec![0u8; self.cliques.len()];
        coloring.resize(elements.len(), 1);
        KrauszPartition {
            vertex_count,
            elements,
            coloring: Some(coloring),
        }
    }
}

/// An edge whose endpoints have no common neighbour, i.e. a maximal
/// clique of size two.
fn is_bare(g: &Graph, u: usize, v: usize) -> bool {
    !g.neighbors(u).iter().any(|&w| g.has_edge(v, w))
}

pub fn check_two_b_prime(g: &Graph) -> ClassifyResult<Option<MatchingDecomposition>> {
    check_two_b_prime_with(g, &Limits::default())
}

/// Backtracks over perfect matchings built only from bare edges (the
/// only ones allowed by the maximal-2-clique condition), testing each
/// for the clique-complement condition.
pub fn check_two_b_prime_with(g: &Graph, limits: &Limits) -> ClassifyResult<Option<MatchingDecomposition>> {
    let n = g.vertex_count();
    if n > limits.matching_vertices {
        return Err(GraphError::TooLarge {
            operation: "perfect matching enumeration",
            vertex_count: n,
            cap: limits.matching_vertices,
        }
        .into());
    }
    if n % 2 == 1 {
        return Ok(None);
    }
    let bare: Vec<Vec<usize>> = (0..n)
        .map(|u| {
            g.neighbors(u)
                .iter()
                .copied()
                .filter(|&v| is_bare(g, u, v))
                .collect()
        })
        .collect();
    if bare.iter().any(Vec::is_empty) {
        return Ok(None);
    }
    let mut st = MatchState {
        g,
        bare: &bare,
        mate: vec![None; n],
        examined: 0,
        max: limits.max_matchings,
    };
    st.search()
}

struct MatchState<'a> {
    g: &'a Graph,
    bare: &'a [Vec<usize>],
    mate: Vec<Option<usize>>,
    examined: usize,
    max: usize,
}

impl MatchState<'_> {
    fn search(&mut self) -> ClassifyResult<Option<MatchingDecomposition>> {
        let Some(u) = self.mate.iter().position(Option::is_none) else {
            self.examined += 1;
            if self.examined > self.max {
                return Err(ClassifyError::MatchingLimit { limit: self.max });
            }
            return Ok(self.evaluate());
        };
        for i in 0..self.bare[u].len() {
            let v = self.bare[u][i];
            if self.mate[v].is_some() {
                continue;
            }
            self.mate[u] = Some(v);
            self.mate[v] = Some(u);
            let r = self.search()?;
            self.mate[u] = None;
            self.mate[v] = None;
            if r.is_some() {
                return Ok(r);
            }
        }
        Ok(None)
    }

    fn evaluate(&self) -> Option<MatchingDecomposition> {
        let matching: Vec<(usize, usize)> = self
            .mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| v > u).map(|v| (u, v)))
            .collect();
        let cliques = self.g.without_edges(&matching).components();
        cliques
            .iter()
            .all(|c| self.g.is_clique(c))
            .then_some(MatchingDecomposition { matching, cliques })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate, named_graph};

    /// Oracle: every subset of edges, no pruning by bareness up front.
    fn brute_force(g: &Graph) -> bool {
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let n = g.vertex_count();
        (0u64..1 << edges.len()).any(|mask| {
            let m: Vec<(usize, usize)> = (0..edges.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| edges[i])
                .collect();
            let mut deg = vec![0; n];
            for &(u, v) in &m {
                deg[u] += 1;
                deg[v] += 1;
            }
            deg.iter().all(|&d| d == 1)
                && m.iter()
                    .all(|&(u, v)| (0..n).all(|w| !(g.has_edge(u, w) && g.has_edge(v, w))))
                && g.without_edges(&m).components().iter().all(|c| g.is_clique(c))
        })
    }

    #[test]
    fn four_cycle() {
        let g = named_graph("cycle(4)").unwrap();
        let d = check_two_b_prime(&g).unwrap().unwrap();
        assert_eq!(d.matching, vec![(0, 1), (2, 3)]);
        assert_eq!(d.cliques, vec![vec![0, 3], vec![1, 2]]);
        assert!(d.is_valid_for(&g));
        let p = d.krausz_partition(4);
        assert!(p.is_valid_for(&g));
    }

    #[test]
    fn non_examples() {
        assert!(check_two_b_prime(&Graph::complete(4)).unwrap().is_none());
        assert!(check_two_b_prime(&Graph::complete(3)).unwrap().is_none());
        assert!(check_two_b_prime(&named_graph("path(2)").unwrap())
            .unwrap()
            .is_some());
    }

    #[test]
    fn agrees_with_subset_oracle() {
        for g in enumerate::small_graphs(6)
            .into_iter()
            .filter(|g| g.edge_count() <= 12)
        {
            let found = check_two_b_prime(&g).unwrap();
            if let Some(d) = &found {
                assert!(d.is_valid_for(&g));
                assert!(d.krausz_partition(g.vertex_count()).is_valid_for(&g));
            }
            assert_eq!(found.is_some(), brute_force(&g));
        }
    }

    #[test]
    fn matching_limit() {
        // disjoint edges joined into a ladder have many bare perfect matchings
        let g = named_graph("cycle(8)").unwrap();
        let limits = Limits {
            max_matchings: 1,
            ..Limits::default()
        };
        // first matching examined already works, so no limit error
        assert!(check_two_b_prime_with(&g, &limits).unwrap().is_some());
        let g = Graph::from_edges(
            8,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 4),
                (0, 4),
            ],
        )
        .unwrap();
        let limits = Limits {
            max_matchings: 0,
            ..Limits::default()
        };
        assert_eq!(
            check_two_b_prime_with(&g, &limits),
            Err(ClassifyError::MatchingLimit { limit: 0 })
        );
    }
}
