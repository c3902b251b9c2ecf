//! Line-graph recognition and the four-way graph taxonomy:
//!
//! | label          | meaning                                               |
//! |----------------|-------------------------------------------------------|
//! | `Class1`       | not a line graph                                      |
//! | `Class2a`      | line graph of a non-bipartite graph only              |
//! | `Class2b`      | line graph of a bipartite graph                       |
//! | `Class2bPrime` | `Class2b` with a perfect matching of isolated edges whose removal leaves disjoint cliques |

mod krausz;
mod matching;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{
    beineke, clique_graph_from, find_induced_subgraph, is_diamond_free, maximal_cliques_with_cap,
    two_coloring, EdgeVertexMap, Graph, GraphError, BEINEKE_COUNT,
};
use crate::limits::Limits;

pub use krausz::{
    find_krausz_partition, find_krausz_partition_with, root_graph, root_graph_with, KrauszPartition,
};
pub use matching::{check_two_b_prime, check_two_b_prime_with, MatchingDecomposition};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("graph is disconnected")]
    Disconnected,

    #[error("more than {limit} perfect matchings examined")]
    MatchingLimit { limit: usize },

    /// Two independent recognisers disagreed. Never expected; reported
    /// rather than silently resolved.
    #[error("inconsistent classification: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub type ClassifyResult<T> = Result<T, ClassifyError>;

impl ClassifyError {
    /// Variant name; wrapped graph errors report their own.
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Disconnected => "Disconnected",
            Self::MatchingLimit { .. } => "MatchingLimit",
            Self::Inconsistent(_) => "Inconsistent",
            Self::Graph(e) => e.kind(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ClassLabel {
    Class1,
    Class2a,
    Class2b,
    Class2bPrime,
}

impl ClassLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassLabel::Class1 => "Class1",
            ClassLabel::Class2a => "Class2a",
            ClassLabel::Class2b => "Class2b",
            ClassLabel::Class2bPrime => "Class2bPrime",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Induced copy of `beineke(index)`; `embedding[i]` hosts its vertex `i`.
    Forbidden {
        index: usize,
        embedding: Vec<usize>,
    },
    /// A Krausz partition whose root has an odd cycle, and no partition
    /// with a bipartite root exists.
    NonBipartiteRoot(KrauszPartition),
    /// A Krausz partition with a bipartite root.
    BipartiteRoot(KrauszPartition),
    Matching(MatchingDecomposition),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassEvidence {
    pub label: ClassLabel,
    pub witness: Witness,
}

impl ClassEvidence {
    /// Re-checks the witness with the graph predicates alone.
    pub fn recheck(&self, g: &Graph) -> bool {
        match (&self.label, &self.witness) {
            (ClassLabel::Class1, Witness::Forbidden { index, embedding }) => {
                let Ok(b) = beineke(*index) else { return false };
                is_induced_embedding(g, &b, embedding)
            }
            (ClassLabel::Class2a, Witness::NonBipartiteRoot(p)) => p.is_valid_for(g) && !p.is_two_colorable(),
            (ClassLabel::Class2b, Witness::BipartiteRoot(p)) => {
                p.is_valid_for(g) && p.coloring.as_ref().is_some_and(|c| two_coloring_ok(p, c))
            }
            (ClassLabel::Class2bPrime, Witness::Matching(d)) => d.is_valid_for(g),
            _ => false,
        }
    }
}

fn two_coloring_ok(p: &KrauszPartition, c: &[u8]) -> bool {
    p.memberships().iter().all(|m| c[m[0]] != c[m[1]])
}

fn is_induced_embedding(host: &Graph, pattern: &Graph, map: &[usize]) -> bool {
    let k = pattern.vertex_count();
    map.len() == k
        && map.iter().all(|&v| v < host.vertex_count())
        && (0..k).all(|i| {
            (i + 1..k).all(|j| map[i] != map[j] && pattern.has_edge(i, j) == host.has_edge(map[i], map[j]))
        })
}

/// First forbidden subgraph found, scanning `beineke(1..=9)` in order.
pub fn beineke_scan(g: &Graph) -> Option<(usize, Vec<usize>)> {
    (1..=BEINEKE_COUNT).find_map(|k| {
        let b = beineke(k).expect("catalog index in range");
        find_induced_subgraph(g, &b).map(|e| (k, e))
    })
}

/// Line-graph recognition by forbidden induced subgraphs.
pub fn is_line_graph(g: &Graph) -> bool {
    beineke_scan(g).is_none()
}

/// Line graph of a bipartite graph by the clique characterisation:
/// diamond-free with a bipartite clique graph.
pub fn is_bipartite_line_graph_by_cliques(g: &Graph, limits: &Limits) -> ClassifyResult<bool> {
    if !is_diamond_free(g) {
        return Ok(false);
    }
    let k = clique_graph_from(maximal_cliques_with_cap(g, limits.clique_vertices)?)?;
    Ok(two_coloring(&k.graph).is_some())
}

/// For a graph whose maximal cliques put every vertex in exactly two of
/// them, the map sending a vertex to the clique-graph edge joining its two
/// cliques. Returns it only when it certifies `g = L(K(g))`.
///
/// Matching-decomposable graphs without degree-1 vertices always pass.
pub fn clique_graph_root(g: &Graph, limits: &Limits) -> ClassifyResult<Option<(Graph, EdgeVertexMap)>> {
    let k = clique_graph_from(maximal_cliques_with_cap(g, limits.clique_vertices)?)?;
    let mut holders = vec![Vec::new(); g.vertex_count()];
    for (i, c) in k.cliques.iter().enumerate() {
        for &v in c {
            holders[v].push(i);
        }
    }
    if holders.iter().any(|h| h.len() != 2) {
        return Ok(None);
    }
    let Ok(map) = EdgeVertexMap::new(holders.iter().map(|h| (h[0], h[1])).collect()) else {
        return Ok(None);
    };
    Ok(map.certifies(&k.graph, g).then_some((k.graph, map)))
}

pub fn classify_graph(g: &Graph) -> ClassifyResult<ClassEvidence> {
    classify_graph_with(g, &Limits::default())
}

/// Class 1 when a forbidden subgraph embeds; otherwise a Krausz partition
/// with a bipartite root gives 2b (upgraded to 2b′ when the matching test
/// succeeds), and any other Krausz partition gives 2a. The 2b verdict is
/// cross-checked against the clique characterisation.
pub fn classify_graph_with(g: &Graph, limits: &Limits) -> ClassifyResult<ClassEvidence> {
    if !g.is_connected() {
        return Err(ClassifyError::Disconnected);
    }
    if let Some((index, embedding)) = beineke_scan(g) {
        return Ok(ClassEvidence {
            label: ClassLabel::Class1,
            witness: Witness::Forbidden { index, embedding },
        });
    }
    let by_cliques = is_bipartite_line_graph_by_cliques(g, limits)?;
    if let Some(p) = find_krausz_partition_with(g, limits, true)? {
        if !by_cliques {
            return Err(ClassifyError::Inconsistent(
                "bipartite root found but the clique test rejects".into(),
            ));
        }
        if let Some(d) = check_two_b_prime_with(g, limits)? {
            return Ok(ClassEvidence {
                label: ClassLabel::Class2bPrime,
                witness: Witness::Matching(d),
            });
        }
        return Ok(ClassEvidence {
            label: ClassLabel::Class2b,
            witness: Witness::BipartiteRoot(p),
        });
    }
    if by_cliques {
        return Err(ClassifyError::Inconsistent(
            "clique test accepts but no bipartite root exists".into(),
        ));
    }
    match find_krausz_partition_with(g, limits, false)? {
        Some(p) => Ok(ClassEvidence {
            label: ClassLabel::Class2a,
            witness: Witness::NonBipartiteRoot(p),
        }),
        None => Err(ClassifyError::Inconsistent(
            "no forbidden subgraph but no Krausz partition".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate, named_graph};

    #[test]
    fn named_examples() {
        let fig1 = named_graph("fig1").unwrap();
        assert!(is_line_graph(&fig1));
        assert!(is_line_graph(&named_graph("cycle(4)").unwrap()));
        for k in 1..=9 {
            assert!(!is_line_graph(&beineke(k).unwrap()));
        }
        let e = classify_graph(&fig1).unwrap();
        assert_eq!(e.label, ClassLabel::Class2a);
        assert!(e.recheck(&fig1));
        let c4 = named_graph("cycle(4)").unwrap();
        assert_eq!(classify_graph(&c4).unwrap().label, ClassLabel::Class2bPrime);
        assert_eq!(
            classify_graph(&Graph::complete(3)).unwrap().label,
            ClassLabel::Class2b
        );
        assert_eq!(
            classify_graph(&named_graph("cycle(5)").unwrap()).unwrap().label,
            ClassLabel::Class2a
        );
        assert_eq!(
            classify_graph(&named_graph("claw").unwrap()).unwrap().label,
            ClassLabel::Class1
        );
        assert_eq!(classify_graph(&Graph::empty(2)), Err(ClassifyError::Disconnected));
    }

    #[test]
    fn recognisers_agree_and_evidence_rechecks() {
        for g in enumerate::small_connected_graphs(7) {
            let krausz = find_krausz_partition(&g).unwrap();
            assert_eq!(is_line_graph(&g), krausz.is_some());
            let e = classify_graph(&g).unwrap();
            assert!(e.recheck(&g), "{:?}", e);
            let two_b = matches!(e.label, ClassLabel::Class2b | ClassLabel::Class2bPrime);
            assert_eq!(
                two_b,
                is_bipartite_line_graph_by_cliques(&g, &Limits::default()).unwrap()
            );
        }
    }

    #[test]
    fn own_clique_graph_as_root() {
        let c6 = named_graph("cycle(6)").unwrap();
        let (root, _) = clique_graph_root(&c6, &Limits::default()).unwrap().unwrap();
        assert_eq!(root.vertex_count(), 6);
        // a pendant vertex lies in one maximal clique only
        assert!(
            clique_graph_root(&named_graph("path(4)").unwrap(), &Limits::default())
                .unwrap()
                .is_none()
        );
    }

    #[test]
    fn tampered_evidence_fails() {
        let g = named_graph("claw").unwrap();
        let mut e = classify_graph(&g).unwrap();
        if let Witness::Forbidden { embedding, .. } = &mut e.witness {
            embedding.swap(0, 1);
        }
        assert!(!e.recheck(&g));
    }
}
