use fixedbitset::FixedBitSet;

use super::{Graph, GraphError, GraphResult, VertexSubset};
use crate::limits::Limits;

/// Maximal cliques under the default vertex cap.
pub fn maximal_cliques(g: &Graph) -> GraphResult<Vec<VertexSubset>> {
    maximal_cliques_with_cap(g, Limits::default().clique_vertices)
}

/// All maximal cliques of `g`, each sorted, listed in lexicographic order.
///
/// Pivoted Bron–Kerbosch over bitsets. Isolated vertices come out as
/// singleton cliques. Graphs above `cap` vertices are refused since the
/// enumeration is exponential in the worst case.
pub fn maximal_cliques_with_cap(g: &Graph, cap: usize) -> GraphResult<Vec<VertexSubset>> {
    let n = g.vertex_count();
    if n > cap {
        return Err(GraphError::TooLarge {
            operation: "maximal clique enumeration",
            vertex_count: n,
            cap,
        });
    }
    let nbrs: Vec<FixedBitSet> = (0..n)
        .map(|v| {
            let mut s = FixedBitSet::with_capacity(n);
            for &w in g.neighbors(v) {
                s.insert(w);
            }
            s
        })
        .collect();
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    let x = FixedBitSet::with_capacity(n);
    let mut out = Vec::new();
    if n > 0 {
        expand(&mut Vec::new(), p, x, &nbrs, &mut out);
    }
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    Ok(out)
}

fn expand(
    r: &mut Vec<usize>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    nbrs: &[FixedBitSet],
    out: &mut Vec<VertexSubset>,
) {
    if p.is_clear() {
        if x.is_clear() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| p.intersection_count(&nbrs[u]))
        .expect("P is nonempty");
    let candidates: Vec<usize> = p.difference(&nbrs[pivot]).collect();
    for v in candidates {
        let mut p_next = p.clone();
        p_next.intersect_with(&nbrs[v]);
        let mut x_next = x.clone();
        x_next.intersect_with(&nbrs[v]);
        r.push(v);
        expand(r, p_next, x_next, nbrs, out);
        r.pop();
        p.set(v, false);
        x.insert(v);
    }
}

/// The clique graph `K(g)`: vertex `i` stands for `cliques[i]`, and two
/// vertices are adjacent when their cliques share at least one vertex.
#[derive(Clone, Debug)]
pub struct CliqueGraph {
    pub graph: Graph,
    pub cliques: Vec<VertexSubset>,
}

pub fn clique_graph(g: &Graph) -> GraphResult<CliqueGraph> {
    clique_graph_from(maximal_cliques(g)?)
}

pub(crate) fn clique_graph_from(cliques: Vec<VertexSubset>) -> GraphResult<CliqueGraph> {
    let mut graph = Graph::empty(cliques.len());
    for i in 0..cliques.len() {
        for j in i + 1..cliques.len() {
            // cliques are sorted, so a merge walk finds a common vertex
            if sorted_intersect(&cliques[i], &cliques[j]) {
                graph.add_edge(i, j)?;
            }
        }
    }
    Ok(CliqueGraph { graph, cliques })
}

fn sorted_intersect(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;

    /// Exhaustive oracle: test every vertex subset for cliqueness and
    /// maximality.
    fn brute_force_maximal_cliques(g: &Graph) -> Vec<VertexSubset> {
        let n = g.vertex_count();
        let cliques: Vec<Vec<usize>> = (1u32..1 << n)
            .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>())
            .filter(|s| g.is_clique(s))
            .collect();
        let mut out: Vec<VertexSubset> = cliques
            .iter()
            .filter(|c| {
                !cliques
                    .iter()
                    .any(|d| d.len() > c.len() && c.iter().all(|v| d.contains(v)))
            })
            .cloned()
            .collect();
        out.sort();
        out
    }

    #[test]
    fn triangle_is_one_clique() {
        assert_eq!(maximal_cliques(&Graph::complete(3)).unwrap(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn path_cliques_are_edges() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(maximal_cliques(&g).unwrap(), vec![vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn fig1_cliques_match_brute_force() {
        let g = named_graph("fig1").unwrap();
        let expected = brute_force_maximal_cliques(&g);
        assert_eq!(expected, vec![vec![0, 1, 2, 3], vec![2, 3, 4]]);
        assert_eq!(maximal_cliques(&g).unwrap(), expected);
    }

    #[test]
    fn isolated_vertices_are_singletons() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(maximal_cliques(&g).unwrap(), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn agrees_with_brute_force_on_catalog() {
        for g in crate::graph::enumerate::small_graphs(6) {
            assert_eq!(maximal_cliques(&g).unwrap(), brute_force_maximal_cliques(&g));
        }
    }

    #[test]
    fn clique_graph_examples() {
        for n in 1..7 {
            let k = clique_graph(&Graph::complete(n)).unwrap();
            assert_eq!(k.graph.vertex_count(), 1);
            assert_eq!(k.graph.edge_count(), 0);
        }
        let k = clique_graph(&named_graph("fig1").unwrap()).unwrap();
        assert_eq!(k.graph, Graph::complete(2));
        let k = clique_graph(&named_graph("hajos").unwrap()).unwrap();
        assert_eq!(k.graph, Graph::complete(4));
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::empty(65);
        assert!(matches!(
            maximal_cliques(&g),
            Err(GraphError::TooLarge { cap: 64, .. })
        ));
        assert_eq!(maximal_cliques_with_cap(&g, 100).unwrap().len(), 65);
    }
}
