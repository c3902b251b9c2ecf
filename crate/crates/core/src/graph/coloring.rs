use std::collections::VecDeque;

use super::Graph;

/// Colour (0 or 1) per vertex.
pub type Coloring = Vec<u8>;

/// Proper 2-colouring by breadth-first layering, or `None` when `g` has an
/// odd cycle. Each component starts from its smallest vertex with colour 0.
pub fn two_coloring(g: &Graph) -> Option<Coloring> {
    let n = g.vertex_count();
    let mut color: Vec<Option<u8>> = vec![None; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &v in g.neighbors(u) {
                match color[v] {
                    None => {
                        color[v] = Some(1 - cu);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(color.into_iter().map(Option::unwrap).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate, named_graph};

    fn has_odd_cycle(g: &Graph) -> bool {
        // closed walk of odd length <= n from v back to v exists iff an odd
        // cycle exists; track reachable vertex sets by walk-length parity
        let n = g.vertex_count();
        (0..n).any(|s| {
            let mut frontier = vec![false; n];
            frontier[s] = true;
            for len in 1..=n {
                let mut next = vec![false; n];
                for u in (0..n).filter(|&u| frontier[u]) {
                    for &v in g.neighbors(u) {
                        next[v] = true;
                    }
                }
                if len % 2 == 1 && next[s] {
                    return true;
                }
                frontier = next;
            }
            false
        })
    }

    #[test]
    fn cycles() {
        let c4 = named_graph("cycle(4)").unwrap();
        let c5 = named_graph("cycle(5)").unwrap();
        let col = two_coloring(&c4).unwrap();
        assert!(c4.edges().all(|(u, v)| col[u] != col[v]));
        assert!(two_coloring(&c5).is_none());
        assert_eq!(two_coloring(&Graph::empty(1)), Some(vec![0]));
    }

    #[test]
    fn matches_odd_cycle_search() {
        for g in enumerate::small_graphs(7) {
            let col = two_coloring(&g);
            assert_eq!(col.is_none(), has_odd_cycle(&g));
            if let Some(col) = col {
                assert!(g.edges().all(|(u, v)| col[u] != col[v]));
            }
        }
    }
}
