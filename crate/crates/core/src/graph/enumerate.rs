//! Exhaustive generation of small graphs up to isomorphism.

use std::collections::BTreeSet;

use super::{canonical_form, Graph};

/// One representative of every isomorphism class of graphs on `1..=max_n`
/// vertices (connected or not), ordered by vertex count then canonical form.
///
/// Generated by vertex augmentation: every graph on `k` vertices arises from
/// one on `k - 1` vertices by adding a vertex with some neighbourhood.
/// Intended for `max_n <= 7` (1044 graphs on 7 vertices).
pub fn small_graphs(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    if max_n == 0 {
        return out;
    }
    let mut level = vec![Graph::empty(1)];
    out.extend(level.iter().cloned());
    for k in 2..=max_n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u32..1 << (k - 1) {
                let mut h = Graph::empty(k);
                for (u, v) in g.edges() {
                    h.add_edge(u, v).unwrap();
                }
                for u in (0..k - 1).filter(|&u| mask >> u & 1 == 1) {
                    h.add_edge(u, k - 1).unwrap();
                }
                let form = canonical_form(&h).expect("small graph");
                if seen.insert(form) {
                    next.push((form, h));
                }
            }
        }
        next.sort_by_key(|(f, _)| *f);
        level = next.into_iter().map(|(_, g)| g).collect();
        out.extend(level.iter().cloned());
    }
    out
}

/// Connected representatives from [`small_graphs`].
pub fn small_connected_graphs(max_n: usize) -> Vec<Graph> {
    small_graphs(max_n)
        .into_iter()
        .filter(Graph::is_connected)
        .collect()
}
