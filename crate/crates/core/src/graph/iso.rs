use super::{Graph, GraphError, GraphResult};
use crate::limits::Limits;

/// Exact isomorphism test under the default vertex cap (12).
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> GraphResult<bool> {
    are_isomorphic_with_cap(g1, g2, Limits::default().isomorphism_vertices)
}

/// Exact isomorphism test by pruned permutation search. Vertices may only
/// map onto vertices with the same degree and neighbour-degree multiset, and
/// every partial map must preserve adjacency and non-adjacency.
pub fn are_isomorphic_with_cap(g1: &Graph, g2: &Graph, cap: usize) -> GraphResult<bool> {
    let n = g1.vertex_count().max(g2.vertex_count());
    if n > cap {
        return Err(GraphError::TooLarge {
            operation: "isomorphism testing",
            vertex_count: n,
            cap,
        });
    }
    if g1.vertex_count() != g2.vertex_count()
        || g1.edge_count() != g2.edge_count()
        || g1.degree_sequence() != g2.degree_sequence()
    {
        return Ok(false);
    }
    let k1 = invariants(g1);
    let k2 = invariants(g2);
    let mut s1 = k1.clone();
    let mut s2 = k2.clone();
    s1.sort();
    s2.sort();
    if s1 != s2 {
        return Ok(false);
    }
    let n = g1.vertex_count();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend(g1, g2, &k1, &k2, 0, &mut map, &mut used))
}

fn invariants(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    (0..g.vertex_count())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect()
}

fn extend(
    g1: &Graph,
    g2: &Graph,
    k1: &[(usize, Vec<usize>)],
    k2: &[(usize, Vec<usize>)],
    v: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if v == g1.vertex_count() {
        return true;
    }
    for w in 0..g2.vertex_count() {
        if used[w] || k1[v] != k2[w] {
            continue;
        }
        if (0..v).all(|u| g1.has_edge(u, v) == g2.has_edge(map[u], w)) {
            map[v] = w;
            used[w] = true;
            if extend(g1, g2, k1, k2, v + 1, map, used) {
                return true;
            }
            used[w] = false;
        }
    }
    false
}

/// Canonical form of a small graph: vertex count plus the lexicographically
/// smallest adjacency bit string over all vertex orders compatible with the
/// degree/neighbour-degree refinement. Two graphs are isomorphic iff their
/// canonical forms are equal. Limited to 15 vertices (bits packed in a u128).
pub fn canonical_form(g: &Graph) -> GraphResult<(usize, u128)> {
    let n = g.vertex_count();
    if n > 15 {
        return Err(GraphError::TooLarge {
            operation: "canonical form",
            vertex_count: n,
            cap: 15,
        });
    }
    let keys = invariants(g);
    let mut classes: Vec<(usize, Vec<usize>)> = keys.clone();
    classes.sort();
    classes.dedup();
    // slot j of the order must hold a vertex from class slot_class[j]
    let mut slot_class = Vec::with_capacity(n);
    for (ci, c) in classes.iter().enumerate() {
        let size = keys.iter().filter(|k| *k == c).count();
        slot_class.extend(std::iter::repeat_n(ci, size));
    }
    let class_of: Vec<usize> = keys
        .iter()
        .map(|k| classes.iter().position(|c| c == k).unwrap())
        .collect();
    let mut best: Option<u128> = None;
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search(g, &slot_class, &class_of, &mut order, &mut used, 0, &mut best);
    Ok((n, best.unwrap_or(0)))
}

/// Bits are laid out column by column: column `j` holds pairs `(i, j)` for
/// `i < j`, so fixing the first `j + 1` slots fixes a prefix of the string.
fn search(
    g: &Graph,
    slot_class: &[usize],
    class_of: &[usize],
    order: &mut Vec<usize>,
    used: &mut [bool],
    bits: u128,
    best: &mut Option<u128>,
) {
    let n = g.vertex_count();
    let j = order.len();
    if j == n {
        if best.is_none_or(|b| bits < b) {
            *best = Some(bits);
        }
        return;
    }
    let offset = j * j.saturating_sub(1) / 2;
    for v in 0..n {
        if used[v] || class_of[v] != slot_class[j] {
            continue;
        }
        let mut next = bits;
        for (i, &u) in order.iter().enumerate() {
            if g.has_edge(u, v) {
                // most significant bits first so numeric order is string order
                next |= 1u128 << (127 - (offset + i));
            }
        }
        if let Some(b) = *best {
            let used_bits = offset + j;
            let mask = if used_bits == 0 {
                0
            } else {
                !0u128 << (128 - used_bits)
            };
            if next & mask > b & mask {
                continue;
            }
        }
        order.push(v);
        used[v] = true;
        search(g, slot_class, class_of, order, used, next, best);
        used[v] = false;
        order.pop();
    }
}
