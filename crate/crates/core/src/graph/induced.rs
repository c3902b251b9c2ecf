use super::{maximal_cliques_with_cap, named_graph, Graph, GraphResult};

/// Searches for an induced copy of `pattern` in `host`.
///
/// Returns `embedding` with `embedding[i]` the host vertex playing pattern
/// vertex `i`; the map is injective and preserves both adjacency and
/// non-adjacency. Plain backtracking: pattern vertices are placed in
/// breadth-first order so each new vertex (after the first of its component)
/// is drawn from the host neighbourhood of an already placed vertex.
pub fn find_induced_subgraph(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let k = pattern.vertex_count();
    if k > host.vertex_count() {
        return None;
    }
    if k == 0 {
        return Some(Vec::new());
    }
    let order = placement_order(pattern);
    // anchor[i]: an earlier-placed neighbour of order[i], if any
    let anchor: Vec<Option<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &p)| order[..i].iter().copied().find(|&q| pattern.has_edge(p, q)))
        .collect();
    let mut map = vec![usize::MAX; k];
    let mut used = vec![false; host.vertex_count()];
    if place(host, pattern, &order, &anchor, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn placement_order(pattern: &Graph) -> Vec<usize> {
    let k = pattern.vertex_count();
    let mut order = Vec::with_capacity(k);
    let mut seen = vec![false; k];
    while order.len() < k {
        let start = (0..k)
            .filter(|&v| !seen[v])
            .max_by_key(|&v| (pattern.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        seen[start] = true;
        let mut head = order.len();
        order.push(start);
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in pattern.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

fn place(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    anchor: &[Option<usize>],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let all: Vec<usize>;
    let candidates: &[usize] = match anchor[depth] {
        Some(q) => host.neighbors(map[q]),
        None => {
            all = (0..host.vertex_count()).collect();
            &all
        }
    };
    for &h in candidates {
        if used[h] || host.degree(h) < pattern.degree(p) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&q| pattern.has_edge(p, q) == host.has_edge(h, map[q]));
        if !consistent {
            continue;
        }
        map[p] = h;
        used[h] = true;
        if place(host, pattern, order, anchor, depth + 1, map, used) {
            return true;
        }
        used[h] = false;
        map[p] = usize::MAX;
    }
    false
}

/// True when `g` has no induced diamond (`K4` minus an edge).
pub fn is_diamond_free(g: &Graph) -> bool {
    let diamond = named_graph("diamond").expect("catalog graph");
    find_induced_subgraph(g, &diamond).is_none()
}

/// Diamond-freeness through the clique characterisation: every edge lies
/// in exactly one maximal clique.
pub fn is_diamond_free_by_cliques(g: &Graph, clique_cap: usize) -> GraphResult<bool> {
    let cliques = maximal_cliques_with_cap(g, clique_cap)?;
    Ok(g.edges().all(|(u, v)| {
        cliques
            .iter()
            .filter(|c| c.binary_search(&u).is_ok() && c.binary_search(&v).is_ok())
            .count()
            == 1
    }))
}
