use super::{Color, Polygon, Tessellation, TessellationError, TessellationPair};
use crate::graph::{clique_graph_from, maximal_cliques_with_cap, two_coloring, Graph, GraphError};
use crate::limits::Limits;

pub fn is_two_tessellable(g: &Graph) -> Result<bool, TessellationError> {
    is_two_tessellable_with(g, &Limits::default())
}

/// A connected graph is 2-tessellable exactly when its clique graph is
/// 2-colourable. A single maximal clique (1-colourable) counts as yes.
pub fn is_two_tessellable_with(g: &Graph, limits: &Limits) -> Result<bool, TessellationError> {
    if !g.is_connected() {
        return Err(TessellationError::Disconnected);
    }
    let k = clique_graph_from(maximal_cliques_with_cap(g, limits.clique_vertices)?)?;
    Ok(two_coloring(&k.graph).is_some())
}

pub fn build_two_tessellation(g: &Graph) -> Result<TessellationPair, TessellationError> {
    build_two_tessellation_with(g, &Limits::default())
}

/// Builds a covering pair of tessellations from a 2-colouring of the clique
/// graph: maximal cliques become polygons of their colour, then every
/// vertex missing from a colour gets a singleton polygon of that colour.
///
/// Polygon order: lifted cliques in lexicographic order, then singletons by
/// vertex. The clique with the smallest vertices is blue.
pub fn build_two_tessellation_with(
    g: &Graph,
    limits: &Limits,
) -> Result<TessellationPair, TessellationError> {
    if !g.is_connected() {
        return Err(TessellationError::Disconnected);
    }
    let n = g.vertex_count();
    let k = clique_graph_from(maximal_cliques_with_cap(g, limits.clique_vertices)?)?;
    let coloring = two_coloring(&k.graph).ok_or(TessellationError::NotTwoTessellable)?;
    let mut lists: [Vec<Polygon>; 2] = [Vec::new(), Vec::new()];
    let mut seen = [vec![false; n], vec![false; n]];
    for (clique, &c) in k.cliques.iter().zip(&coloring) {
        let c = c as usize;
        // keep-first stripping; same-coloured cliques are disjoint under a
        // proper colouring so nothing is dropped in practice
        let kept: Vec<usize> = clique.iter().copied().filter(|&v| !seen[c][v]).collect();
        for &v in &kept {
            seen[c][v] = true;
        }
        if !kept.is_empty() {
            lists[c].push(Polygon::new(kept));
        }
    }
    for c in 0..2 {
        for v in 0..n {
            if !seen[c][v] {
                lists[c].push(Polygon::new(vec![v]));
            }
        }
    }
    let [blue, red] = lists;
    Ok(TessellationPair {
        blue: Tessellation {
            vertex_count: n,
            color: Color::Blue,
            polygons: blue,
        },
        red: Tessellation {
            vertex_count: n,
            color: Color::Red,
            polygons: red,
        },
    })
}

pub fn brute_force_two_tessellable(g: &Graph) -> Result<bool, TessellationError> {
    brute_force_two_tessellable_with_cap(g, Limits::default().brute_force_vertices)
}

/// Exhaustive search for a pair of clique partitions whose union covers
/// every edge. Works without clique graphs.
///
/// Enumerates every partition of the vertex set into cliques as the first
/// tessellation. A second tessellation covering the leftover edges exists
/// iff each connected component of the leftover-edge graph is a clique:
/// those components (plus singletons) are then the cheapest second
/// partition, and any valid second partition must contain each component
/// inside one of its polygons.
pub fn brute_force_two_tessellable_with_cap(g: &Graph, cap: usize) -> Result<bool, TessellationError> {
    let n = g.vertex_count();
    if n > cap {
        return Err(GraphError::TooLarge {
            operation: "exhaustive tessellation search",
            vertex_count: n,
            cap,
        }
        .into());
    }
    let mut found = false;
    for_each_clique_partition(g, &mut |blocks| {
        if leftover_is_coverable(g, blocks) {
            found = true;
        }
        !found
    });
    Ok(found)
}

/// Every valid tessellation pair of `g` (both partitions into cliques,
/// union covering all edges). Blue is the enumerated partition; red
/// ranges over all clique partitions too. Exponential: tiny graphs only.
pub fn enumerate_tessellation_pairs(
    g: &Graph,
    cap: usize,
) -> Result<Vec<TessellationPair>, TessellationError> {
    let n = g.vertex_count();
    if n > cap {
        return Err(GraphError::TooLarge {
            operation: "tessellation pair enumeration",
            vertex_count: n,
            cap,
        }
        .into());
    }
    let mut partitions: Vec<Vec<Vec<usize>>> = Vec::new();
    for_each_clique_partition(g, &mut |blocks| {
        partitions.push(blocks.to_vec());
        true
    });
    let mut out = Vec::new();
    for blue in &partitions {
        for red in &partitions {
            let pair = TessellationPair::from_lists(n, blue.clone(), red.clone());
            if super::union_covers_edges(g, &pair).covered {
                out.push(pair);
            }
        }
    }
    Ok(out)
}

fn leftover_is_coverable(g: &Graph, blocks: &[Vec<usize>]) -> bool {
    let n = g.vertex_count();
    let mut block_of = vec![0; n];
    for (i, b) in blocks.iter().enumerate() {
        for &v in b {
            block_of[v] = i;
        }
    }
    let leftover: Vec<(usize, usize)> = g.edges().filter(|&(u, v)| block_of[u] != block_of[v]).collect();
    let rest = Graph::from_edges(n, leftover).expect("subset of a simple graph");
    rest.components().iter().all(|c| g.is_clique(c))
}

/// Calls `visit` with every partition of `0..n` into cliques of `g`
/// (restricted-growth enumeration). `visit` returns false to stop.
fn for_each_clique_partition(g: &Graph, visit: &mut dyn FnMut(&[Vec<usize>]) -> bool) {
    fn rec(
        g: &Graph,
        v: usize,
        blocks: &mut Vec<Vec<usize>>,
        visit: &mut dyn FnMut(&[Vec<usize>]) -> bool,
    ) -> bool {
        if v == g.vertex_count() {
            return visit(blocks);
        }
        for i in 0..blocks.len() {
            if blocks[i].iter().all(|&u| g.has_edge(u, v)) {
                blocks[i].push(v);
                let go_on = rec(g, v + 1, blocks, visit);
                blocks[i].pop();
                if !go_on {
                    return false;
                }
            }
        }
        blocks.push(vec![v]);
        let go_on = rec(g, v + 1, blocks, visit);
        blocks.pop();
        go_on
    }
    rec(g, 0, &mut Vec::new(), visit);
}
