//! Krausz partitions by complete backtracking.

use std::collections::BTreeMap;

use super::{ClassifyError, ClassifyResult};
use crate::graph::{two_coloring, EdgeVertexMap, Graph, GraphError};
use crate::limits::Limits;
use crate::tessellation::Polygon;

/// Cliques covering every edge exactly once with every vertex in exactly
/// two elements. Singleton elements are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KrauszPartition {
    pub vertex_count: usize,
    pub elements: Vec<Polygon>,
    /// Colour per element when the root graph is bipartite.
    pub coloring: Option<Vec<u8>>,
}

impl KrauszPartition {
    fn new(vertex_count: usize, elements: Vec<Polygon>) -> Self {
        let mut p = KrauszPartition {
            vertex_count,
            elements,
            coloring: None,
        };
        p.coloring = two_coloring(&p.root().0);
        p
    }

    /// The two elements holding each vertex.
    pub fn memberships(&self) -> Vec<Vec<usize>> {
        let mut m = vec![Vec::new(); self.vertex_count];
        for (i, e) in self.elements.iter().enumerate() {
            for &v in e.vertices() {
                if v < self.vertex_count {
                    m[v].push(i);
                }
            }
        }
        m
    }

    /// Root graph: one vertex per element, and host vertex `v` becomes the
    /// edge joining its two elements. Assumes `self` is valid.
    pub fn root(&self) -> (Graph, EdgeVertexMap) {
        let pairs: Vec<(usize, usize)> = self.memberships().into_iter().map(|m| (m[0], m[1])).collect();
        let root = Graph::from_edges(self.elements.len(), pairs.iter().copied())
            .expect("a valid Krausz partition has a simple root");
        let map = EdgeVertexMap::new(pairs).expect("distinct root edges");
        (root, map)
    }

    pub fn is_two_colorable(&self) -> bool {
        self.coloring.is_some()
    }

    /// Re-checks the three defining conditions against `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        if self.vertex_count != n {
            return false;
        }
        if self
            .elements
            .iter()
            .any(|e| e.is_empty() || e.vertices().iter().any(|&v| v >= n) || !g.is_clique(e.vertices()))
        {
            return false;
        }
        if self.memberships().iter().any(|m| m.len() != 2) {
            return false;
        }
        let mut count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for e in &self.elements {
            for pair in e.edges() {
                *count.entry(pair).or_default() += 1;
            }
        }
        count.len() == g.edge_count() && count.values().all(|&c| c == 1)
    }
}

pub fn find_krausz_partition(g: &Graph) -> ClassifyResult<Option<KrauszPartition>> {
    find_krausz_partition_with(g, &Limits::default(), false)
}

/// Complete search for a Krausz partition; with `require_two_colorable`
/// only partitions with a bipartite root are accepted.
///
/// The first unassigned edge `uv` is always covered next, by `{u, v}` plus
/// a clique of common neighbours whose connecting edges are all still
/// unassigned. Larger elements are tried first. A vertex that reaches two
/// elements must have no unassigned edges left, and a vertex in one
/// element must have its unassigned neighbours forming a clique (they all
/// go into its second element). Vertices left in one element at the end
/// receive a singleton; isolated vertices receive two.
pub fn find_krausz_partition_with(
    g: &Graph,
    limits: &Limits,
    require_two_colorable: bool,
) -> ClassifyResult<Option<KrauszPartition>> {
    let n = g.vertex_count();
    if n > limits.krausz_vertices {
        return Err(GraphError::TooLarge {
            operation: "Krausz partition search",
            vertex_count: n,
            cap: limits.krausz_vertices,
        }
        .into());
    }
    let mut s = Search {
        g,
        assigned: vec![vec![false; n]; n],
        members: vec![0; n],
        elements: Vec::new(),
        require_two_colorable,
        found: None,
    };
    s.run();
    Ok(s.found)
}

struct Search<'a> {
    g: &'a Graph,
    assigned: Vec<Vec<bool>>,
    members: Vec<u8>,
    elements: Vec<Vec<usize>>,
    require_two_colorable: bool,
    found: Option<KrauszPartition>,
}

impl Search<'_> {
    fn free(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.g
            .neighbors(u)
            .iter()
            .copied()
            .filter(move |&w| !self.assigned[u][w])
    }

    fn first_free_edge(&self) -> Option<(usize, usize)> {
        (0..self.g.vertex_count()).find_map(|u| self.free(u).find(|&w| w > u).map(|w| (u, w)))
    }

    fn run(&mut self) -> bool {
        let Some((u, v)) = self.first_free_edge() else {
            return self.finish();
        };
        if self.members[u] >= 2 || self.members[v] >= 2 {
            return false;
        }
        let pool: Vec<usize> = self
            .free(u)
            .filter(|&w| w != v && self.assigned_free(v, w) && self.members[w] < 2)
            .collect();
        let mut candidates = Vec::new();
        cliques_within(self, &pool, 0, &mut Vec::new(), &mut candidates);
        candidates.sort_by_key(|c: &Vec<usize>| std::cmp::Reverse(c.len()));
        for extra in candidates {
            let mut element = vec![u, v];
            element.extend(extra);
            element.sort_unstable();
            self.set(&element, true);
            if self.consistent(&element) && self.run() {
                return true;
            }
            self.set(&element, false);
        }
        false
    }

    fn assigned_free(&self, a: usize, b: usize) -> bool {
        self.g.has_edge(a, b) && !self.assigned[a][b]
    }

    fn set(&mut self, element: &[usize], on: bool) {
        for (i, &a) in element.iter().enumerate() {
            for &b in &element[i + 1..] {
                self.assigned[a][b] = on;
                self.assigned[b][a] = on;
            }
            if on {
                self.members[a] += 1;
            } else {
                self.members[a] -= 1;
            }
        }
        if on {
            self.elements.push(element.to_vec());
        } else {
            self.elements.pop();
        }
    }

    /// Local conditions around the vertices of a freshly added element.
    fn consistent(&self, element: &[usize]) -> bool {
        element.iter().all(|&a| {
            let rest: Vec<usize> = self.free(a).collect();
            match self.members[a] {
                2 => rest.is_empty(),
                1 => rest
                    .iter()
                    .enumerate()
                    .all(|(i, &x)| rest[i + 1..].iter().all(|&y| self.assigned_free(x, y))),
                _ => unreachable!("vertex in an added element has a membership"),
            }
        })
    }

    fn finish(&mut self) -> bool {
        let n = self.g.vertex_count();
        let mut elements: Vec<Polygon> = self.elements.iter().cloned().map(Polygon::new).collect();
        for v in 0..n {
            for _ in self.members[v]..2 {
                elements.push(Polygon::new(vec![v]));
            }
        }
        let p = KrauszPartition::new(n, elements);
        if self.require_two_colorable && !p.is_two_colorable() {
            return false;
        }
        self.found = Some(p);
        true
    }
}

/// All cliques (including the empty one) inside `pool[from..]` using only
/// unassigned edges, appended to `out`.
fn cliques_within(s: &Search, pool: &[usize], from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    out.push(cur.clone());
    for i in from..pool.len() {
        let w = pool[i];
        if cur.iter().all(|&c| s.assigned_free(c, w)) {
            cur.push(w);
            cliques_within(s, pool, i + 1, cur, out);
            cur.pop();
        }
    }
}

/// The root graph of a line graph, via a Krausz partition. Roots with no
/// edges for isolated host vertices are included as isolated root edges.
pub fn root_graph(g: &Graph) -> ClassifyResult<Option<(Graph, EdgeVertexMap)>> {
    root_graph_with(g, &Limits::default())
}

pub fn root_graph_with(g: &Graph, limits: &Limits) -> ClassifyResult<Option<(Graph, EdgeVertexMap)>> {
    let Some(p) = find_krausz_partition_with(g, limits, false)? else {
        return Ok(None);
    };
    let (root, map) = p.root();
    if !map.certifies(&root, g) {
        return Err(ClassifyError::Inconsistent(
            "root graph does not reproduce the input".into(),
        ));
    }
    Ok(Some((root, map)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{are_isomorphic, beineke, enumerate, line_graph, named_graph};

    /// Exhaustive oracle: try every family of cliques (as subsets of the
    /// list of all nonempty cliques) of total size 2N.
    fn brute_force_has_krausz(g: &Graph) -> bool {
        let n = g.vertex_count();
        let cliques: Vec<Vec<usize>> = (1u32..1 << n)
            .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect::<Vec<_>>())
            .filter(|c| g.is_clique(c))
            .collect();
        fn rec(
            g: &Graph,
            cliques: &[Vec<usize>],
            i: usize,
            mult: &mut Vec<u8>,
            chosen: &mut Vec<usize>,
        ) -> bool {
            if mult.iter().all(|&m| m == 2) {
                let mut seen = std::collections::BTreeSet::new();
                for &c in chosen.iter() {
                    let cl = &cliques[c];
                    for (a, &x) in cl.iter().enumerate() {
                        for &y in &cl[a + 1..] {
                            if !seen.insert((x, y)) {
                                return false;
                            }
                        }
                    }
                }
                return seen.len() == g.edge_count();
            }
            if i == cliques.len() {
                return false;
            }
            let c = &cliques[i];
            // a singleton may be used twice (isolated vertex)
            let max_copies = if c.len() == 1 { 2 } else { 1 };
            for copies in (1..=max_copies).rev() {
                if c.iter().all(|&v| mult[v] as usize + copies <= 2) {
                    for &v in c {
                        mult[v] += copies as u8;
                    }
                    for _ in 0..copies {
                        chosen.push(i);
                    }
                    let ok = rec(g, cliques, i + 1, mult, chosen);
                    for _ in 0..copies {
                        chosen.pop();
                    }
                    for &v in c {
                        mult[v] -= copies as u8;
                    }
                    if ok {
                        return true;
                    }
                }
            }
            rec(g, cliques, i + 1, mult, chosen)
        }
        rec(g, &cliques, 0, &mut vec![0; n], &mut Vec::new())
    }

    #[test]
    fn examples() {
        let fig1 = named_graph("fig1").unwrap();
        let p = find_krausz_partition(&fig1).unwrap().unwrap();
        assert!(p.is_valid_for(&fig1));
        assert!(find_krausz_partition(&named_graph("claw").unwrap())
            .unwrap()
            .is_none());
        let k3 = Graph::complete(3);
        let p = find_krausz_partition(&k3).unwrap().unwrap();
        assert_eq!(p.elements.len(), 4);
        assert!(p.is_valid_for(&k3));
    }

    #[test]
    fn beineke_graphs_have_no_partition() {
        for k in 1..=9 {
            assert!(
                find_krausz_partition(&beineke(k).unwrap()).unwrap().is_none(),
                "beineke({k})"
            );
        }
    }

    #[test]
    fn agrees_with_exhaustive_oracle() {
        for g in enumerate::small_graphs(6) {
            let found = find_krausz_partition(&g).unwrap();
            if let Some(p) = &found {
                assert!(p.is_valid_for(&g));
            }
            assert_eq!(
                found.is_some(),
                brute_force_has_krausz(&g),
                "{:?}",
                g.edges().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn root_round_trip() {
        for name in ["fig1", "cycle(5)", "complete(3)", "cycle(4)", "rook(2,3)"] {
            let g = named_graph(name).unwrap();
            let (root, map) = root_graph(&g).unwrap().unwrap();
            let (line, _) = line_graph(&root).unwrap();
            assert!(are_isomorphic(&line, &g).unwrap(), "{name}");
            assert!(map.certifies(&root, &g));
        }
        let (root, _) = root_graph(&named_graph("cycle(5)").unwrap()).unwrap().unwrap();
        assert!(are_isomorphic(&root, &named_graph("cycle(5)").unwrap()).unwrap());
        let (root, _) = root_graph(&named_graph("fig1").unwrap()).unwrap().unwrap();
        assert!(two_coloring(&root).is_none());
    }

    #[test]
    fn bipartite_requirement() {
        // the triangle has both a bipartite (claw) and a non-bipartite root
        let p = find_krausz_partition_with(&Graph::complete(3), &Limits::default(), true)
            .unwrap()
            .unwrap();
        assert!(p.is_two_colorable());
        let fig1 = named_graph("fig1").unwrap();
        assert!(find_krausz_partition_with(&fig1, &Limits::default(), true)
            .unwrap()
            .is_none());
    }

    #[test]
    fn cap() {
        assert!(find_krausz_partition(&Graph::empty(41)).is_err());
    }
}
