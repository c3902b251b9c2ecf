//! Named graphs with frozen vertex numbering.
//!
//! | name                 | vertices | numbering                                            |
//! |----------------------|----------|------------------------------------------------------|
//! | `complete(n)`        | n        | `0..n`                                               |
//! | `cycle(n)`, n >= 3   | n        | `i ~ i+1 mod n`                                      |
//! | `path(n)`, n >= 1    | n        | `i ~ i+1`                                            |
//! | `complete_bipartite(a,b)` | a+b | parts `0..a` and `a..a+b`                          |
//! | `rook(a,b)`          | a*b      | cell `(r, c)` is `r*b + c`; same row or column adjacent |
//! | `claw`               | 4        | centre 0, leaves 1, 2, 3                             |
//! | `diamond`            | 4        | `K4` on 0..3 minus the edge {0, 3}                   |
//! | `hajos`              | 6        | central triangle 0,1,2; 3~{0,1}, 4~{1,2}, 5~{0,2}    |
//! | `barbell`            | 6        | triangles {0,1,2} and {3,4,5} joined by edge {2,3}   |
//! | `fig1`               | 5        | `K4` on {0,1,2,3} plus 4~{2,3}                       |
//! | `beineke(k)`, 1..=9  | 4..6     | see [`beineke`]                                      |

use super::{Graph, GraphError, GraphResult};

pub const BEINEKE_COUNT: usize = 9;

/// The nine minimal non-line graphs, numbered as follows:
///
/// 1. claw `K_{1,3}`;
/// 2. 5 vertices, 7 edges: two triangles sharing an edge whose apexes have
///    a common extra neighbour;
/// 3. `K5` minus an edge (two 4-cliques sharing a triangle);
/// 4. 6 vertices, 7 edges: two triangles sharing an edge, one pendant on
///    each apex;
/// 5. 6 vertices, 9 edges: a 4-clique and a triangle sharing an edge, plus
///    a pendant on the triangle apex;
/// 6. two 4-cliques sharing an edge;
/// 7. 6 vertices, 8 edges, whose clique graph is a 5-cycle;
/// 8. 6 vertices, 9 edges: a fan of three triangles with a fourth triangle
///    on the first blade;
/// 9. the wheel `W5` (hub 5 on the 5-cycle 0..4).
///
/// Graphs 2..=6 have 2-colourable clique graphs; 1, 7, 8 and 9 do not.
pub fn beineke(k: usize) -> GraphResult<Graph> {
    let (n, edges): (usize, &[(usize, usize)]) = match k {
        1 => (4, &[(0, 1), (0, 2), (0, 3)]),
        2 => (5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 4)]),
        3 => (
            5,
            &[
                (0, 1),
                (0, 3),
                (0, 4),
                (1, 2),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
                (3, 4),
            ],
        ),
        4 => (6, &[(0, 1), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (4, 5)]),
        5 => (
            6,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (1, 5),
                (2, 3),
                (2, 5),
                (4, 5),
            ],
        ),
        6 => (
            6,
            &[
                (0, 1),
                (0, 2),
                (0, 5),
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 5),
                (3, 4),
                (3, 5),
                (4, 5),
            ],
        ),
        7 => (
            6,
            &[(0, 1), (0, 4), (0, 5), (1, 2), (1, 5), (2, 3), (2, 5), (3, 4)],
        ),
        8 => (
            6,
            &[
                (0, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 2),
                (1, 3),
                (2, 3),
                (3, 4),
                (4, 5),
            ],
        ),
        9 => (
            6,
            &[
                (0, 1),
                (0, 4),
                (0, 5),
                (1, 2),
                (1, 5),
                (2, 3),
                (2, 5),
                (3, 4),
                (3, 5),
                (4, 5),
            ],
        ),
        _ => {
            return Err(GraphError::BadParams {
                name: "beineke".into(),
                reason: format!("index {k} not in 1..=9"),
            })
        }
    };
    Graph::from_edges(n, edges.iter().copied())
}

/// Looks up a catalog graph by name, e.g. `"cycle(5)"`, `"beineke(7)"`,
/// `"hajos"`. See the module documentation for numbering.
pub fn named_graph(name: &str) -> GraphResult<Graph> {
    let name = name.trim();
    let (base, params) = match name.split_once('(') {
        Some((base, rest)) => {
            let inner = rest.strip_suffix(')').ok_or_else(|| bad(name, "missing `)`"))?;
            let params = inner
                .split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| bad(name, &e.to_string()))?;
            (base.trim(), params)
        }
        None => (name, Vec::new()),
    };
    let arity = |k: usize| -> GraphResult<()> {
        if params.len() == k {
            Ok(())
        } else {
            Err(bad(name, &format!("expected {k} parameter(s)")))
        }
    };
    match base {
        "complete" => {
            arity(1)?;
            Ok(Graph::complete(params[0]))
        }
        "cycle" => {
            arity(1)?;
            let n = params[0];
            if n < 3 {
                return Err(bad(name, "a cycle needs at least 3 vertices"));
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        "path" => {
            arity(1)?;
            let n = params[0];
            if n == 0 {
                return Err(bad(name, "a path needs at least 1 vertex"));
            }
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        }
        "complete_bipartite" => {
            arity(2)?;
            let (a, b) = (params[0], params[1]);
            Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
        }
        "rook" => {
            arity(2)?;
            let (a, b) = (params[0], params[1]);
            let mut edges = Vec::new();
            for r in 0..a {
                for c in 0..b {
                    for c2 in c + 1..b {
                        edges.push((r * b + c, r * b + c2));
                    }
                    for r2 in r + 1..a {
                        edges.push((r * b + c, r2 * b + c));
                    }
                }
            }
            Graph::from_edges(a * b, edges)
        }
        "beineke" => {
            arity(1)?;
            beineke(params[0])
        }
        "claw" | "diamond" | "hajos" | "barbell" | "fig1" => {
            arity(0)?;
            let (n, edges): (usize, &[(usize, usize)]) = match base {
                "claw" => (4, &[(0, 1), (0, 2), (0, 3)]),
                "diamond" => (4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
                "hajos" => (
                    6,
                    &[
                        (0, 1),
                        (0, 2),
                        (1, 2),
                        (0, 3),
                        (1, 3),
                        (1, 4),
                        (2, 4),
                        (0, 5),
                        (2, 5),
                    ],
                ),
                "barbell" => (6, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]),
                _ => (
                    5,
                    &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)],
                ),
            };
            Graph::from_edges(n, edges.iter().copied())
        }
        _ => Err(GraphError::UnknownName(name.to_string())),
    }
}

fn bad(name: &str, reason: &str) -> GraphError {
    GraphError::BadParams {
        name: name.to_string(),
        reason: reason.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{are_isomorphic, enumerate, maximal_cliques};

    #[test]
    fn sizes() {
        let g = named_graph("hajos").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 9));
        let g = named_graph("fig1").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 8));
        let g = named_graph("rook(2,3)").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 9));
        assert!(are_isomorphic(&beineke(1).unwrap(), &named_graph("claw").unwrap()).unwrap());
    }

    #[test]
    fn errors() {
        assert!(matches!(named_graph("petersen"), Err(GraphError::UnknownName(_))));
        assert!(matches!(
            named_graph("cycle(2)"),
            Err(GraphError::BadParams { .. })
        ));
        assert!(matches!(
            named_graph("beineke(10)"),
            Err(GraphError::BadParams { .. })
        ));
        assert!(matches!(
            named_graph("cycle(x)"),
            Err(GraphError::BadParams { .. })
        ));
        assert!(matches!(
            named_graph("claw(1)"),
            Err(GraphError::BadParams { .. })
        ));
    }

    #[test]
    fn hajos_is_triangle_with_three_ears() {
        let g = named_graph("hajos").unwrap();
        let cliques = maximal_cliques(&g).unwrap();
        assert_eq!(cliques.len(), 4);
        assert!(cliques.iter().all(|c| c.len() == 3));
    }

    /// The catalog list must be exactly the minimal non-line graphs, found
    /// here by exhaustive search: graphs with no Krausz partition all of
    /// whose vertex-deleted subgraphs have one.
    #[test]
    fn beineke_list_is_the_set_of_minimal_non_line_graphs() {
        use crate::classify::find_krausz_partition;
        let is_line = |g: &Graph| find_krausz_partition(g).unwrap().is_some();
        let minimal: Vec<Graph> = enumerate::small_graphs(6)
            .into_iter()
            .filter(|g| !is_line(g))
            .filter(|g| {
                (0..g.vertex_count()).all(|v| {
                    let rest: Vec<usize> = (0..g.vertex_count()).filter(|&w| w != v).collect();
                    is_line(&g.induced_subgraph(&rest))
                })
            })
            .collect();
        assert_eq!(minimal.len(), BEINEKE_COUNT);
        for k in 1..=BEINEKE_COUNT {
            let b = beineke(k).unwrap();
            assert!(b.is_connected());
            let hits = minimal.iter().filter(|m| are_isomorphic(m, &b).unwrap()).count();
            assert_eq!(hits, 1, "beineke({k})");
        }
    }
}
