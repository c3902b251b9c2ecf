use proptest::prelude::*;

use sqw::classify::{classify_graph, ClassLabel};
use sqw::graph::{clique_graph, is_diamond_free, maximal_cliques, two_coloring, Graph};
use sqw::search::{fit_line, peak};
use sqw::tessellation::{
    build_two_tessellation, is_two_tessellable, maximal_cliques_inside_polygons, union_covers_edges,
    validate_pair, TessellationError,
};

/// Connected graphs on 2..=8 vertices: a random spanning tree plus random
/// extra edges.
fn connected_graph() -> impl Strategy<Value = Graph> {
    (2usize..=8)
        .prop_flat_map(|n| {
            let parents = (1..n).map(|v| 0..v).collect::<Vec<_>>();
            (
                Just(n),
                parents,
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
            )
        })
        .prop_map(|(n, parents, extra)| {
            let mut g = Graph::empty(n);
            for (i, &p) in parents.iter().enumerate() {
                g.add_edge(p, i + 1).unwrap();
            }
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if extra[k] && !g.has_edge(u, v) {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
}

proptest! {
    #[test]
    fn built_pairs_are_valid(g in connected_graph()) {
        match build_two_tessellation(&g) {
            Ok(pair) => {
                prop_assert!(validate_pair(&g, &pair).is_ok());
                prop_assert!(union_covers_edges(&g, &pair).covered);
                let cliques = maximal_cliques(&g).unwrap();
                prop_assert!(maximal_cliques_inside_polygons(&cliques, &pair));
            }
            Err(TessellationError::NotTwoTessellable) => prop_assert!(!is_two_tessellable(&g).unwrap()),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn class_evidence_rechecks(g in connected_graph()) {
        let ev = classify_graph(&g).unwrap();
        prop_assert!(ev.recheck(&g));
        if matches!(ev.label, ClassLabel::Class2b | ClassLabel::Class2bPrime) {
            let k = clique_graph(&g).unwrap();
            prop_assert!(is_diamond_free(&g) && two_coloring(&k.graph).is_some());
        }
    }

    #[test]
    fn line_fit_recovers_slope(slope in -3.0f64..3.0, intercept in -5.0f64..5.0, k in 3usize..12) {
        let xs: Vec<f64> = (0..k).map(|i| i as f64 * 0.7 + 1.0).collect();
        let ys: Vec<f64> = xs.iter().map(|x| intercept + slope * x).collect();
        let f = fit_line(&xs, &ys).unwrap();
        prop_assert!((f.slope - slope).abs() < 1e-9);
        prop_assert!((f.intercept - intercept).abs() < 1e-9);
    }

    #[test]
    fn peak_is_a_local_maximum(series in proptest::collection::vec(0.0f64..1.0, 3..40)) {
        if let Ok(pk) = peak(&series) {
            prop_assert!(pk.t > 0 && pk.p == series[pk.t]);
            prop_assert!(pk.p > series[0] && pk.p > series[pk.t - 1]);
            let next = series[pk.t..].iter().find(|&&x| x != pk.p);
            prop_assert!(next.is_none_or(|&x| x < pk.p));
        }
    }
}
