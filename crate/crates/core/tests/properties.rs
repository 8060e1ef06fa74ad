//! Randomised invariants over connected graphs.

use biclique_lab::biclique::{biclique_graph, enumerate_bicliques};
use biclique_lab::distance::{biclique_distance, verify_distance_formula};
use biclique_lab::graph::{canonical_form, isomorphic, parse_graph6, write_graph6, MAX_CANON_ORDER};
use biclique_lab::obstruction::classify;
use biclique_lab::Graph;
use proptest::prelude::*;

/// A random spanning tree plus random extra edges on `lo..=hi` vertices.
fn connected_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let parents = (1..n).map(|v| 0..v).collect::<Vec<_>>();
        let extra = proptest::collection::vec(any::<bool>(), n * (n - 1) / 2);
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let mut g = Graph::empty(n).unwrap();
            for (i, p) in parents.into_iter().enumerate() {
                g.add_edge(i + 1, p).unwrap();
            }
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if extra[k] && !g.has_edge(u, v) {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_round_trip(g in connected_graph(1, 40)) {
        let text = write_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn relabelling_preserves_canonical_form_and_kb(
        (g, p) in connected_graph(2, 10).prop_flat_map(|g| { let n = g.order(); (Just(g), permutation(n)) })
    ) {
        let h = g.relabel(&p).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        let (kb_g, _) = biclique_graph(&g).unwrap();
        let (kb_h, _) = biclique_graph(&h).unwrap();
        if kb_g.order() <= MAX_CANON_ORDER {
            prop_assert!(isomorphic(&kb_g, &kb_h).unwrap());
        } else {
            let (mut a, mut b) = (kb_g.degrees(), kb_h.degrees());
            a.sort_unstable();
            b.sort_unstable();
            prop_assert_eq!(a, b);
        }
        prop_assert_eq!(classify(&g).unwrap().failed_checks(), classify(&h).unwrap().failed_checks());
    }

    #[test]
    fn biclique_distance_is_a_semimetric(g in connected_graph(2, 9)) {
        let fam = enumerate_bicliques(&g).unwrap();
        let k = fam.len();
        let d: Vec<Vec<usize>> = (0..k)
            .map(|i| (0..k).map(|j| biclique_distance(&fam, i, j).unwrap()).collect())
            .collect();
        for (i, bi) in fam.bicliques().iter().enumerate() {
            prop_assert_eq!(d[i][i], 0);
            for (j, bj) in fam.bicliques().iter().enumerate() {
                prop_assert_eq!(d[i][j], d[j][i]);
                prop_assert_eq!(d[i][j] == 0, bi.intersects(bj));
            }
        }
    }

    #[test]
    fn kb_distances_follow_the_formula(g in connected_graph(2, 10)) {
        for r in verify_distance_formula(&g).unwrap() {
            prop_assert!(r.holds(), "{:?}", r);
        }
    }

    #[test]
    fn kb_distances_obey_the_triangle_inequality(g in connected_graph(2, 10)) {
        let (kb, _) = biclique_graph(&g).unwrap();
        let d = kb.distance_matrix();
        let k = kb.order();
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    prop_assert!(d[a][c].unwrap() <= d[a][b].unwrap() + d[b][c].unwrap());
                }
            }
        }
    }
}
