//! Randomized structural invariants over connected graphs and symmetric
//! matrices.

use dls_core::bounds::{self, LemmaId};
use dls_core::dlap;
use dls_core::eigen::{self, SymmetricMatrix};
use dls_core::g6;
use dls_core::graph::Graph;
use proptest::prelude::*;

/// Connected graph on `n` vertices: a random attachment tree (vertex `i`
/// joins a uniformly chosen earlier vertex) plus extra random edges.
fn connected_graph() -> impl Strategy<Value = Graph> {
    (2usize..=9)
        .prop_flat_map(|n| {
            let parents = proptest::collection::vec(any::<prop::sample::Index>(), n - 1);
            let extra = proptest::collection::vec((any::<prop::sample::Index>(), any::<prop::sample::Index>()), 0..12);
            (Just(n), parents, extra)
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, p)| (i + 1, p.index(i + 1)))
                .collect();
            for (a, b) in extra {
                let u = a.index(n);
                let v = b.index(n);
                if u != v {
                    edges.push((u, v));
                }
            }
            Graph::from_edge_list(n, &edges).expect("tree attachment keeps the graph valid")
        })
}

fn symmetric_matrix() -> impl Strategy<Value = SymmetricMatrix> {
    (1usize..=8)
        .prop_flat_map(|n| {
            proptest::collection::vec(-10.0f64..10.0, n * n).prop_map(move |vals| {
                let mut m = SymmetricMatrix::zeros(n);
                for i in 0..n {
                    for j in i..n {
                        m.set_sym(i, j, vals[i * n + j]);
                    }
                }
                m
            })
        })
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in connected_graph()) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn transmissions_sum_to_twice_wiener(g in connected_graph()) {
        let s = g.distance_summary().unwrap();
        let tr_sum: u64 = (0..g.n()).map(|v| s.tr[v]).sum();
        prop_assert_eq!(tr_sum, 2 * s.wiener);
    }

    #[test]
    fn distances_satisfy_triangle_inequality(g in connected_graph()) {
        let s = g.distance_summary().unwrap();
        let n = g.n();
        for u in 0..n {
            for v in 0..n {
                prop_assert_eq!(s.dist(u, v) == 1, g.has_edge(u, v));
                for w in 0..n {
                    prop_assert!(s.dist(u, w) <= s.dist(u, v) + s.dist(v, w));
                }
            }
        }
    }

    #[test]
    fn diameter_two_means_common_neighbors(g in connected_graph()) {
        let s = g.distance_summary().unwrap();
        let n = g.n();
        let all_close = (0..n).all(|u| (0..n).all(|v| {
            u == v || g.has_edge(u, v) || (0..n).any(|w| g.has_edge(u, w) && g.has_edge(v, w))
        }));
        prop_assert_eq!(s.diameter <= 2, all_close);
    }

    #[test]
    fn graph6_round_trips(g in connected_graph()) {
        let line = g6::write_graph6(&g).unwrap();
        prop_assert_eq!(g6::parse_graph6(line.as_bytes()).unwrap(), g);
    }

    #[test]
    fn analysis_identities_hold(g in connected_graph()) {
        // analyze fails fast if any spectral identity drifts
        let a = dlap::analyze(&g).unwrap();
        prop_assert!(a.spectrum.values[g.n() - 1].abs() <= 1e-6);
        prop_assert!(a.dls >= -1e-8);
        let gersh = bounds::verify_lemma_with(LemmaId::GERSH, &a, &g, None).unwrap();
        prop_assert!(gersh.passed, "{}", gersh.detail);
    }

    #[test]
    fn cluster_multiplicities_partition_the_spectrum(g in connected_graph()) {
        let a = dlap::analyze(&g).unwrap();
        let clusters = eigen::cluster_multiplicities(&a.spectrum, 1e-6);
        let total: usize = clusters.iter().map(|(_, m)| m).sum();
        prop_assert_eq!(total, g.n());
    }

    #[test]
    fn block_diagonal_spectra_merge(a in symmetric_matrix(), b in symmetric_matrix()) {
        let (na, nb) = (a.n(), b.n());
        let mut block = SymmetricMatrix::zeros(na + nb);
        for i in 0..na {
            for j in i..na {
                block.set_sym(i, j, a.get(i, j));
            }
        }
        for i in 0..nb {
            for j in i..nb {
                block.set_sym(na + i, na + j, b.get(i, j));
            }
        }
        let mut expected = eigen::symmetric_eigenvalues(&a).unwrap().values;
        expected.extend(eigen::symmetric_eigenvalues(&b).unwrap().values);
        expected.sort_by(|x, y| y.partial_cmp(x).unwrap());
        let got = eigen::symmetric_eigenvalues(&block).unwrap().values;
        let scale = 1.0 + expected.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        for (e, g) in expected.iter().zip(&got) {
            prop_assert!((e - g).abs() <= 1e-7 * scale, "{expected:?} vs {got:?}");
        }
    }

    #[test]
    fn eigenvalue_trace_and_frobenius(m in symmetric_matrix()) {
        let s = eigen::symmetric_eigenvalues(&m).unwrap();
        let scale = 1.0f64.max(m.frobenius_sq());
        prop_assert!((s.sum() - m.trace()).abs() <= 1e-9 * scale);
        prop_assert!((s.sum_sq() - m.frobenius_sq()).abs() <= 1e-9 * scale);
    }
}
