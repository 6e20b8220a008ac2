//! The acceptance gate: one test per criterion, each printing a single
//! `criterion N: PASS` line when it holds. Tolerances are pinned here in
//! code, not read from any configuration.

use dls_cli::engine;
use dls_cli::RunConfig;
use dls_core::bounds::{self, BoundContext, LemmaId, TheoremId};
use dls_core::dlap;
use dls_core::eigen::{self, SymmetricMatrix};
use dls_core::families::{self, FamilySpec};
use dls_core::g6;
use dls_core::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::process::Command;

const EIG_TOL: f64 = 1e-8;
const EQ_TOL: f64 = 1e-6;

fn connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    g6::enumerate_labeled_connected(n).unwrap()
}

/// Criterion 1: exhaustive audit over every labeled connected graph of
/// orders 4, 5 and 6 reports zero violations across the full registry.
#[test]
fn criterion_1_exhaustive_audit() {
    let expected = [38usize, 728, 26704];
    for (i, n) in (4..=6usize).enumerate() {
        let report = engine::enumerate_verify(n, RunConfig::enumerate(n)).unwrap();
        assert_eq!(report.summary.graphs_scanned, expected[i], "n = {n}");
        assert!(
            report.summary.violations.is_empty(),
            "n = {n}: {:?}",
            report.summary.violations.first()
        );
        assert_eq!(report.summary.equality_family_mismatches, 0, "n = {n}");
    }
    // the shipped binary agrees on exit status
    let status = Command::new(env!("CARGO_BIN_EXE_dls"))
        .args(["enumerate", "4"])
        .output()
        .unwrap();
    assert!(status.status.success(), "{status:?}");
    println!("criterion 1: PASS");
}

/// Criterion 1, optional extension: order 7 (~1.87M graphs).
#[test]
#[ignore = "order-7 exhaustive audit; run with --ignored"]
fn criterion_1_order_7() {
    let report = engine::enumerate_verify(7, RunConfig::enumerate(7)).unwrap();
    assert_eq!(report.summary.graphs_scanned, 1_866_256);
    assert!(report.summary.violations.is_empty());
    println!("criterion 1 (n = 7): PASS");
}

/// Criterion 2: at orders up to 6, the equality set of each characterized
/// bound coincides exactly with its extremal family set.
#[test]
fn criterion_2_equality_characterizations() {
    let characterized = [
        TheoremId::T3_1L,
        TheoremId::C3_2,
        TheoremId::T3_4L,
        TheoremId::C3_5,
        TheoremId::T3_6,
        TheoremId::C3_7,
        TheoremId::L2_2,
        TheoremId::T4_6,
        TheoremId::T4_9,
    ];
    for n in 2..=6usize {
        for g in connected_graphs(n) {
            let a = dlap::analyze(&g).unwrap();
            let ctx = BoundContext::new(&g);
            for id in characterized {
                let check = bounds::evaluate_bound_with(id, &a, &ctx);
                if check.applicable {
                    assert_eq!(check.equality, check.slack.abs() <= EQ_TOL);
                    assert_eq!(
                        check.consistent,
                        Some(true),
                        "{id} on {g:?}: equality = {}, family = {:?}, slack = {}",
                        check.equality,
                        check.equality_family_expected,
                        check.slack
                    );
                }
            }
        }
    }
    println!("criterion 2: PASS");
}

/// Criterion 3: closed-form complete multipartite spectra match numerics for
/// every partition up to order 12, plus the fixed spread anchors.
#[test]
fn criterion_3_closed_form_spectra() {
    fn partitions(n: usize) -> Vec<Vec<usize>> {
        fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if rest == 0 {
                if prefix.len() >= 2 {
                    out.push(prefix.clone());
                }
                return;
            }
            for next in (1..=max.min(rest)).rev() {
                prefix.push(next);
                rec(rest - next, next, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
    for n in 2..=12usize {
        for parts in partitions(n) {
            let g = families::generate(&FamilySpec::CompleteMultipartite(parts.clone())).unwrap();
            let expected = families::multipartite_closed_form_spectrum(&parts).unwrap();
            let a = dlap::analyze(&g).unwrap();
            for (e, v) in expected.values.iter().zip(&a.spectrum.values) {
                assert!((e - v).abs() <= 1e-8, "parts {parts:?}");
            }
        }
    }
    let dls = |spec: &FamilySpec| dlap::analyze(&families::generate(spec).unwrap()).unwrap().dls;
    assert!(dls(&FamilySpec::Complete(8)).abs() <= 1e-9);
    assert!((dls(&FamilySpec::Star(8)) - 7.0).abs() <= 1e-9);
    assert!((dls(&FamilySpec::CompleteBipartite(4, 4)) - 4.0).abs() <= 1e-9);
    assert!((dls(&FamilySpec::KnMinusE(8)) - 2.0).abs() <= 1e-9);
    assert!((dls(&FamilySpec::CompleteMultipartite(vec![3, 3, 3])) - 3.0).abs() <= 1e-9);
    println!("criterion 3: PASS");
}

/// Criterion 4: the spectral identity suite holds on every analyzed graph of
/// order up to 6.
#[test]
fn criterion_4_identity_suite() {
    for n in 2..=6usize {
        for g in connected_graphs(n) {
            // analyze fails fast when any identity drifts
            let a = dlap::analyze(&g).unwrap();
            assert!(a.trace_identity_err <= EIG_TOL);
            assert!(a.sq_identity_err <= EIG_TOL);
            assert!(a.spectrum.values[n - 1] >= -1e-8);
            let tr_max = a.summary.tr_max as f64;
            assert!(a.partial_1 >= tr_max + 1.0 - 1e-8);
            assert!(a.partial_1 <= 2.0 * tr_max + 1e-8);
        }
    }
    println!("criterion 4: PASS");
}

/// Criterion 5: edge-deletion monotonicity on 200 seeded random (G, e) pairs
/// with n in [5, 12], m >= n and G - e connected.
#[test]
fn criterion_5_edge_deletion_monotonicity() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_d15c);
    let mut checked = 0usize;
    while checked < 200 {
        let n = rng.gen_range(5..=12usize);
        // random attachment tree plus extra edges to push m past n
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v, rng.gen_range(0..v))).collect();
        for _ in 0..rng.gen_range(2..=2 * n) {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v {
                edges.push((u, v));
            }
        }
        let g = Graph::from_edge_list(n, &edges).unwrap();
        if g.edge_count() < n {
            continue;
        }
        let all_edges = g.edges();
        let (u, v) = all_edges[rng.gen_range(0..all_edges.len())];
        if !g.delete_edge(u, v).unwrap().is_connected() {
            continue;
        }
        let a = dlap::analyze(&g).unwrap();
        let check = bounds::verify_lemma_with(LemmaId::L2_5, &a, &g, Some((u, v))).unwrap();
        assert!(check.passed, "{g:?} minus ({u}, {v}): {}", check.detail);
        checked += 1;
    }
    println!("criterion 5: PASS");
}

/// Criterion 6: on every diameter-2 graph of order up to 6 the nonzero
/// distance Laplacian spectrum equals {2n - mu_i} as multisets.
#[test]
fn criterion_6_diameter_two_laplacian_relation() {
    let mut diam2 = 0usize;
    for n in 2..=6usize {
        for g in connected_graphs(n) {
            let a = dlap::analyze(&g).unwrap();
            if a.summary.diameter > 2 {
                continue;
            }
            diam2 += 1;
            let check = bounds::verify_lemma_with(LemmaId::L4_3, &a, &g, None).unwrap();
            assert!(check.passed, "{g:?}: {}", check.detail);
        }
    }
    assert!(diam2 > 1000, "hypothesis class unexpectedly small: {diam2}");
    println!("criterion 6: PASS");
}

/// Criterion 7: the all-pairs 2x2 interlacing bound, the diametral-path
/// bound and the diameter-2 independence bound hold over all orders up to 6.
#[test]
fn criterion_7_interlacing_audit() {
    for n in 2..=6usize {
        for g in connected_graphs(n) {
            let a = dlap::analyze(&g).unwrap();
            let ctx = BoundContext::new(&g);
            for u in 0..n {
                for v in (u + 1)..n {
                    let bound = dlap::two_by_two_interlacing_bound(
                        a.summary.tr[u],
                        a.summary.tr[v],
                        a.summary.dist(u, v),
                    );
                    assert!(bound <= a.partial_1 + 1e-8, "{g:?} pair ({u}, {v})");
                }
            }
            let d = a.summary.diameter as f64;
            assert!(
                a.partial_1 >= (2.0 * n as f64 + d * d - 2.0 * d + 1.0) / 2.0 - 1e-8,
                "{g:?}"
            );
            if a.summary.diameter == 2 {
                assert!(a.partial_1 >= (n + ctx.alpha) as f64 - 1e-8, "{g:?}");
            }
        }
    }
    println!("criterion 7: PASS");
}

/// Criterion 8: eigensolver unit gates, including 1000 seeded random
/// symmetric matrices up to order 32 with no iteration-limit events.
#[test]
fn criterion_8_eigensolver_gates() {
    for n in 1..=16usize {
        let mut m = SymmetricMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, (i as f64) - 3.5);
        }
        let s = eigen::symmetric_eigenvalues(&m).unwrap();
        let mut expected: Vec<f64> = (0..n).map(|i| (i as f64) - 3.5).collect();
        expected.sort_by(|a, b| b.partial_cmp(a).unwrap());
        for (e, v) in expected.iter().zip(&s.values) {
            assert!((e - v).abs() <= 1e-12);
        }
    }
    let mut m = SymmetricMatrix::zeros(2);
    m.set(0, 0, 3.0);
    m.set(1, 1, 3.0);
    m.set_sym(0, 1, 2.0);
    let s = eigen::symmetric_eigenvalues(&m).unwrap();
    assert!((s.values[0] - 5.0).abs() <= 1e-12 && (s.values[1] - 1.0).abs() <= 1e-12);

    let mut rng = ChaCha8Rng::seed_from_u64(0xe16e_501e);
    for trial in 0..1000 {
        let n = rng.gen_range(1..=32usize);
        let mut m = SymmetricMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                m.set_sym(i, j, rng.gen_range(-100.0..100.0));
            }
        }
        // any IterationLimit surfaces as an Err here
        let s = eigen::symmetric_eigenvalues(&m)
            .unwrap_or_else(|e| panic!("trial {trial}: {e}"));
        let scale = 1.0f64.max(m.frobenius_sq());
        assert!((s.sum() - m.trace()).abs() <= 1e-9 * scale, "trial {trial}");
        assert!((s.sum_sq() - m.frobenius_sq()).abs() <= 1e-9 * scale, "trial {trial}");
    }
    println!("criterion 8: PASS");
}

/// Criterion 9: graph6 round-trip over the whole order-6 enumeration, the
/// fixed vectors and the malformed-input suite.
#[test]
fn criterion_9_graph6() {
    for g in connected_graphs(6) {
        let line = g6::write_graph6(&g).unwrap();
        assert_eq!(g6::parse_graph6(line.as_bytes()).unwrap(), g);
    }
    let k2 = g6::parse_graph6(b"A_").unwrap();
    assert_eq!((k2.n(), k2.edge_count()), (2, 1));
    let k4 = g6::parse_graph6(b"C~").unwrap();
    assert_eq!((k4.n(), k4.edge_count()), (4, 6));
    assert!(matches!(g6::parse_graph6(b"A\x20"), Err(g6::G6Error::BadChar { .. })));
    assert!(matches!(g6::parse_graph6(b"C"), Err(g6::G6Error::TruncatedLine { .. })));
    assert!(matches!(g6::parse_graph6(b"Ao"), Err(g6::G6Error::NonzeroPadding)));
    println!("criterion 9: PASS");
}

/// Criterion 10: independence and chromatic numbers agree with brute-force
/// oracles on every connected graph of order up to 7.
#[test]
fn criterion_10_alpha_chi_oracles() {
    fn oracle_alpha(g: &Graph) -> usize {
        let n = g.n();
        (0u32..(1 << n))
            .filter(|mask| {
                let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                verts
                    .iter()
                    .enumerate()
                    .all(|(i, &u)| verts[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap()
    }
    fn oracle_chi(g: &Graph, independent: &mut [bool], chi: &mut [usize]) -> usize {
        let n = g.n();
        let full = (1usize << n) - 1;
        for mask in 0..=full {
            let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            independent[mask] = verts
                .iter()
                .enumerate()
                .all(|(i, &u)| verts[i + 1..].iter().all(|&v| !g.has_edge(u, v)));
        }
        chi[0] = 0;
        for mask in 1..=full {
            let low = mask & mask.wrapping_neg();
            chi[mask] = usize::MAX;
            let mut sub = mask;
            loop {
                if sub & low != 0 && independent[sub] && chi[mask ^ sub] != usize::MAX {
                    chi[mask] = chi[mask].min(chi[mask ^ sub] + 1);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
        }
        chi[full]
    }
    let mut independent = vec![false; 1 << 7];
    let mut chi_dp = vec![0usize; 1 << 7];
    for n in 2..=7usize {
        for g in connected_graphs(n) {
            assert_eq!(g.independence_number(), oracle_alpha(&g), "{g:?}");
            assert_eq!(
                g.chromatic_number().unwrap(),
                oracle_chi(&g, &mut independent, &mut chi_dp),
                "{g:?}"
            );
        }
    }
    println!("criterion 10: PASS");
}
