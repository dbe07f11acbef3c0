//! Cross-module invariants: flow-based connectivity against the exhaustive
//! oracle, generator connectivity across the parameter grid, and the
//! statistical contracts of the failure simulator.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use survnet_core::{
    brute_force_connectivity, cut_disconnects, exhaustive_survivability, generate,
    generate_bipartite, generate_harary, generate_hypercube, generate_sequential,
    local_connectivity, simulate, simulate_seq, validate_disjoint_paths, vertex_connectivity,
    vertex_connectivity_seq, FailureMode, GeneratorParams, Method, Topology, TrialConfig,
};

fn random_graph(rng: &mut ChaCha8Rng) -> Topology {
    let n = rng.random_range(4u32..=9);
    let p: f64 = rng.random_range(0.15..0.95);
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in (u + 1)..=n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Topology::new(n, edges, Method::External).unwrap()
}

#[test]
fn flow_connectivity_matches_the_brute_force_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for case in 0..200 {
        let t = random_graph(&mut rng);
        let report = vertex_connectivity(&t).unwrap();
        let oracle = brute_force_connectivity(&t).unwrap();
        assert_eq!(report.kappa, oracle, "case {case}: {t:?}");

        // certificates must hold up on independent re-checks
        match &report.witness_cut {
            Some(cut) if report.kappa > 0 => assert!(
                cut_disconnects(&t, cut),
                "case {case}: cut {cut:?} does not disconnect"
            ),
            Some(cut) => assert!(cut.is_empty(), "case {case}"),
            None => {
                let n = t.node_count() as u32;
                assert_eq!(report.kappa, n - 1, "case {case}: complete graph");
            }
        }
        let (s, u) = report.sample_pair;
        assert_eq!(
            report.sample_paths.len() as u32,
            report.kappa,
            "case {case}"
        );
        assert!(
            report.kappa == 0 || validate_disjoint_paths(&t, s, u, &report.sample_paths),
            "case {case}: invalid path family"
        );

        // kappa is bounded by the minimum degree
        let min_degree = t
            .nodes()
            .iter()
            .map(|&v| t.degree(v).unwrap())
            .min()
            .unwrap();
        assert!(report.kappa <= min_degree, "case {case}");
    }
}

#[test]
fn menger_consistency_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xa11);
    for _ in 0..40 {
        let t = random_graph(&mut rng);
        let kappa = vertex_connectivity(&t).unwrap().kappa;
        let nodes: Vec<u32> = t.nodes().to_vec();
        for (i, &s) in nodes.iter().enumerate() {
            for &u in &nodes[i + 1..] {
                let lc = local_connectivity(&t, s, u).unwrap();
                assert_eq!(lc.paths.len() as u32, lc.value);
                assert!(validate_disjoint_paths(&t, s, u, &lc.paths));
                if !t.has_edge(s, u) {
                    assert!(lc.value >= kappa, "pair ({s},{u}) below kappa");
                }
            }
        }
    }
}

#[test]
fn bipartite_connectivity_is_min_of_the_sides() {
    for n in 2..=10u32 {
        for k in 1..=(n - 1) {
            let t = generate_bipartite(&GeneratorParams::new(n, k).unwrap()).topology;
            let oracle = brute_force_connectivity(&t).unwrap();
            assert_eq!(oracle, k.min(n - k), "n={n} k={k}");
            assert_eq!(
                vertex_connectivity(&t).unwrap().kappa,
                oracle,
                "n={n} k={k}"
            );
        }
    }
}

#[test]
fn sequential_connectivity_meets_its_target() {
    for n in 2..=10u32 {
        for k in 1..=(n - 1) {
            let t = generate_sequential(&GeneratorParams::new(n, k).unwrap()).topology;
            assert_eq!(brute_force_connectivity(&t).unwrap(), k, "n={n} k={k}");
        }
    }
}

#[test]
fn harary_connectivity_meets_its_target_for_k_at_least_2() {
    // k = 1 is excluded: ceil(n/2) edges cannot connect n >= 4 nodes, so
    // the count-exact completion is honest about falling short there.
    for n in 3..=10u32 {
        for k in 2..=(n - 1) {
            let t = generate_harary(&GeneratorParams::new(n, k).unwrap()).topology;
            assert_eq!(brute_force_connectivity(&t).unwrap(), k, "n={n} k={k}");
        }
    }
}

#[test]
fn hypercube_connectivity_equals_its_dimension() {
    for dim in 1..=3u32 {
        let t = generate_hypercube(dim).unwrap().topology;
        assert_eq!(brute_force_connectivity(&t).unwrap(), dim, "dim {dim}");
    }
}

#[test]
fn failures_below_kappa_never_disconnect_generator_outputs() {
    for n in 4..=10u32 {
        for k in 2..=(n - 1) {
            for method in [Method::Bipartite, Method::Sequential, Method::Harary] {
                let t = generate(method, &GeneratorParams::new(n, k).unwrap())
                    .unwrap()
                    .topology;
                let kappa = vertex_connectivity(&t).unwrap().kappa;
                if kappa == 0 {
                    continue;
                }
                let f = (kappa - 1).min(n - 2);
                let report = simulate(
                    &t,
                    &TrialConfig {
                        mode: FailureMode::Node,
                        failures: f,
                        trials: 200,
                        seed: u64::from(n * 100 + k),
                    },
                )
                .unwrap();
                assert_eq!(
                    report.survived, report.trials,
                    "{method} n={n} k={k} f={f} disconnected below kappa"
                );
            }
        }
    }
}

#[test]
fn monte_carlo_converges_to_the_exhaustive_fraction() {
    // binomial three-sigma: at least 99 of 100 seeds must land within
    // 3*sqrt(p(1-p)/trials) of the exact fraction
    let t = generate_bipartite(&GeneratorParams::new(7, 3).unwrap()).topology;
    let exact = exhaustive_survivability(&t, 3, FailureMode::Node).unwrap();
    let p = exact.fraction();
    assert_eq!((exact.survived, exact.total), (34, 35));
    let trials = 10_000u64;
    let sigma = (p * (1.0 - p) / trials as f64).sqrt();
    let mut within = 0;
    for seed in 0..100u64 {
        let report = simulate(
            &t,
            &TrialConfig {
                mode: FailureMode::Node,
                failures: 3,
                trials,
                seed,
            },
        )
        .unwrap();
        if (report.fraction() - p).abs() <= 3.0 * sigma {
            within += 1;
        }
    }
    assert!(within >= 99, "only {within}/100 seeds within three sigma");
}

#[test]
fn parallel_and_sequential_paths_are_identical() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xbeef);
    for _ in 0..25 {
        let t = random_graph(&mut rng);
        assert_eq!(
            vertex_connectivity(&t).unwrap(),
            vertex_connectivity_seq(&t).unwrap()
        );
        let c = TrialConfig {
            mode: FailureMode::Link,
            failures: (t.edge_count() as u32).min(2),
            trials: 500,
            seed: 3,
        };
        assert_eq!(simulate(&t, &c).unwrap(), simulate_seq(&t, &c).unwrap());
    }
}

#[test]
fn generated_edge_lists_are_byte_stable() {
    for (method, n, k) in [
        (Method::Bipartite, 7u32, 3u32),
        (Method::Sequential, 9, 4),
        (Method::Harary, 11, 5),
        (Method::Hypercube, 8, 3),
    ] {
        let params = GeneratorParams::new(n, k).unwrap();
        let a = generate(method, &params).unwrap().topology;
        let b = generate(method, &params).unwrap().topology;
        assert_eq!(
            a.write_edge_list(k).unwrap(),
            b.write_edge_list(k).unwrap(),
            "{method}"
        );
    }
}
