#![allow(clippy::needless_range_loop)]

mod oracle;

use proptest::prelude::*;
use proptest::sample::subsequence;
use udim_core::canon::unicyclic_code;
use udim_core::generators::{random_unicyclic, random_unicyclic_stream, GeneratorSpec};
use udim_core::{
    all_pairs_distances, check_resolving_partition, check_resolving_set, metric_dimension_exact, parse_edge_list,
    partition_dimension_exact, validate_unicyclic, Graph, OrderedPartition, UnicyclicGraph,
};

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::from_edges(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (UnicyclicGraph, Vec<usize>)> {
    (3..=max_n, any::<u64>()).prop_flat_map(|(n, seed)| {
        let g = random_unicyclic(n, seed).unwrap();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn graph_and_labels(max_n: usize) -> impl Strategy<Value = (UnicyclicGraph, Vec<usize>)> {
    (3..=max_n, any::<u64>()).prop_flat_map(|(n, seed)| {
        (Just(random_unicyclic(n, seed).unwrap()), proptest::collection::vec(0..n, n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_graphs_are_unicyclic(n in 3usize..=40, seed: u64, stream in 0u64..1000) {
        let g = random_unicyclic_stream(n, seed, stream).unwrap();
        prop_assert_eq!(g.n(), n);
        prop_assert_eq!(g.graph().edge_count(), n);
        prop_assert!(g.cycle_len() >= 3);
        prop_assert!(validate_unicyclic(g.graph().clone()).is_ok());
        prop_assert_eq!(oracle::cycle_vertices(g.graph()).len(), g.cycle_len());
        let again = random_unicyclic_stream(n, seed, stream).unwrap();
        prop_assert_eq!(again.graph(), g.graph());
    }

    #[test]
    fn distances_match_floyd_warshall(n in 3usize..=25, seed: u64) {
        let g = random_unicyclic(n, seed).unwrap();
        let dm = g.distances();
        let reference = oracle::floyd(g.graph());
        for u in 0..n {
            for v in 0..n {
                prop_assert_eq!(dm.get(u, v), reference[u][v]);
                prop_assert_eq!(dm.get(u, v), dm.get(v, u));
            }
        }
    }

    #[test]
    fn edge_list_round_trips(n in 3usize..=30, seed: u64) {
        let g = random_unicyclic(n, seed).unwrap();
        let text = g.graph().to_edge_list();
        prop_assert_eq!(&parse_edge_list(&text).unwrap(), g.graph());
    }

    #[test]
    fn partition_check_ignores_part_order((g, labels) in graph_and_labels(12), rot in 0usize..12) {
        let dm = g.distances();
        let p = OrderedPartition::from_labels(&labels);
        let k = p.len();
        let order: Vec<usize> = (0..k).map(|i| (i + rot) % k).rev().collect();
        let q = p.permuted(&order);
        let a = check_resolving_partition(&dm, &p).unwrap();
        let b = check_resolving_partition(&dm, &q).unwrap();
        prop_assert_eq!(a.is_resolving(), b.is_resolving());
        // a twin pair shares its part and so is a twin pair of both orders
        prop_assert_eq!(a.twin(), b.twin());
        prop_assert_eq!(a.is_resolving(), oracle::resolves_partition(&oracle::floyd(g.graph()), p.parts()));
    }

    #[test]
    fn supersets_of_resolving_sets_resolve(n in 3usize..=14, seed: u64, extra in 0usize..14) {
        let g = random_unicyclic(n, seed).unwrap();
        let dm = g.distances();
        let (_, s) = metric_dimension_exact(&dm, 16).unwrap();
        let mut bigger = s.clone();
        bigger.push(extra % n);
        prop_assert!(check_resolving_set(&dm, &bigger).unwrap().is_resolving());
    }

    #[test]
    fn subsets_agree_with_oracle(n in 3usize..=12, seed: u64, s in subsequence((0..12).collect::<Vec<usize>>(), 0..=4)) {
        let g = random_unicyclic(n, seed).unwrap();
        let s: Vec<usize> = s.into_iter().filter(|&v| v < n).collect();
        let ours = check_resolving_set(&g.distances(), &s).unwrap();
        prop_assert_eq!(ours.is_resolving(), oracle::resolves_set(&oracle::floyd(g.graph()), &s));
        if let Some((u, v)) = ours.twin() {
            prop_assert!(u < v);
            prop_assert!(s.iter().all(|&w| g.distances().get(u, w) == g.distances().get(v, w)));
        }
    }

    #[test]
    fn dimensions_are_label_invariant((g, perm) in graph_and_perm(9)) {
        let h = validate_unicyclic(relabel(g.graph(), &perm)).unwrap();
        prop_assert_eq!(unicyclic_code(&g), unicyclic_code(&h));
        let (dg, dh) = (g.distances(), h.distances());
        prop_assert_eq!(metric_dimension_exact(&dg, 16).unwrap().0, metric_dimension_exact(&dh, 16).unwrap().0);
        prop_assert_eq!(partition_dimension_exact(&dg, 12).unwrap().0, partition_dimension_exact(&dh, 12).unwrap().0);
    }

    #[test]
    fn exact_witnesses_resolve(n in 3usize..=11, seed: u64) {
        let g = random_unicyclic(n, seed).unwrap();
        let d = oracle::floyd(g.graph());
        let (_, s) = metric_dimension_exact(&g.distances(), 16).unwrap();
        prop_assert!(oracle::resolves_set(&d, &s));
        let (p, part) = partition_dimension_exact(&all_pairs_distances(g.graph()).unwrap(), 12).unwrap();
        prop_assert_eq!(part.len(), p);
        prop_assert!(oracle::resolves_partition(&d, part.parts()));
    }

    #[test]
    fn adjacent_cycle_vertices_separate(n in 3usize..=60, x in 0usize..60, u in 0usize..60, v in 0usize..60) {
        let g = udim_core::generators::cycle_graph(n).unwrap();
        let dm = g.distances();
        let (x, u, v) = (x % n, u % n, v % n);
        let y = (x + 1) % n;
        if u != v && dm.get(u, x) == dm.get(v, x) {
            prop_assert_ne!(dm.get(u, y), dm.get(v, y));
        }
    }

    #[test]
    fn generator_specs_round_trip(k in 3usize..9, p in 0usize..4, seed: u64) {
        for s in [
            format!("cycle:{k}"),
            format!("path:{k}"),
            format!("star:{k}"),
            format!("c4k:{k}"),
            format!("sun:{}", k + 1),
            format!("corona:{k}:{p}"),
            format!("random:{k}:{seed}"),
        ] {
            let spec: GeneratorSpec = s.parse().unwrap();
            prop_assert_eq!(spec.to_string(), s.clone());
            prop_assert!(spec.build().is_ok());
        }
    }
}
