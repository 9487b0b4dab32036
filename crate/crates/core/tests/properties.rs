use proptest::prelude::*;
use sep_core::experiments::{
    bipartition_scan, ensemble_metrics, zero_one_check, MetricsOptions, ScanMode,
};
use sep_core::facet::{
    facet_count, facet_count_hull, facet_subgraph, group_by_facet_subgraph, is_facet_defining,
    FacetEnumerator,
};
use sep_core::graph::{complete, graph6_decode, graph6_encode, parse_edge_list, write_edge_list};
use sep_core::samplers::{double_edge_swap_step, random_connected_nm, single_edge_swap_step};
use sep_core::{Bipartition, Graph, RandomSource};

fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u64>(), 0.0f64..1.0).prop_map(|(n, seed, fill)| {
        let max_m = n * (n - 1) / 2;
        let m = n - 1 + ((max_m - (n - 1)) as f64 * fill) as usize;
        random_connected_nm(n, m, 1000, &mut RandomSource::seed_from_u64(seed)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn enumerator_matches_hull(g in connected_graph(7)) {
        prop_assert_eq!(facet_count(&g).unwrap() as usize, facet_count_hull(&g).unwrap());
    }

    #[test]
    fn listed_functions_are_canonical_facets(g in connected_graph(8)) {
        let e = FacetEnumerator::new(&g).unwrap();
        let list = e.list().unwrap();
        prop_assert_eq!(list.len() as u64, e.count().unwrap());
        prop_assert_eq!(e.count_parallel().unwrap(), e.count().unwrap());
        prop_assert!(list.len().is_multiple_of(2) && list.len() >= 2);
        for f in &list {
            prop_assert_eq!(f.labels()[0], 0);
            prop_assert!(is_facet_defining(&g, f.labels()).unwrap());
            prop_assert!(list.binary_search(&f.negated()).is_ok());
            let sub = facet_subgraph(&g, f).unwrap();
            prop_assert!(sub.as_graph().is_connected());
        }
    }

    #[test]
    fn grouping_partitions_the_functions(g in connected_graph(7)) {
        let groups = group_by_facet_subgraph(&g).unwrap();
        let total: usize = groups.values().map(Vec::len).sum();
        prop_assert_eq!(total as u64, facet_count(&g).unwrap());
        prop_assert!(groups.values().all(|fs| fs.len() >= 2));
    }

    #[test]
    fn serializations_round_trip(g in connected_graph(12)) {
        prop_assert_eq!(graph6_decode(&graph6_encode(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn swap_steps_preserve_their_invariants(g in connected_graph(9), seed in any::<u64>()) {
        let mut rng = RandomSource::seed_from_u64(seed);
        let mut a = g.clone();
        let mut b = g.clone();
        for _ in 0..50 {
            a = single_edge_swap_step(&a, &mut rng);
            b = double_edge_swap_step(&b, &mut rng);
            prop_assert!(a.is_connected() && a.m() == g.m());
            prop_assert!(b.is_connected() && b.degrees() == g.degrees());
        }
    }

    #[test]
    fn scan_fractions_come_from_counters(g in connected_graph(20), seed in any::<u64>(), mode_flag in any::<bool>()) {
        let mode = if mode_flag { ScanMode::Spanning } else { ScanMode::EdgeInduced };
        let points = bipartition_scan(&g, 95, 10, mode, &mut RandomSource::seed_from_u64(seed));
        prop_assert_eq!(points.len(), 10);
        prop_assert_eq!(points.last().unwrap().step, 95);
        for p in &points {
            prop_assert!(p.hits <= p.step);
            prop_assert!((0.0..=1.0).contains(&p.fraction()));
        }
    }

    #[test]
    fn complete_graph_bipartitions_give_indicator_functions(n in 2usize..=7, mask in any::<u32>()) {
        let members: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        prop_assume!(!members.is_empty() && members.len() < n);
        let r = zero_one_check(&complete(n), &Bipartition::from_members(n, members)).unwrap();
        prop_assert!(r.hypothesis_met());
        prop_assert_eq!(r.function_count, 2);
        prop_assert!(r.all_01);
    }
}

#[test]
fn ensemble_rows_follow_input() {
    let mut rng = RandomSource::seed_from_u64(3);
    let graphs: Vec<Graph> = (0..20)
        .map(|i| random_connected_nm(8, 7 + i % 15, 1000, &mut rng).unwrap())
        .collect();
    let records = ensemble_metrics(&graphs, 3, "edges", &MetricsOptions::default()).unwrap();
    assert_eq!(records.len(), graphs.len());
    for (i, r) in records.iter().enumerate() {
        assert_eq!(r.index, i);
        assert_eq!(graph6_decode(&r.graph6).unwrap(), graphs[i]);
        assert!(r.facets % 2 == 0 && r.facets >= 2);
    }
}

#[test]
fn disconnected_ensemble_member_is_named() {
    let graphs = vec![complete(3), Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap()];
    let err = ensemble_metrics(&graphs, 0, "input", &MetricsOptions::default()).unwrap_err();
    assert!(err.to_string().contains("member 1"));
}
