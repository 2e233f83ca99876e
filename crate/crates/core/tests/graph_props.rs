mod common;

use common::{random_graph, rng};
use compgroup::graph::{
    bipartition, double_cover, isomorphic, parse_graph, quotient_by_involution, regularity, validate, write_graph, Dart,
    Involution,
};
use compgroup::WeightedGraph;
use proptest::prelude::*;
use rand::seq::SliceRandom;

fn relabel(g: &WeightedGraph, seed: u64) -> WeightedGraph {
    let mut r = rng(seed);
    let mut pv: Vec<usize> = (0..g.vertex_count()).collect();
    let mut pd: Vec<usize> = (0..g.dart_count()).collect();
    pv.shuffle(&mut r);
    pd.shuffle(&mut r);
    let mut weights = vec![0; g.vertex_count()];
    for v in 0..g.vertex_count() {
        weights[pv[v]] = g.vertex_weight(v);
    }
    let mut darts = vec![Dart { origin: 0, inverse: 0, weight: 0 }; g.dart_count()];
    for e in 0..g.dart_count() {
        darts[pd[e]] = Dart { origin: pv[g.origin(e)], inverse: pd[g.inverse(e)], weight: g.weight(e) };
    }
    WeightedGraph::try_from_parts(weights, darts).unwrap()
}

proptest! {
    #[test]
    fn random_graphs_are_well_formed(seed in any::<u64>()) {
        let g = random_graph(seed);
        prop_assert!(validate(&g).is_empty());
        prop_assert!(g.is_connected());
    }

    #[test]
    fn double_cover_quotient_round_trip(seed in any::<u64>()) {
        let g = random_graph(seed);
        let (cover, tau) = double_cover(&g);
        prop_assert!(validate(&cover).is_empty());
        prop_assert!(tau.check(&cover).is_ok());
        prop_assert_eq!(cover.vertex_count(), 2 * g.vertex_count());
        prop_assert_eq!(cover.dart_count(), 2 * g.dart_count());
        // sheet swap has no fixed points, so no weight doubling
        prop_assert_eq!(quotient_by_involution(&cover, &tau).unwrap(), g);
    }

    #[test]
    fn double_cover_is_bipartite_with_swapped_sheets(seed in any::<u64>()) {
        let g = random_graph(seed);
        let (cover, tau) = double_cover(&g);
        // the cover is connected exactly when g is not bipartite
        let g_bipartite = bipartition(&g).unwrap().is_some();
        prop_assert_eq!(cover.is_connected(), !g_bipartite);
        if cover.is_connected() {
            prop_assert!(bipartition(&cover).unwrap().is_some());
        }
        for v in 0..cover.vertex_count() {
            prop_assert_ne!(tau.vertex_map[v], v);
        }
    }

    #[test]
    fn quotient_by_identity_doubles_weights(seed in any::<u64>()) {
        let g = random_graph(seed);
        let q = quotient_by_involution(&g, &Involution::identity(&g)).unwrap();
        for v in 0..g.vertex_count() {
            prop_assert_eq!(q.vertex_weight(v), 2 * g.vertex_weight(v));
        }
        for e in 0..g.dart_count() {
            prop_assert_eq!(q.weight(e), 2 * g.weight(e));
        }
        // doubling every weight leaves the regularity ratio unchanged
        prop_assert_eq!(regularity(&q), regularity(&g));
    }

    #[test]
    fn relabeled_graphs_are_isomorphic(seed in any::<u64>(), relabel_seed in any::<u64>()) {
        let g = random_graph(seed);
        prop_assert!(isomorphic(&g, &relabel(&g, relabel_seed)));
    }

    #[test]
    fn changing_one_weight_breaks_isomorphism(seed in any::<u64>()) {
        let g = random_graph(seed);
        let mut weights = g.vertex_weights().to_vec();
        weights[0] += 100;
        let h = WeightedGraph::from_parts(weights, g.darts().to_vec());
        prop_assert!(!isomorphic(&g, &h));
    }

    #[test]
    fn text_format_round_trip(seed in any::<u64>()) {
        let g = random_graph(seed);
        let text = write_graph(&g, None, None);
        let parsed = parse_graph(&text).unwrap();
        prop_assert_eq!(&parsed.graph, &g);
        prop_assert_eq!(write_graph(&parsed.graph, Some(&parsed.vertex_labels), Some(&parsed.dart_labels)), text);
    }
}
