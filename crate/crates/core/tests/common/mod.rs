#![allow(dead_code)]

use compgroup::generators::{random_connected, RandomGraphParams};
use compgroup::WeightedGraph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(seed: u64) -> WeightedGraph {
    random_connected(&mut rng(seed), &RandomGraphParams::default())
}

pub fn small_graph(seed: u64, max_vertices: usize, max_edge_classes: usize) -> WeightedGraph {
    let params = RandomGraphParams { max_vertices, max_edge_classes, ..RandomGraphParams::default() };
    random_connected(&mut rng(seed), &params)
}

/// Disjoint union, with `b`'s ids shifted past `a`'s.
pub fn disjoint_union(a: &WeightedGraph, b: &WeightedGraph) -> WeightedGraph {
    let mut g = a.clone();
    let offset = g.vertex_count();
    for &w in b.vertex_weights() {
        g.add_vertex(w);
    }
    for e in 0..b.dart_count() {
        let inv = b.inverse(e);
        if inv == e {
            g.add_folded_loop(b.origin(e) + offset, b.weight(e));
        } else if inv > e {
            g.add_edge(b.origin(e) + offset, b.terminus(e) + offset, b.weight(e));
        }
    }
    g
}
