//! Small named graphs and a random generator for property suites.

use rand::Rng;

use crate::graph::WeightedGraph;

/// Cycle `C_n` with unit weights. `n = 1` is a single ordinary loop and
/// `n = 2` two parallel edges.
pub fn cycle(n: usize) -> WeightedGraph {
    let mut g = WeightedGraph::new();
    for _ in 0..n {
        g.add_vertex(1);
    }
    for i in 0..n {
        g.add_edge(i, (i + 1) % n, 1);
    }
    g
}

/// Path on `n` vertices, unit weights.
pub fn path(n: usize) -> WeightedGraph {
    let mut g = WeightedGraph::new();
    for _ in 0..n {
        g.add_vertex(1);
    }
    for i in 1..n {
        g.add_edge(i - 1, i, 1);
    }
    g
}

/// Two unit-weight vertices joined by three parallel edges of the given
/// weights. Darts `0, 2, 4` run from vertex 0 to vertex 1.
pub fn banana(weights: [u64; 3]) -> WeightedGraph {
    let mut g = WeightedGraph::new();
    let u = g.add_vertex(1);
    let v = g.add_vertex(1);
    for w in weights {
        g.add_edge(u, v, w);
    }
    g
}

/// Complete graph `K_m`, unit weights.
pub fn complete(m: usize) -> WeightedGraph {
    let mut g = WeightedGraph::new();
    for _ in 0..m {
        g.add_vertex(1);
    }
    for i in 0..m {
        for j in i + 1..m {
            g.add_edge(i, j, 1);
        }
    }
    g
}

/// One unit-weight vertex carrying `k` unit-weight folded loops.
pub fn folded_bouquet(k: usize) -> WeightedGraph {
    let mut g = WeightedGraph::new();
    let v = g.add_vertex(1);
    for _ in 0..k {
        g.add_folded_loop(v, 1);
    }
    g
}

#[derive(Debug, Clone, Copy)]
pub struct RandomGraphParams {
    pub max_vertices: usize,
    /// Upper bound on dart pairs plus folded loops.
    pub max_edge_classes: usize,
    pub max_weight: u64,
    /// Probability that an extra edge class is a folded loop.
    pub folded_probability: f64,
    /// Probability that an extra ordinary edge is forced to be a loop.
    pub loop_probability: f64,
}

impl Default for RandomGraphParams {
    fn default() -> Self {
        Self {
            max_vertices: 8,
            max_edge_classes: 16,
            max_weight: 9,
            folded_probability: 0.15,
            loop_probability: 0.1,
        }
    }
}

/// A random connected weighted graph: a random spanning tree plus extra
/// parallel edges, ordinary loops and folded loops, all weights drawn
/// uniformly from `1..=max_weight`.
pub fn random_connected<R: Rng + ?Sized>(rng: &mut R, params: &RandomGraphParams) -> WeightedGraph {
    let n = rng.gen_range(1..=params.max_vertices.max(1));
    let mut g = WeightedGraph::new();
    for _ in 0..n {
        g.add_vertex(rng.gen_range(1..=params.max_weight));
    }
    for v in 1..n {
        let parent = rng.gen_range(0..v);
        let w = rng.gen_range(1..=params.max_weight);
        if rng.gen_bool(0.5) {
            g.add_edge(parent, v, w);
        } else {
            g.add_edge(v, parent, w);
        }
    }
    let budget = params.max_edge_classes.saturating_sub(n - 1);
    let extra = rng.gen_range(0..=budget);
    for _ in 0..extra {
        let w = rng.gen_range(1..=params.max_weight);
        let u = rng.gen_range(0..n);
        if rng.gen_bool(params.folded_probability) {
            g.add_folded_loop(u, w);
        } else {
            let v = if rng.gen_bool(params.loop_probability) { u } else { rng.gen_range(0..n) };
            g.add_edge(u, v, w);
        }
    }
    g
}
