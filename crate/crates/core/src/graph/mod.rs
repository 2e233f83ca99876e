//! Finite weighted graphs in the dart (half-edge) model.
//!
//! A graph is a set of vertices and a set of darts. Each dart has an origin
//! and an inverse; the terminus is never stored and is always read off as the
//! origin of the inverse, so `t(ē) = o(e)` holds by construction. A dart may
//! be its own inverse, which models a folded loop (a half-segment hanging off
//! a vertex). Vertices and darts carry positive integer weights, and the two
//! darts of a pair share a weight.

mod format;

pub use format::{parse_graph, write_graph, LabeledGraph};

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type DartId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dart {
    pub origin: VertexId,
    pub inverse: DartId,
    pub weight: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct WeightedGraph {
    vertex_weights: Vec<u64>,
    darts: Vec<Dart>,
}

impl WeightedGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Assembles a graph from raw parts without checking anything. Use
    /// [`validate`] (or [`WeightedGraph::try_from_parts`]) before handing the
    /// result to other operations.
    pub fn from_parts(vertex_weights: Vec<u64>, darts: Vec<Dart>) -> Self {
        Self { vertex_weights, darts }
    }

    pub fn try_from_parts(vertex_weights: Vec<u64>, darts: Vec<Dart>) -> Result<Self> {
        let g = Self::from_parts(vertex_weights, darts);
        let report = validate(&g);
        if report.is_empty() {
            Ok(g)
        } else {
            Err(Error::MalformedGraph(report.to_string()))
        }
    }

    pub fn add_vertex(&mut self, weight: u64) -> VertexId {
        self.vertex_weights.push(weight);
        self.vertex_weights.len() - 1
    }

    /// Adds the dart pair `u -> v` / `v -> u` and returns the id of the
    /// `u -> v` dart; its inverse gets the next id. `u == v` gives an
    /// ordinary loop.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId, weight: u64) -> DartId {
        let e = self.darts.len();
        self.darts.push(Dart { origin: u, inverse: e + 1, weight });
        self.darts.push(Dart { origin: v, inverse: e, weight });
        e
    }

    /// Adds a self-inverse dart at `v`.
    pub fn add_folded_loop(&mut self, v: VertexId, weight: u64) -> DartId {
        let e = self.darts.len();
        self.darts.push(Dart { origin: v, inverse: e, weight });
        e
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_weights.len()
    }

    pub fn dart_count(&self) -> usize {
        self.darts.len()
    }

    pub fn vertex_weight(&self, v: VertexId) -> u64 {
        self.vertex_weights[v]
    }

    pub fn vertex_weights(&self) -> &[u64] {
        &self.vertex_weights
    }

    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    pub fn dart(&self, e: DartId) -> &Dart {
        &self.darts[e]
    }

    pub fn origin(&self, e: DartId) -> VertexId {
        self.darts[e].origin
    }

    pub fn inverse(&self, e: DartId) -> DartId {
        self.darts[e].inverse
    }

    pub fn terminus(&self, e: DartId) -> VertexId {
        self.darts[self.darts[e].inverse].origin
    }

    pub fn weight(&self, e: DartId) -> u64 {
        self.darts[e].weight
    }

    pub fn is_folded(&self, e: DartId) -> bool {
        self.darts[e].inverse == e
    }

    /// Number of geometric edges: dart pairs plus folded loops.
    pub fn edge_class_count(&self) -> usize {
        (0..self.darts.len()).filter(|&e| self.inverse(e) >= e).count()
    }

    /// Mass `Σ_v 1/w(v)`.
    pub fn mass(&self) -> BigRational {
        self.vertex_weights
            .iter()
            .map(|&w| BigRational::new(1.into(), w.into()))
            .sum()
    }

    /// Outgoing darts of every vertex, in ascending dart id order.
    pub fn outgoing(&self) -> Vec<Vec<DartId>> {
        let mut out = vec![Vec::new(); self.vertex_count()];
        for (e, d) in self.darts.iter().enumerate() {
            out[d.origin].push(e);
        }
        out
    }

    /// Component index of every vertex, numbered in order of smallest member.
    pub fn components(&self) -> Vec<usize> {
        let out = self.outgoing();
        let mut comp = vec![usize::MAX; self.vertex_count()];
        let mut next = 0;
        for start in 0..self.vertex_count() {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = next;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &e in &out[u] {
                    let t = self.terminus(e);
                    if comp[t] == usize::MAX {
                        comp[t] = next;
                        queue.push_back(t);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().iter().max().map_or(0, |&c| c + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Errors unless the graph is nonempty and connected.
    pub fn require_connected(&self) -> Result<()> {
        if self.vertex_count() == 0 {
            return Err(Error::EmptyGraph);
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(())
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    ZeroVertexWeight { vertex: VertexId },
    ZeroDartWeight { dart: DartId },
    DanglingOrigin { dart: DartId, origin: VertexId },
    DanglingInverse { dart: DartId, inverse: DartId },
    Involution { dart: DartId },
    WeightSymmetry { dart: DartId, inverse: DartId },
}

impl Violation {
    /// Short name of the violated axiom.
    pub fn name(&self) -> &'static str {
        match self {
            Violation::ZeroVertexWeight { .. } | Violation::ZeroDartWeight { .. } => "positive weight",
            Violation::DanglingOrigin { .. } => "origin exists",
            Violation::DanglingInverse { .. } => "inverse exists",
            Violation::Involution { .. } => "involution",
            Violation::WeightSymmetry { .. } => "weight symmetry",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ZeroVertexWeight { vertex } => write!(f, "positive weight: vertex {vertex} has weight 0"),
            Violation::ZeroDartWeight { dart } => write!(f, "positive weight: dart {dart} has weight 0"),
            Violation::DanglingOrigin { dart, origin } => {
                write!(f, "origin exists: dart {dart} starts at missing vertex {origin}")
            }
            Violation::DanglingInverse { dart, inverse } => {
                write!(f, "inverse exists: dart {dart} has missing inverse {inverse}")
            }
            Violation::Involution { dart } => write!(f, "involution: inverse of inverse of dart {dart} is not itself"),
            Violation::WeightSymmetry { dart, inverse } => {
                write!(f, "weight symmetry: darts {dart} and {inverse} have different weights")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.violations.iter().any(|v| v.name() == name)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("; "))
    }
}

/// Lists every violated graph axiom. Never fails.
pub fn validate(g: &WeightedGraph) -> ValidationReport {
    let mut violations = Vec::new();
    for (v, &w) in g.vertex_weights.iter().enumerate() {
        if w == 0 {
            violations.push(Violation::ZeroVertexWeight { vertex: v });
        }
    }
    let m = g.darts.len();
    for (e, d) in g.darts.iter().enumerate() {
        if d.weight == 0 {
            violations.push(Violation::ZeroDartWeight { dart: e });
        }
        if d.origin >= g.vertex_count() {
            violations.push(Violation::DanglingOrigin { dart: e, origin: d.origin });
        }
        if d.inverse >= m {
            violations.push(Violation::DanglingInverse { dart: e, inverse: d.inverse });
            continue;
        }
        let inv = &g.darts[d.inverse];
        if inv.inverse != e {
            violations.push(Violation::Involution { dart: e });
        } else if inv.weight != d.weight && e < d.inverse {
            violations.push(Violation::WeightSymmetry { dart: e, inverse: d.inverse });
        }
    }
    ValidationReport { violations }
}

/// Darts terminating at `v`. An ordinary loop at `v` contributes both of its
/// darts, a folded loop contributes itself once.
pub fn star(g: &WeightedGraph, v: VertexId) -> Result<Vec<DartId>> {
    g.check_vertex(v)?;
    Ok((0..g.dart_count()).filter(|&e| g.terminus(e) == v).collect())
}

/// The common value of `Σ_{t(e)=v} w(v)/w(e)` over all vertices, if there is
/// one. Whether it is a positive integer is left to the caller.
pub fn regularity(g: &WeightedGraph) -> Option<BigRational> {
    if g.vertex_count() == 0 {
        return None;
    }
    let mut sums = vec![BigRational::from_integer(BigInt::from(0)); g.vertex_count()];
    for e in 0..g.dart_count() {
        let v = g.terminus(e);
        sums[v] += BigRational::new(g.vertex_weight(v).into(), g.weight(e).into());
    }
    let first = sums[0].clone();
    sums.iter().all(|s| *s == first).then_some(first)
}

/// The 2-coloring `(O, I)` with vertex 0 in `O`, or `None` when the graph is
/// not bipartite (any loop, ordinary or folded, rules it out).
pub fn bipartition(g: &WeightedGraph) -> Result<Option<(Vec<VertexId>, Vec<VertexId>)>> {
    g.require_connected()?;
    let out = g.outgoing();
    let mut color = vec![None; g.vertex_count()];
    color[0] = Some(false);
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        let cu = color[u].expect("queued vertices are colored");
        for &e in &out[u] {
            let t = g.terminus(e);
            match color[t] {
                None => {
                    color[t] = Some(!cu);
                    queue.push_back(t);
                }
                Some(ct) if ct == cu => return Ok(None),
                Some(_) => {}
            }
        }
    }
    let (mut outer, mut inner) = (Vec::new(), Vec::new());
    for (v, c) in color.into_iter().enumerate() {
        if c == Some(false) {
            outer.push(v);
        } else {
            inner.push(v);
        }
    }
    Ok(Some((outer, inner)))
}

/// A permutation of vertices and darts of order at most two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Involution {
    pub vertex_map: Vec<VertexId>,
    pub dart_map: Vec<DartId>,
}

impl Involution {
    pub fn identity(g: &WeightedGraph) -> Self {
        Self {
            vertex_map: (0..g.vertex_count()).collect(),
            dart_map: (0..g.dart_count()).collect(),
        }
    }

    /// Checks that this is an involutive automorphism of `g` as a weighted
    /// graph: it squares to the identity, commutes with origin and inverse,
    /// and preserves both weight functions.
    pub fn check(&self, g: &WeightedGraph) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidInvolution(msg));
        if self.vertex_map.len() != g.vertex_count() || self.dart_map.len() != g.dart_count() {
            return bad("size does not match the graph".into());
        }
        for (v, &tv) in self.vertex_map.iter().enumerate() {
            if tv >= g.vertex_count() || self.vertex_map[tv] != v {
                return bad(format!("vertex map is not an involution at {v}"));
            }
            if g.vertex_weight(tv) != g.vertex_weight(v) {
                return bad(format!("vertex weight not preserved at {v}"));
            }
        }
        for (e, &te) in self.dart_map.iter().enumerate() {
            if te >= g.dart_count() || self.dart_map[te] != e {
                return bad(format!("dart map is not an involution at {e}"));
            }
            if self.vertex_map[g.origin(e)] != g.origin(te) {
                return bad(format!("does not commute with origin at dart {e}"));
            }
            if self.dart_map[g.inverse(e)] != g.inverse(te) {
                return bad(format!("does not commute with inverse at dart {e}"));
            }
            if g.weight(te) != g.weight(e) {
                return bad(format!("dart weight not preserved at {e}"));
            }
        }
        Ok(())
    }
}

/// The bipartite double cover with its sheet-swap involution.
///
/// Vertex `(v, s)` gets id `v + s·|V|` and dart `(e, s)` gets id
/// `e + s·|E|`. Dart `(e, s)` runs from `(o(e), s)` to `(t(e), 1-s)` and its
/// inverse is `(ē, 1-s)`.
pub fn double_cover(g: &WeightedGraph) -> (WeightedGraph, Involution) {
    let n = g.vertex_count();
    let m = g.dart_count();
    let mut vertex_weights = g.vertex_weights.clone();
    vertex_weights.extend_from_slice(&g.vertex_weights);
    let mut darts = Vec::with_capacity(2 * m);
    for s in 0..2 {
        for d in &g.darts {
            darts.push(Dart {
                origin: d.origin + s * n,
                inverse: d.inverse + (1 - s) * m,
                weight: d.weight,
            });
        }
    }
    let tau = Involution {
        vertex_map: (0..2 * n).map(|v| (v + n) % (2 * n)).collect(),
        dart_map: (0..2 * m).map(|e| (e + m) % (2 * m)).collect(),
    };
    (WeightedGraph { vertex_weights, darts }, tau)
}

/// Quotient by an involution. Orbits are numbered in ascending order of their
/// smallest member, and each image weight is multiplied by the stabilizer
/// order (1 or 2).
pub fn quotient_by_involution(g: &WeightedGraph, tau: &Involution) -> Result<WeightedGraph> {
    tau.check(g)?;
    let vertex_class = orbit_classes(&tau.vertex_map);
    let dart_class = orbit_classes(&tau.dart_map);

    let nv = vertex_class.iter().max().map_or(0, |&c| c + 1);
    let mut vertex_weights = vec![0; nv];
    for (v, &c) in vertex_class.iter().enumerate() {
        let stab = if tau.vertex_map[v] == v { 2 } else { 1 };
        vertex_weights[c] = stab * g.vertex_weight(v);
    }

    let nd = dart_class.iter().max().map_or(0, |&c| c + 1);
    let mut darts = vec![Dart { origin: 0, inverse: 0, weight: 0 }; nd];
    for (e, &c) in dart_class.iter().enumerate() {
        let stab = if tau.dart_map[e] == e { 2 } else { 1 };
        darts[c] = Dart {
            origin: vertex_class[g.origin(e)],
            inverse: dart_class[g.inverse(e)],
            weight: stab * g.weight(e),
        };
    }
    Ok(WeightedGraph { vertex_weights, darts })
}

fn orbit_classes(map: &[usize]) -> Vec<usize> {
    let mut class = vec![usize::MAX; map.len()];
    let mut next = 0;
    for x in 0..map.len() {
        if class[x] == usize::MAX {
            class[x] = next;
            class[map[x]] = next;
            next += 1;
        }
    }
    class
}

/// Multiset of `(weight, folded)` over the darts from `u` to `v`, for every
/// ordered pair of vertices.
fn pair_profile(g: &WeightedGraph) -> Vec<Vec<Vec<(u64, bool)>>> {
    let n = g.vertex_count();
    let mut p = vec![vec![Vec::new(); n]; n];
    for e in 0..g.dart_count() {
        p[g.origin(e)][g.terminus(e)].push((g.weight(e), g.is_folded(e)));
    }
    for row in &mut p {
        for cell in row.iter_mut() {
            cell.sort_unstable();
        }
    }
    p
}

type Signature = (u64, Vec<(u64, bool)>, Vec<u64>);

/// Vertex invariant used to prune candidate images: weight, the darts at the
/// vertex itself, and the sorted outgoing dart weights.
fn vertex_signature(g: &WeightedGraph, profile: &[Vec<Vec<(u64, bool)>>], v: VertexId) -> Signature {
    let mut out: Vec<u64> = g.outgoing()[v].iter().map(|&e| g.weight(e)).collect();
    out.sort_unstable();
    (g.vertex_weight(v), profile[v][v].clone(), out)
}

/// Isomorphism of weighted graphs, by backtracking over vertex bijections.
/// Two graphs are isomorphic when some vertex bijection preserves vertex
/// weights and, for every ordered pair `(u, v)`, the multiset of weights of
/// darts from `u` to `v` (folded loops kept apart from ordinary ones). A dart
/// bijection is then forced up to the choice among equal darts.
pub fn isomorphic(a: &WeightedGraph, b: &WeightedGraph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.dart_count() != b.dart_count() {
        return false;
    }
    let pa = pair_profile(a);
    let pb = pair_profile(b);
    let sa: Vec<_> = (0..n).map(|v| vertex_signature(a, &pa, v)).collect();
    let sb: Vec<_> = (0..n).map(|v| vertex_signature(b, &pb, v)).collect();
    let mut sorted_a = sa.clone();
    let mut sorted_b = sb.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return false;
    }
    // assign vertices of `a` in BFS order so constraints bite early
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let out = a.outgoing();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &e in &out[u] {
                let t = a.terminus(e);
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
    }
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend_isomorphism(0, &order, &pa, &pb, &sa, &sb, &mut image, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn extend_isomorphism(
    k: usize,
    order: &[VertexId],
    pa: &[Vec<Vec<(u64, bool)>>],
    pb: &[Vec<Vec<(u64, bool)>>],
    sa: &[Signature],
    sb: &[Signature],
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&u) = order.get(k) else { return true };
    for cand in 0..sb.len() {
        if used[cand] || sa[u] != sb[cand] {
            continue;
        }
        let consistent = order[..k].iter().all(|&w| {
            pa[u][w] == pb[cand][image[w]] && pa[w][u] == pb[image[w]][cand]
        });
        if !consistent {
            continue;
        }
        image[u] = cand;
        used[cand] = true;
        if extend_isomorphism(k + 1, order, pa, pb, sa, sb, image, used) {
            return true;
        }
        used[cand] = false;
        image[u] = usize::MAX;
    }
    false
}
