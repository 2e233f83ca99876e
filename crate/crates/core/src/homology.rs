//! First homology of a weighted graph, the weighted cycle pairing on it, its
//! discriminant `D(G)` and the cokernel `Hom(H₁, Z) / H₁` as an abelian group.
//!
//! Chains are indexed by an orientation section `E(G)*`: one dart out of
//! each non-folded pair, with `ē ≡ −e`. Folded loops never enter `C₁`, so
//! `rank H₁ = |E(G)*| − |V(G)| + 1`. The pairing is applied per dart:
//! `⟨e, e⟩ = w(e)`, `⟨e, ē⟩ = −w(e)`, zero otherwise.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{DartId, VertexId, WeightedGraph};
use crate::linalg::{det_bareiss, leading_principal_minors, smith_normal_form, IntMatrix};

/// The default orientation section: the smaller id of every non-folded pair.
pub fn estar(g: &WeightedGraph) -> Vec<DartId> {
    (0..g.dart_count()).filter(|&e| g.inverse(e) > e).collect()
}

/// Choices that pin down a fundamental cycle basis. Varying them must not
/// change the discriminant.
#[derive(Debug, Clone, Default)]
pub struct BasisChoice {
    pub root: VertexId,
    /// Order in which a vertex's outgoing darts are explored during BFS.
    /// `None` means ascending id.
    pub dart_order: Option<Vec<DartId>>,
    /// Orientation section. `None` means [`estar`].
    pub section: Option<Vec<DartId>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleBasis {
    /// The darts indexing chain coordinates.
    pub section: Vec<DartId>,
    /// One coefficient vector per fundamental cycle.
    pub cycles: Vec<Vec<i64>>,
}

impl CycleBasis {
    pub fn rank(&self) -> usize {
        self.cycles.len()
    }

    /// Signed incidence sum of a cycle at every vertex; all zero for a cycle.
    pub fn boundary(&self, g: &WeightedGraph, cycle: &[i64]) -> Vec<i64> {
        let mut b = vec![0; g.vertex_count()];
        for (&e, &c) in self.section.iter().zip(cycle) {
            b[g.terminus(e)] += c;
            b[g.origin(e)] -= c;
        }
        b
    }
}

/// Fundamental cycles of the BFS tree rooted at vertex 0, exploring darts in
/// ascending id order, coordinates in the [`estar`] section.
pub fn cycle_basis(g: &WeightedGraph) -> Result<CycleBasis> {
    cycle_basis_with(g, &BasisChoice::default())
}

pub fn cycle_basis_with(g: &WeightedGraph, choice: &BasisChoice) -> Result<CycleBasis> {
    g.require_connected()?;
    if choice.root >= g.vertex_count() {
        return Err(Error::UnknownVertex(choice.root));
    }
    let section = match &choice.section {
        Some(s) => {
            check_section(g, s)?;
            s.clone()
        }
        None => estar(g),
    };
    // position and sign of each dart in section coordinates
    let mut coord: Vec<Option<(usize, i64)>> = vec![None; g.dart_count()];
    for (i, &e) in section.iter().enumerate() {
        coord[e] = Some((i, 1));
        coord[g.inverse(e)] = Some((i, -1));
    }

    let mut outgoing = vec![Vec::new(); g.vertex_count()];
    match &choice.dart_order {
        Some(order) => {
            if order.len() != g.dart_count() {
                return Err(Error::DimensionMismatch("dart order is not a permutation".into()));
            }
            for &e in order {
                outgoing[g.origin(e)].push(e);
            }
        }
        None => outgoing = g.outgoing(),
    }

    // parent_dart[v] runs from the parent of v to v
    let mut parent_dart: Vec<Option<DartId>> = vec![None; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    let mut tree = vec![false; g.dart_count()];
    seen[choice.root] = true;
    let mut queue = VecDeque::from([choice.root]);
    while let Some(u) = queue.pop_front() {
        for &e in &outgoing[u] {
            let t = g.terminus(e);
            if !seen[t] {
                seen[t] = true;
                parent_dart[t] = Some(e);
                tree[e] = true;
                tree[g.inverse(e)] = true;
                queue.push_back(t);
            }
        }
    }

    // root-to-v path as a chain
    let path_chain = |v: VertexId| {
        let mut chain = vec![0i64; section.len()];
        let mut cur = v;
        while let Some(e) = parent_dart[cur] {
            let (i, s) = coord[e].expect("tree darts are never folded");
            chain[i] += s;
            cur = g.origin(e);
        }
        chain
    };

    let mut cycles = Vec::new();
    for (i, &f) in section.iter().enumerate() {
        if tree[f] {
            continue;
        }
        // f followed by the tree path from t(f) back to o(f)
        let mut c = path_chain(g.origin(f));
        for (x, y) in c.iter_mut().zip(path_chain(g.terminus(f))) {
            *x -= y;
        }
        c[i] += 1;
        cycles.push(c);
    }
    Ok(CycleBasis { section, cycles })
}

fn check_section(g: &WeightedGraph, section: &[DartId]) -> Result<()> {
    let mut hit = vec![false; g.dart_count()];
    for &e in section {
        if e >= g.dart_count() || g.is_folded(e) || hit[e] || hit[g.inverse(e)] {
            return Err(Error::DimensionMismatch(format!("dart {e} cannot be in an orientation section")));
        }
        hit[e] = true;
    }
    if section.len() != estar(g).len() {
        return Err(Error::DimensionMismatch("orientation section misses a dart pair".into()));
    }
    Ok(())
}

/// Symmetric integer matrix of the cycle pairing on a basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix(pub IntMatrix);

impl GramMatrix {
    pub fn determinant(&self) -> BigInt {
        det_bareiss(&self.0)
    }

    /// Symmetric with every leading principal minor positive.
    pub fn is_positive_definite(&self) -> bool {
        self.0.is_symmetric() && leading_principal_minors(&self.0).iter().all(|m| m.is_positive())
    }
}

pub fn gram_matrix(g: &WeightedGraph, basis: &CycleBasis) -> Result<GramMatrix> {
    if basis.section.iter().any(|&e| e >= g.dart_count() || g.is_folded(e)) {
        return Err(Error::DimensionMismatch("basis does not belong to this graph".into()));
    }
    if basis.cycles.iter().any(|c| c.len() != basis.section.len()) {
        return Err(Error::DimensionMismatch("cycle length differs from section size".into()));
    }
    let weights: Vec<BigInt> = basis.section.iter().map(|&e| BigInt::from(g.weight(e))).collect();
    let r = basis.rank();
    let mut m = IntMatrix::zeros(r, r);
    for i in 0..r {
        for j in i..r {
            let v: BigInt = basis.cycles[i]
                .iter()
                .zip(&basis.cycles[j])
                .zip(&weights)
                .filter(|((a, b), _)| **a != 0 && **b != 0)
                .map(|((a, b), w)| BigInt::from(a * b) * w)
                .sum();
            m[(i, j)] = v.clone();
            m[(j, i)] = v;
        }
    }
    Ok(GramMatrix(m))
}

/// `D(G)`: the order of the cokernel of `H₁ → Hom(H₁, Z)`.
pub fn discriminant(g: &WeightedGraph) -> Result<BigInt> {
    discriminant_with(g, &BasisChoice::default())
}

pub fn discriminant_with(g: &WeightedGraph, choice: &BasisChoice) -> Result<BigInt> {
    let basis = cycle_basis_with(g, choice)?;
    Ok(gram_matrix(g, &basis)?.determinant())
}

/// A finite abelian group `Z/d₁ ⊕ … ⊕ Z/d_r` with `d₁ | d₂ | …`. Trivial
/// factors are kept so that `r` equals the rank of `H₁`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentGroup {
    pub invariant_factors: Vec<BigInt>,
    pub order: BigInt,
}

impl ComponentGroup {
    pub fn from_invariant_factors(invariant_factors: Vec<BigInt>) -> Self {
        let order = invariant_factors.iter().product();
        Self { invariant_factors, order }
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Factors other than 1.
    pub fn nontrivial_factors(&self) -> Vec<&BigInt> {
        self.invariant_factors.iter().filter(|d| !d.is_one()).collect()
    }
}

impl fmt::Display for ComponentGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.nontrivial_factors().iter().map(|d| format!("Z/{d}")).collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

pub fn component_group(g: &WeightedGraph) -> Result<ComponentGroup> {
    let basis = cycle_basis(g)?;
    let gram = gram_matrix(g, &basis)?;
    let factors = smith_normal_form(&gram.0);
    if factors.iter().any(Zero::is_zero) {
        return Err(Error::Inconsistent("cycle pairing is degenerate".into()));
    }
    Ok(ComponentGroup::from_invariant_factors(factors))
}
