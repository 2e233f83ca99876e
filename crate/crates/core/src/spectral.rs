//! Weighted Laplacian and adjacency operators with exact characteristic
//! polynomials.
//!
//! Matrices follow the convention "column `v` holds the image of basis
//! vector `v`":
//!
//! ```text
//! Δ(v) = Σ_{t(e)=v} w(v)/w(e) · (v − o(e))
//! δ(v) = Σ_{t(e)=v} w(v)/w(e) · o(e)
//! ```
//!
//! Neither is symmetric in general. Eigenvalues are never computed
//! numerically; every quantity below is read off characteristic polynomial
//! coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{bipartition, double_cover, regularity, WeightedGraph};
use crate::homology::{discriminant, estar};
use crate::linalg::{berkowitz, RatMatrix};
use crate::poly::RatPolynomial;

fn ratio(num: u64, den: u64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

pub fn laplacian_matrix(g: &WeightedGraph) -> RatMatrix {
    let n = g.vertex_count();
    let mut m = RatMatrix::zeros(n, n);
    for e in 0..g.dart_count() {
        let v = g.terminus(e);
        let u = g.origin(e);
        let c = ratio(g.vertex_weight(v), g.weight(e));
        m[(v, v)] += c.clone();
        m[(u, v)] -= c;
    }
    m
}

pub fn adjacency_matrix(g: &WeightedGraph) -> RatMatrix {
    let n = g.vertex_count();
    let mut m = RatMatrix::zeros(n, n);
    for e in 0..g.dart_count() {
        let v = g.terminus(e);
        m[(g.origin(e), v)] += ratio(g.vertex_weight(v), g.weight(e));
    }
    m
}

/// `det(x·I − M)`, monic and exact.
///
/// Denominators are cleared first: with `L` the lcm of all entry
/// denominators, `c_k(M) = c_k(L·M) / L^{n−k}`, and `L·M` is handled over
/// the integers.
pub fn char_poly(m: &RatMatrix) -> RatPolynomial {
    let n = m.rows();
    let mut l = BigInt::one();
    for i in 0..n {
        for j in 0..n {
            l = l.lcm(m[(i, j)].denom());
        }
    }
    let scaled = m.map(|x| (x * &l).to_integer());
    let coeffs = berkowitz(&scaled);
    let mut denom = BigInt::one();
    let mut out = vec![BigRational::zero(); n + 1];
    for k in (0..=n).rev() {
        out[k] = BigRational::new(coeffs[k].clone(), denom.clone());
        denom *= &l;
    }
    RatPolynomial::new(out)
}

/// True when `(−1)^{n−k}·c_k ≥ 0` for every coefficient, which holds for a
/// monic polynomial whose roots are all real and nonnegative.
pub fn has_nonnegative_root_sign_pattern(p: &RatPolynomial) -> bool {
    let Some(n) = p.degree() else { return false };
    p.coeffs().iter().enumerate().all(|(k, c)| {
        if (n - k) % 2 == 0 {
            !c.is_negative()
        } else {
            !c.is_positive()
        }
    })
}

/// Product of the nonzero eigenvalues of Δ, for connected `g`:
/// `(−1)^{n−1}` times the linear coefficient of `char(Δ)`.
pub fn product_nonzero_eigenvalues(g: &WeightedGraph) -> Result<BigRational> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let p = char_poly(&laplacian_matrix(g));
    if !p.coeff(0).is_zero() {
        return Err(Error::Inconsistent("Laplacian is invertible".into()));
    }
    let linear = p.coeff(1);
    if linear.is_zero() {
        // 0 is a repeated eigenvalue
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    Ok(if (n - 1) % 2 == 0 { linear } else { -linear })
}

/// Both sides of
/// `D(G) = m(G)^{−1} · Π_{E*} w(e) / Π_V w(v) · Π λ_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantCheck {
    pub lhs: BigInt,
    pub rhs: BigRational,
    pub equal: bool,
}

/// Compares the homological discriminant with its Laplacian-spectrum
/// expression.
pub fn verify_spectral_discriminant(g: &WeightedGraph) -> Result<DiscriminantCheck> {
    g.require_connected()?;
    let lhs = discriminant(g)?;
    let edge_weights: BigInt = estar(g).iter().map(|&e| BigInt::from(g.weight(e))).product();
    let vertex_weights: BigInt = g.vertex_weights().iter().map(|&w| BigInt::from(w)).product();
    let rhs = g.mass().recip()
        * BigRational::new(edge_weights, vertex_weights)
        * product_nonzero_eigenvalues(g)?;
    let equal = rhs == BigRational::from_integer(lhs.clone());
    Ok(DiscriminantCheck { lhs, rhs, equal })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverIdentity {
    /// `char(δ)` of the double cover.
    pub lhs: RatPolynomial,
    /// `(−1)^h · P(x) · P(−x)` with `P = char(δ)` of `g`.
    pub rhs: RatPolynomial,
    pub equal: bool,
}

/// The adjacency spectrum of the double cover is `±` that of `g`.
pub fn double_cover_charpoly_identity(g: &WeightedGraph) -> CoverIdentity {
    let (cover, _) = double_cover(g);
    let lhs = char_poly(&adjacency_matrix(&cover));
    let p = char_poly(&adjacency_matrix(g));
    let mut rhs = &p * &p.reflect();
    if g.vertex_count() % 2 == 1 {
        rhs = rhs.scale(&-BigRational::one());
    }
    let equal = lhs == rhs;
    CoverIdentity { lhs, rhs, equal }
}

/// `|P(−N)·P′(N)|`, which equals `2N Π_{i≥2} (N+λ_i)(N−λ_i)` when `N` is a
/// root of `P`.
pub fn corollary_product(p: &RatPolynomial, n: &BigInt) -> Result<BigRational> {
    let n = BigRational::from_integer(n.clone());
    let at_n = p.eval(&n);
    if !at_n.is_zero() {
        return Err(Error::NotARoot { n: n.to_string(), value: at_n.to_string() });
    }
    Ok((p.eval(&-n.clone()) * p.derivative().eval(&n)).abs())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverProductCheck {
    pub regularity: BigInt,
    /// `|P(−N)·P′(N)|` from the adjacency polynomial of `g`.
    pub from_polynomial: BigRational,
    /// Product of nonzero Laplacian eigenvalues of the double cover.
    pub from_cover: BigRational,
    pub equal: bool,
}

/// For an `N`-regular, connected, non-bipartite `g` (so that its double cover
/// is connected), compares [`corollary_product`] of `char(δ(g))` with the
/// Laplacian spectrum of the double cover.
pub fn verify_cover_product(g: &WeightedGraph) -> Result<CoverProductCheck> {
    g.require_connected()?;
    let n = regularity(g)
        .filter(|r| r.is_integer() && r.is_positive())
        .ok_or_else(|| Error::InvalidInput("graph is not N-regular for a positive integer N".into()))?
        .to_integer();
    if bipartition(g)?.is_some() {
        return Err(Error::InvalidInput("graph is bipartite, so its double cover is disconnected".into()));
    }
    let p = char_poly(&adjacency_matrix(g));
    let from_polynomial = corollary_product(&p, &n)?;
    let (cover, _) = double_cover(g);
    let from_cover = product_nonzero_eigenvalues(&cover)?;
    let equal = from_polynomial == from_cover;
    Ok(CoverProductCheck { regularity: n, from_polynomial, from_cover, equal })
}
