//! Supporting exact arithmetic: `F_q[T]`, Kronecker symbols, integer
//! polynomials and matrices, and factorization for display.

mod factor;
mod fq_poly;
mod kronecker;

pub use factor::{factor_integer, is_prime_u64, is_probable_prime, prime_factors_u64, FactoredInteger};
pub use fq_poly::{is_irreducible, monic_irreducibles, FqPolynomial};
pub use kronecker::kronecker;

use num_bigint::BigInt;

use crate::linalg::{berkowitz, IntMatrix};
use crate::poly::IntPolynomial;

/// `det(x·I − B)` for a square integer matrix.
pub fn char_poly_int(b: &IntMatrix) -> IntPolynomial {
    IntPolynomial::new(berkowitz(b))
}

pub fn int_poly_eval(p: &IntPolynomial, x: &BigInt) -> BigInt {
    p.eval(x)
}

pub fn int_poly_derivative(p: &IntPolynomial) -> IntPolynomial {
    p.derivative()
}
