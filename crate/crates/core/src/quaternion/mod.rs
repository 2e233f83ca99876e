//! Closed-form component-group orders for quaternionic modular curves.
//!
//! Both the function-field side (`F_q(T)`, [`function_field`]) and the
//! rational side ([`rational`]) take the characteristic polynomial `P(x)` of
//! a Brandt matrix, or the matrix itself, as input data. Every exponent and
//! quotient is evaluated as an exact rational; a result that fails to be a
//! positive integer is an error, never a rounded value.

mod brandt;
pub mod function_field;
mod input;
pub mod rational;

pub use brandt::{validate_brandt, BrandtReport};
pub use function_field::{
    class_number_ff, closed_form_h1, h_weight_ff, mass_ff, n_d, phi_ff, FfInput,
};
pub use input::{parse_input, ParsedInput, QuaternionInput};
pub use rational::{class_number_q, h2_h3, mass_q, n2_n3, phi_q, QInput};

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::numtheory::{char_poly_int, factor_integer, FactoredInteger};
use crate::poly::IntPolynomial;

/// Order of a component group together with every quantity that went into
/// it, in evaluation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiReport {
    pub order: BigInt,
    pub factored: FactoredInteger,
    pub intermediates: Vec<(String, BigRational)>,
    pub warnings: Vec<String>,
}

impl PhiReport {
    pub fn intermediate(&self, name: &str) -> Option<&BigRational> {
        self.intermediates.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }
}

impl fmt::Display for PhiReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, value) in &self.intermediates {
            writeln!(f, "{name} = {value}")?;
        }
        for w in &self.warnings {
            writeln!(f, "warning: {w}")?;
        }
        write!(f, "order = {} = {}", self.order, self.factored)
    }
}

/// Accumulates named intermediates for a [`PhiReport`].
#[derive(Default)]
pub(crate) struct Ledger(Vec<(String, BigRational)>);

impl Ledger {
    pub(crate) fn record(&mut self, name: &str, value: impl Into<BigRational>) {
        self.0.push((name.to_string(), value.into()));
    }

    pub(crate) fn into_report(self, order: BigRational, warnings: Vec<String>) -> Result<PhiReport> {
        let order = positive_integer(order, "component group order")?;
        let factored = factor_integer(&order)?;
        Ok(PhiReport { order, factored, intermediates: self.0, warnings })
    }
}

pub(crate) fn rat(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

pub(crate) fn integral(x: BigRational, what: &str) -> Result<BigInt> {
    if x.is_integer() {
        Ok(x.to_integer())
    } else {
        Err(Error::NonIntegral(format!("{what} = {x}")))
    }
}

pub(crate) fn positive_integer(x: BigRational, what: &str) -> Result<BigInt> {
    let n = integral(x, what)?;
    if n.is_positive() {
        Ok(n)
    } else {
        Err(Error::NonIntegral(format!("{what} = {n} is not positive")))
    }
}

/// `base^exp` for an integral, possibly negative, exponent.
pub(crate) fn pow_int(base: i64, exp: &BigInt) -> Result<BigRational> {
    let e: i32 = exp
        .try_into()
        .map_err(|_| Error::NonIntegral(format!("exponent {exp} out of range")))?;
    Ok(rat(base).pow(e))
}

/// Resolves the characteristic polynomial from the supplied data: either
/// given directly, derived from a Brandt matrix (after validation against
/// `n`), or both, in which case they must agree.
pub(crate) fn resolve_charpoly(
    charpoly: Option<&IntPolynomial>,
    brandt: Option<&IntMatrix>,
    weights: Option<&[u64]>,
    n: &BigInt,
    warnings: &mut Vec<String>,
) -> Result<Option<IntPolynomial>> {
    let from_brandt = match brandt {
        Some(b) => {
            let report = validate_brandt(b, n, weights)?;
            if !report.errors.is_empty() {
                return Err(Error::InvalidBrandt(report.errors.join("; ")));
            }
            warnings.extend(report.warnings);
            Some(char_poly_int(b))
        }
        None => None,
    };
    match (charpoly, from_brandt) {
        (Some(p), Some(pb)) if *p != pb => Err(Error::Inconsistent(format!(
            "charpoly {p} disagrees with the Brandt matrix polynomial {pb}"
        ))),
        (Some(p), _) => Ok(Some(p.clone())),
        (None, pb) => Ok(pb),
    }
}

/// Checks `P` against the expected class number and the root `N`, and
/// returns `(P(−N), P′(N))`.
pub(crate) fn check_charpoly(p: &IntPolynomial, class_number: &BigInt, n: &BigInt) -> Result<(BigInt, BigInt)> {
    if !p.is_monic() {
        return Err(Error::InvalidInput(format!("characteristic polynomial {p} is not monic")));
    }
    let deg = p.degree().unwrap_or(0);
    if BigInt::from(deg) != *class_number {
        return Err(Error::DegreeMismatch { got: deg, expected: class_number.to_string() });
    }
    let at_n = p.eval(n);
    if !at_n.is_zero() {
        return Err(Error::NotARoot { n: n.to_string(), value: at_n.to_string() });
    }
    Ok((p.eval(&-n.clone()), p.derivative().eval(n)))
}

/// `1 − s` for a sign-like value, as used in the weight-count products.
pub(crate) fn one_minus(s: i32) -> BigInt {
    BigInt::one() - BigInt::from(s)
}
