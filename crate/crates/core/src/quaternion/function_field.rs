//! Component groups over `F = F_q(T)`.
//!
//! For a definite algebra ramified at `∞` and the primes of `𝔡′`, and a
//! reduction prime `𝔭`:
//!
//! ```text
//! m(𝔡′)   = Π(|𝔭ᵢ| − 1) / (q² − 1)
//! h_{q+1} = ½ Π(1 − (−1)^{deg 𝔭ᵢ})
//! h(𝔡′)   = m(𝔡′) + h_{q+1}·q/(q+1)
//! n(𝔡)    = (1 − (−1)^{deg 𝔭})·h_{q+1} = ½ Π_{𝔮 | 𝔡𝔭}(1 − (−1)^{deg 𝔮})
//! |Φ|     = |P(−N)·P′(N)| / (2·m(𝔡′)·(q+1)^{n(𝔡)}),   N = |𝔭| + 1
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{check_charpoly, integral, one_minus, pow_int, rat, resolve_charpoly, Ledger, PhiReport};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::numtheory::{is_irreducible, FqPolynomial};
use crate::poly::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FfInput {
    /// The reduction prime 𝔭.
    pub p: FqPolynomial,
    /// The primes of 𝔡′.
    pub dprime: Vec<FqPolynomial>,
    pub charpoly: Option<IntPolynomial>,
    pub brandt: Option<IntMatrix>,
    /// Vertex weights `w_i` matching the rows of `brandt`, if known.
    pub weights: Option<Vec<u64>>,
}

impl FfInput {
    pub fn with_charpoly(p: FqPolynomial, dprime: Vec<FqPolynomial>, charpoly: IntPolynomial) -> Self {
        Self { p, dprime, charpoly: Some(charpoly), brandt: None, weights: None }
    }

    pub fn q(&self) -> u64 {
        self.p.q()
    }
}

fn check_prime_poly(q: u64, f: &FqPolynomial) -> Result<()> {
    if f.q() != q {
        return Err(Error::FieldMismatch(q, f.q()));
    }
    if !f.is_monic() {
        return Err(Error::InvalidInput(format!("{f} is not monic")));
    }
    if !is_irreducible(f)? {
        return Err(Error::InvalidInput(format!("{f} is not irreducible over F_{q}")));
    }
    Ok(())
}

fn check_dprime(q: u64, dprime: &[FqPolynomial]) -> Result<()> {
    if dprime.len() % 2 == 0 {
        return Err(Error::InvalidInput(format!(
            "d' must have an odd number of prime factors, got {}",
            dprime.len()
        )));
    }
    for (i, f) in dprime.iter().enumerate() {
        check_prime_poly(q, f)?;
        if dprime[..i].contains(f) {
            return Err(Error::InvalidInput(format!("prime {f} listed twice in d'")));
        }
    }
    Ok(())
}

fn check_primes(q: u64, p: &FqPolynomial, dprime: &[FqPolynomial]) -> Result<()> {
    check_prime_poly(q, p)?;
    check_dprime(q, dprime)?;
    if dprime.contains(p) {
        return Err(Error::InvalidInput(format!("reduction prime {p} also divides d'")));
    }
    Ok(())
}

fn parity_factor(f: &FqPolynomial) -> BigInt {
    // 1 − (−1)^{deg f}
    let deg = f.degree().unwrap_or(0);
    one_minus(if deg % 2 == 0 { 1 } else { -1 })
}

// The `*_of` helpers assume the primes were already checked.

fn mass_of(q: u64, dprime: &[FqPolynomial]) -> Result<BigRational> {
    let mut num = BigInt::one();
    for f in dprime {
        num *= f.ideal_norm()? - 1;
    }
    Ok(BigRational::new(num, BigInt::from(q) * q - 1))
}

fn h_weight_of(dprime: &[FqPolynomial]) -> Result<BigInt> {
    let prod: BigInt = dprime.iter().map(parity_factor).product();
    integral(BigRational::new(prod, 2.into()), "h_{q+1}")
}

fn class_number_of(q: u64, dprime: &[FqPolynomial]) -> Result<BigInt> {
    let m = mass_of(q, dprime)?;
    let hw = h_weight_of(dprime)?;
    integral(m + BigRational::new(hw * q, BigInt::from(q) + 1), "class number h(d')")
}

fn n_d_of(p: &FqPolynomial, dprime: &[FqPolynomial]) -> Result<BigInt> {
    let via_weight = parity_factor(p) * h_weight_of(dprime)?;
    let all: BigInt = std::iter::once(p).chain(dprime).map(parity_factor).product();
    let via_product = integral(BigRational::new(all, 2.into()), "n(d)")?;
    if via_weight != via_product {
        return Err(Error::Inconsistent(format!("n(d): {via_weight} vs {via_product}")));
    }
    Ok(via_weight)
}

/// Mass `m(𝔡′) = Π(|𝔭ᵢ| − 1) / (q² − 1)`.
pub fn mass_ff(q: u64, dprime: &[FqPolynomial]) -> Result<BigRational> {
    check_dprime(q, dprime)?;
    mass_of(q, dprime)
}

/// Number of vertices of weight `q + 1`.
pub fn h_weight_ff(q: u64, dprime: &[FqPolynomial]) -> Result<BigInt> {
    check_dprime(q, dprime)?;
    h_weight_of(dprime)
}

/// Class number `h(𝔡′) = m(𝔡′) + h_{q+1}·q/(q+1)`.
pub fn class_number_ff(q: u64, dprime: &[FqPolynomial]) -> Result<BigInt> {
    check_dprime(q, dprime)?;
    class_number_of(q, dprime)
}

/// `n(𝔡)`, evaluated in both of its forms, which must agree.
pub fn n_d(q: u64, p: &FqPolynomial, dprime: &[FqPolynomial]) -> Result<BigInt> {
    check_primes(q, p, dprime)?;
    n_d_of(p, dprime)
}

pub fn phi_ff(input: &FfInput) -> Result<PhiReport> {
    check_primes(input.q(), &input.p, &input.dprime)?;
    phi_ff_checked(input)
}

fn phi_ff_checked(input: &FfInput) -> Result<PhiReport> {
    let q = input.q();
    let mut ledger = Ledger::default();
    let mut warnings = Vec::new();
    let norm = input.p.ideal_norm()?;
    let n: BigInt = &norm + 1;
    let mass = mass_of(q, &input.dprime)?;
    let h_weight = h_weight_of(&input.dprime)?;
    let class_number = class_number_of(q, &input.dprime)?;
    let nd = n_d_of(&input.p, &input.dprime)?;
    ledger.record("q", rat(q));
    ledger.record("|p|", rat(norm.clone()));
    ledger.record("N", rat(n.clone()));
    ledger.record("m(d')", mass.clone());
    ledger.record("h_{q+1}", rat(h_weight));
    ledger.record("h(d')", rat(class_number.clone()));
    ledger.record("n(d)", rat(nd.clone()));

    if let Some(w) = &input.weights {
        check_ff_weights(q, w, &mass, &mut warnings);
    }
    let p = resolve_charpoly(
        input.charpoly.as_ref(),
        input.brandt.as_ref(),
        input.weights.as_deref(),
        &n,
        &mut warnings,
    )?
    .ok_or_else(|| Error::InvalidInput("either charpoly or brandt is required".into()))?;
    let (p_neg, dp) = check_charpoly(&p, &class_number, &n)?;
    ledger.record("P(-N)", rat(p_neg.clone()));
    ledger.record("P'(N)", rat(dp.clone()));

    let numerator = rat((p_neg * dp).abs());
    let denominator = rat(2) * mass * pow_int(q as i64 + 1, &nd)?;
    ledger.record("|P(-N)P'(N)|", numerator.clone());
    ledger.record("2 m(d') (q+1)^n(d)", denominator.clone());
    ledger.into_report(numerator / denominator, warnings)
}

fn check_ff_weights(q: u64, weights: &[u64], mass: &BigRational, warnings: &mut Vec<String>) {
    if weights.iter().any(|&w| w != 1 && w != q + 1) {
        warnings.push(format!("vertex weights should be 1 or {}", q + 1));
    }
    let sum: BigRational = weights.iter().map(|&w| BigRational::new(1.into(), w.into())).sum();
    if sum != *mass {
        warnings.push(format!("sum of 1/w_i is {sum}, mass is {mass}"));
    }
}

/// Closed forms when `h(𝔡′) = 1`, i.e. `𝔡′ = 𝔮` a single prime of degree at
/// most 2 and `P(x) = x − (|𝔭| + 1)`:
///
/// * `deg 𝔮 = 1`, `deg 𝔭` odd: `(|𝔭| + 1)/(q + 1)`
/// * `deg 𝔮 = 1`, `deg 𝔭` even: `(|𝔭| + 1)(q + 1)`
/// * `deg 𝔮 = 2`: `|𝔭| + 1`
///
/// The value is cross-checked against [`phi_ff`] before it is returned.
pub fn closed_form_h1(p: &FqPolynomial, qprime: &FqPolynomial) -> Result<BigInt> {
    let q = p.q();
    let deg_q = qprime.ideal_deg()?;
    if deg_q > 2 {
        return Err(Error::InvalidInput(format!("deg {qprime} = {deg_q} > 2, class number exceeds 1")));
    }
    check_primes(q, p, std::slice::from_ref(qprime))?;
    let n: BigInt = p.ideal_norm()? + 1;
    let value = match (deg_q, p.ideal_deg()? % 2) {
        (1, 1) => integral(BigRational::new(n.clone(), BigInt::from(q) + 1), "(|p|+1)/(q+1)")?,
        (1, _) => &n * (q + 1),
        _ => n.clone(),
    };
    let input = FfInput::with_charpoly(p.clone(), vec![qprime.clone()], IntPolynomial::linear(n));
    let general = phi_ff_checked(&input)?.order;
    if general != value {
        return Err(Error::Inconsistent(format!("closed form {value} vs general formula {general}")));
    }
    Ok(value)
}
