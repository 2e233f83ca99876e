//! Component groups of Shimura curves over `Q` at a prime `p ∤ d′`.
//!
//! Kronecker symbols are used throughout so that `p = 2` and `2 | d′` are
//! legal. With `m(d′) = Π(ℓ − 1)/12` and
//! `n₂ = ½Π_{ℓ|d}(1 − (−4/ℓ))`, `n₃ = ½Π_{ℓ|d}(1 − (−3/ℓ))` over `d = p·d′`:
//!
//! ```text
//! d′ = 2:  (p+1)·2^{(−3+(−4/p))/2}·3^{(−3/p)}
//! d′ = 3:  (p+1)·2^{(−4/p)}·3^{(−1+(−3/p))/2}
//! d′ ≥ 5:  |P(−p−1)·P′(p+1)| / (2·m(d′)·2^{n₂}·3^{n₃})
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::{check_charpoly, integral, one_minus, pow_int, rat, resolve_charpoly, Ledger, PhiReport};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::numtheory::{is_prime_u64, kronecker};
use crate::poly::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QInput {
    pub p: u64,
    pub dprime: Vec<u64>,
    pub charpoly: Option<IntPolynomial>,
    pub brandt: Option<IntMatrix>,
    pub weights: Option<Vec<u64>>,
}

impl QInput {
    pub fn new(p: u64, dprime: Vec<u64>) -> Self {
        Self { p, dprime, charpoly: None, brandt: None, weights: None }
    }

    pub fn with_charpoly(p: u64, dprime: Vec<u64>, charpoly: IntPolynomial) -> Self {
        Self { charpoly: Some(charpoly), ..Self::new(p, dprime) }
    }
}

fn check_dprime(dprime: &[u64]) -> Result<()> {
    if dprime.len() % 2 == 0 {
        return Err(Error::InvalidInput(format!(
            "d' must have an odd number of prime factors, got {}",
            dprime.len()
        )));
    }
    for (i, &l) in dprime.iter().enumerate() {
        if !is_prime_u64(l) {
            return Err(Error::NotPrime(l));
        }
        if dprime[..i].contains(&l) {
            return Err(Error::InvalidInput(format!("prime {l} listed twice in d'")));
        }
    }
    Ok(())
}

fn check_primes(p: u64, dprime: &[u64]) -> Result<()> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    check_dprime(dprime)?;
    if dprime.contains(&p) {
        return Err(Error::InvalidInput(format!("reduction prime {p} also divides d'")));
    }
    Ok(())
}

/// `½Π(1 − (D/ℓ))` as an exact rational.
fn half_product(discriminant: i128, primes: impl Iterator<Item = u64>) -> BigRational {
    let prod: BigInt = primes.map(|l| one_minus(kronecker(discriminant, l as i128))).product();
    BigRational::new(prod, 2.into())
}

/// Eichler mass `m(d′) = Π(ℓ − 1)/12`.
pub fn mass_q(dprime: &[u64]) -> Result<BigRational> {
    check_dprime(dprime)?;
    let num: BigInt = dprime.iter().map(|&l| BigInt::from(l - 1)).product();
    Ok(BigRational::new(num, 12.into()))
}

/// Numbers of vertices of weight 2 and 3.
pub fn h2_h3(dprime: &[u64]) -> Result<(BigInt, BigInt)> {
    check_dprime(dprime)?;
    let h2 = integral(half_product(-4, dprime.iter().copied()), "h2")?;
    let h3 = integral(half_product(-3, dprime.iter().copied()), "h3")?;
    Ok((h2, h3))
}

/// `n₂`, `n₃` over all primes of `d = p·d′`.
pub fn n2_n3(p: u64, dprime: &[u64]) -> Result<(BigInt, BigInt)> {
    check_primes(p, dprime)?;
    let all = || std::iter::once(p).chain(dprime.iter().copied());
    let n2 = integral(half_product(-4, all()), "n2")?;
    let n3 = integral(half_product(-3, all()), "n3")?;
    Ok((n2, n3))
}

/// Class number `h(d′)`: 1 for `d′ ∈ {2, 3}`, otherwise
/// `m(d′) + h₂/2 + 2h₃/3`.
pub fn class_number_q(dprime: &[u64]) -> Result<BigInt> {
    check_dprime(dprime)?;
    if dprime == [2] || dprime == [3] {
        return Ok(1.into());
    }
    let (h2, h3) = h2_h3(dprime)?;
    let h = mass_q(dprime)? + BigRational::new(h2, 2.into()) + BigRational::new(h3 * 2, 3.into());
    integral(h, "class number h(d')")
}

pub fn phi_q(input: &QInput) -> Result<PhiReport> {
    let p = input.p;
    check_primes(p, &input.dprime)?;
    let mut ledger = Ledger::default();
    let mut warnings = Vec::new();
    let n: BigInt = BigInt::from(p) + 1;
    let k4 = kronecker(-4, p as i128);
    let k3 = kronecker(-3, p as i128);
    let mass = mass_q(&input.dprime)?;
    let class_number = class_number_q(&input.dprime)?;
    ledger.record("p", rat(p));
    ledger.record("N", rat(n.clone()));
    ledger.record("(-4/p)", rat(k4));
    ledger.record("(-3/p)", rat(k3));
    ledger.record("m(d')", mass.clone());
    ledger.record("h(d')", rat(class_number.clone()));

    let charpoly = resolve_charpoly(
        input.charpoly.as_ref(),
        input.brandt.as_ref(),
        input.weights.as_deref(),
        &n,
        &mut warnings,
    )?;
    let (e2, e3) = match input.dprime.as_slice() {
        [2] => (BigRational::new((k4 - 3).into(), 2.into()), rat(k3)),
        [3] => (rat(k4), BigRational::new((k3 - 1).into(), 2.into())),
        _ => {
            let p_poly = charpoly
                .as_ref()
                .ok_or_else(|| Error::InvalidInput(format!("charpoly or brandt required for d' = {:?}", input.dprime)))?;
            let (p_neg, dp) = check_charpoly(p_poly, &class_number, &n)?;
            let (h2, h3) = h2_h3(&input.dprime)?;
            let (n2, n3) = n2_n3(p, &input.dprime)?;
            ledger.record("h2", rat(h2));
            ledger.record("h3", rat(h3));
            ledger.record("n2", rat(n2.clone()));
            ledger.record("n3", rat(n3.clone()));
            ledger.record("P(-N)", rat(p_neg.clone()));
            ledger.record("P'(N)", rat(dp.clone()));
            let numerator = rat((p_neg * dp).abs());
            let denominator = rat(2) * mass * pow_int(2, &n2)? * pow_int(3, &n3)?;
            ledger.record("|P(-N)P'(N)|", numerator.clone());
            ledger.record("2 m(d') 2^n2 3^n3", denominator.clone());
            return ledger.into_report(numerator / denominator, warnings);
        }
    };
    if let Some(p_poly) = &charpoly {
        check_charpoly(p_poly, &class_number, &n)?;
    }
    ledger.record("exponent of 2", e2.clone());
    ledger.record("exponent of 3", e3.clone());
    let e2 = integral(e2, "exponent of 2")?;
    let e3 = integral(e3, "exponent of 3")?;
    let order = rat(n) * pow_int(2, &e2)? * pow_int(3, &e3)?;
    ledger.into_report(order, warnings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::ErrorKind;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn pair(a: i64, b: i64) -> (BigInt, BigInt) {
        (a.into(), b.into())
    }

    fn order(input: QInput) -> BigInt {
        phi_q(&input).unwrap().order
    }

    #[test]
    fn mass_examples() {
        assert_eq!(mass_q(&[2]).unwrap(), r(1, 12));
        assert_eq!(mass_q(&[3]).unwrap(), r(1, 6));
        assert_eq!(mass_q(&[11]).unwrap(), r(5, 6));
        assert!(mass_q(&[2, 3]).is_err());
        assert!(matches!(mass_q(&[9]), Err(Error::NotPrime(9))));
    }

    #[test]
    fn weight_count_examples() {
        assert_eq!(h2_h3(&[11]).unwrap(), pair(1, 1));
        assert_eq!(h2_h3(&[13]).unwrap(), pair(0, 0));
        assert_eq!(h2_h3(&[2, 5, 7]).unwrap().0, BigInt::from(0));
        assert_eq!(h2_h3(&[2]).unwrap_err().kind(), ErrorKind::Arithmetic);
    }

    #[test]
    fn n2_n3_examples() {
        assert_eq!(n2_n3(2, &[11]).unwrap(), pair(1, 2));
        assert_eq!(n2_n3(13, &[11]).unwrap(), pair(0, 0));
        assert_eq!(n2_n3(37, &[5]).unwrap(), pair(0, 0));
    }

    #[test]
    fn class_numbers() {
        for d in [2, 3, 5, 7, 13] {
            assert_eq!(class_number_q(&[d]).unwrap(), BigInt::from(1), "{d}");
        }
        assert_eq!(class_number_q(&[11]).unwrap(), BigInt::from(2));
        // 2·3·5: m = 8/12, h2 = ½·1·2·0 = 0, h3 = ½·2·1·2 = 2
        assert_eq!(class_number_q(&[2, 3, 5]).unwrap(), BigInt::from(2));
    }

    #[test]
    fn case_one() {
        assert_eq!(order(QInput::new(13, vec![2])), BigInt::from(21));
        for p in [3, 5, 11] {
            assert_eq!(order(QInput::new(p, vec![2])), BigInt::from(1), "{p}");
        }
    }

    #[test]
    fn case_two() {
        assert_eq!(order(QInput::new(2, vec![3])), BigInt::from(1));
    }

    #[test]
    fn d_equals_six_both_ways() {
        assert_eq!(order(QInput::new(3, vec![2])), BigInt::from(1));
        assert_eq!(order(QInput::new(2, vec![3])), BigInt::from(1));
    }

    #[test]
    fn case_three() {
        let p = IntPolynomial::from_i64(&[-6, -1, 1]);
        let report = phi_q(&QInput::with_charpoly(2, vec![11], p)).unwrap();
        assert_eq!(report.order, BigInt::from(1));
        assert_eq!(report.intermediate("n2"), Some(&r(1, 1)));
        assert_eq!(report.intermediate("n3"), Some(&r(2, 1)));
    }

    #[test]
    fn case_three_errors() {
        assert!(matches!(phi_q(&QInput::new(2, vec![11])), Err(Error::InvalidInput(_))));
        let wrong_root = QInput::with_charpoly(2, vec![11], IntPolynomial::from_i64(&[-8, -2, 1]));
        assert!(matches!(phi_q(&wrong_root), Err(Error::NotARoot { .. })));
        let wrong_degree = QInput::with_charpoly(2, vec![11], IntPolynomial::from_i64(&[-3, 1]));
        assert!(matches!(phi_q(&wrong_degree), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn supplied_polynomial_checked_in_small_cases() {
        let good = QInput::with_charpoly(13, vec![2], IntPolynomial::from_i64(&[-14, 1]));
        assert_eq!(phi_q(&good).unwrap().order, BigInt::from(21));
        let bad = QInput::with_charpoly(13, vec![2], IntPolynomial::from_i64(&[-13, 1]));
        assert!(phi_q(&bad).is_err());
    }

    #[test]
    fn brandt_input_case_three() {
        // rows sum to 3 and x² − x − 6 vanishes at 3
        let mut input = QInput::new(2, vec![11]);
        input.brandt = Some(IntMatrix::from_i64_rows(&[&[1, 2], &[3, 0]]));
        assert_eq!(phi_q(&input).unwrap().order, BigInt::from(1));
    }

    #[test]
    fn invalid_primes() {
        assert!(matches!(phi_q(&QInput::new(4, vec![2])), Err(Error::NotPrime(4))));
        assert!(phi_q(&QInput::new(2, vec![2])).is_err());
        assert!(phi_q(&QInput::new(5, vec![2, 3])).is_err());
        assert!(phi_q(&QInput::new(5, vec![])).is_err());
    }
}
