use std::fmt;

use num_bigint::BigInt;

use super::factor::{is_prime_u64, prime_factors_u64};
use crate::error::{Error, Result};

/// Polynomial over the prime field `F_q`, coefficients low degree first in
/// `[0, q)` with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqPolynomial {
    q: u64,
    coeffs: Vec<u64>,
}

fn check_prime(q: u64) -> Result<()> {
    if is_prime_u64(q) {
        Ok(())
    } else {
        Err(Error::NotPrime(q))
    }
}

impl FqPolynomial {
    /// Reduces integer coefficients (low degree first) modulo a prime `q`.
    pub fn new(q: u64, coeffs: &[i64]) -> Result<Self> {
        check_prime(q)?;
        let qi = q as i128;
        let residues = coeffs.iter().map(|&c| (c as i128).rem_euclid(qi) as u64).collect();
        Ok(Self::from_residues(q, residues))
    }

    fn from_residues(q: u64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { q, coeffs }
    }

    pub fn zero(q: u64) -> Self {
        Self { q, coeffs: Vec::new() }
    }

    pub fn one(q: u64) -> Self {
        Self { q, coeffs: vec![1] }
    }

    /// The indeterminate `T`.
    pub fn t(q: u64) -> Self {
        Self { q, coeffs: vec![0, 1] }
    }

    /// `T^degree` plus the residues of `lower` in the low coefficients;
    /// handy for enumerating monic polynomials.
    pub fn monic_from_lower(q: u64, lower: &[u64]) -> Self {
        let mut coeffs: Vec<u64> = lower.iter().map(|c| c % q).collect();
        coeffs.push(1);
        Self { q, coeffs }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    fn mul_mod(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.q as u128) as u64
    }

    fn inv_mod(&self, a: u64) -> u64 {
        // Fermat, q prime
        let mut result = 1u64;
        let mut base = a % self.q;
        let mut e = self.q - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul_mod(result, base);
            }
            base = self.mul_mod(base, base);
            e >>= 1;
        }
        result
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.q == other.q {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.q, other.q))
        }
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn to_monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.inv_mod(self.leading());
        Self::from_residues(self.q, self.coeffs.iter().map(|&c| self.mul_mod(c, inv)).collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                ((a as u128 + b as u128) % self.q as u128) as u64
            })
            .collect();
        Ok(Self::from_residues(self.q, coeffs))
    }

    pub fn neg(&self) -> Self {
        Self::from_residues(self.q, self.coeffs.iter().map(|&c| (self.q - c) % self.q).collect())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.q));
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = ((out[i + j] as u128 + a as u128 * b as u128) % self.q as u128) as u64;
            }
        }
        Ok(Self::from_residues(self.q, out))
    }

    /// Quotient and remainder.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.same_field(divisor)?;
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return Ok((Self::zero(self.q), self.clone()));
        };
        let inv = self.inv_mod(divisor.leading());
        let mut quot = vec![0u64; nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = self.mul_mod(rem[k + dd], inv);
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let sub = self.mul_mod(c, d);
                rem[k + j] = (rem[k + j] + self.q - sub) % self.q;
            }
        }
        Ok((Self::from_residues(self.q, quot), Self::from_residues(self.q, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.to_monic())
    }

    /// `self^exp mod modulus` by repeated squaring.
    pub fn pow_mod(&self, mut exp: u64, modulus: &Self) -> Result<Self> {
        let mut result = Self::one(self.q).rem(modulus)?;
        let mut base = self.rem(modulus)?;
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&base)?.rem(modulus)?;
            }
            base = base.mul(&base)?.rem(modulus)?;
            exp >>= 1;
        }
        Ok(result)
    }

    /// Ideal norm `|A/(f)| = q^{deg f}`.
    pub fn ideal_norm(&self) -> Result<BigInt> {
        Ok(BigInt::from(self.q).pow(self.ideal_deg()? as u32))
    }

    pub fn ideal_deg(&self) -> Result<usize> {
        self.degree()
            .ok_or_else(|| Error::InvalidPolynomial("the zero ideal has no norm".into()))
    }

    /// Parses either a coefficient list `[c0, c1, ...]` (low degree first)
    /// or a symbolic sum such as `T^5+T^2+1`, `2T^2 - 3` or `x-1`.
    pub fn parse(q: u64, text: &str) -> Result<Self> {
        check_prime(q)?;
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::InvalidPolynomial(format!("cannot parse polynomial {text:?}"));
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            if inner.is_empty() {
                return Ok(Self::zero(q));
            }
            let coeffs = inner
                .split(',')
                .map(|t| t.parse::<i64>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            return Self::new(q, &coeffs);
        }
        if s.is_empty() {
            return Err(bad());
        }
        let mut coeffs: Vec<i64> = Vec::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1i64, &rest[1..]),
                b'-' => (-1i64, &rest[1..]),
                _ => (1i64, rest),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            if term.is_empty() {
                return Err(bad());
            }
            let (coef, degree) = match term.find(['T', 'x', 'X', 't']) {
                None => (term.parse::<i64>().map_err(|_| bad())?, 0usize),
                Some(pos) => {
                    let c = term[..pos].trim_end_matches('*');
                    let c = if c.is_empty() { 1 } else { c.parse::<i64>().map_err(|_| bad())? };
                    let after = &term[pos + 1..];
                    let d = if after.is_empty() {
                        1
                    } else {
                        after.strip_prefix('^').ok_or_else(bad)?.parse::<usize>().map_err(|_| bad())?
                    };
                    (c, d)
                }
            };
            if coeffs.len() <= degree {
                coeffs.resize(degree + 1, 0);
            }
            let qi = q as i64;
            coeffs[degree] = (coeffs[degree] + sign * coef.rem_euclid(qi)).rem_euclid(qi);
        }
        Self::new(q, &coeffs)
    }
}

impl fmt::Display for FqPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && k > 0 { String::new() } else { c.to_string() };
            terms.push(match k {
                0 => coef,
                1 => format!("{coef}T"),
                _ => format!("{coef}T^{k}"),
            });
        }
        f.write_str(&terms.join("+"))
    }
}

/// Rabin's test: `f` (monic, degree `n ≥ 1`) is irreducible iff
/// `T^{q^n} ≡ T (mod f)` and `gcd(T^{q^{n/r}} − T, f) = 1` for every prime
/// `r | n`.
pub fn is_irreducible(f: &FqPolynomial) -> Result<bool> {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::InvalidPolynomial(format!("{f} is constant"))),
    };
    if !f.is_monic() {
        return Err(Error::InvalidPolynomial(format!("{f} is not monic")));
    }
    if n == 1 {
        return Ok(true);
    }
    let q = f.q();
    let t = FqPolynomial::t(q);
    // frob[k] = T^{q^k} mod f
    let mut frob = vec![t.rem(f)?];
    for k in 1..=n {
        let next = frob[k - 1].pow_mod(q, f)?;
        frob.push(next);
    }
    if frob[n] != t.rem(f)? {
        return Ok(false);
    }
    for r in prime_factors_u64(n as u64) {
        let h = frob[n / r as usize].sub(&t)?;
        if h.gcd(f)?.degree() != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All monic irreducible polynomials of the given degree over `F_q`, in
/// lexicographic order of their coefficients (low degree first, reversed).
pub fn monic_irreducibles(q: u64, degree: usize) -> Result<Vec<FqPolynomial>> {
    check_prime(q)?;
    let total = (q as usize).pow(degree as u32);
    let mut out = Vec::new();
    let mut lower = vec![0u64; degree];
    for idx in 0..total {
        let mut x = idx;
        for c in lower.iter_mut() {
            *c = (x % q as usize) as u64;
            x /= q as usize;
        }
        let f = FqPolynomial::monic_from_lower(q, &lower);
        if is_irreducible(&f)? {
            out.push(f);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(q: u64, c: &[i64]) -> FqPolynomial {
        FqPolynomial::new(q, c).unwrap()
    }

    #[test]
    fn arithmetic_over_f2() {
        let t1 = p(2, &[1, 1]);
        assert_eq!(t1.mul(&t1).unwrap(), p(2, &[1, 0, 1]));
        assert_eq!(p(2, &[0, 1, 1]).gcd(&p(2, &[0, 1])).unwrap(), p(2, &[0, 1]));
        let (quo, rem) = p(2, &[0, 0, 0, 1]).divmod(&t1).unwrap();
        assert_eq!(quo, p(2, &[1, 1, 1]));
        assert_eq!(rem, p(2, &[1]));
    }

    #[test]
    fn arithmetic_errors() {
        let a = p(2, &[1, 1]);
        assert!(matches!(a.divmod(&FqPolynomial::zero(2)), Err(Error::DivisionByZero)));
        assert!(matches!(a.add(&p(3, &[1])), Err(Error::FieldMismatch(2, 3))));
        assert!(matches!(FqPolynomial::new(4, &[1]), Err(Error::NotPrime(4))));
    }

    #[test]
    fn divmod_reconstructs() {
        let a = p(7, &[3, 5, 0, 6, 2, 1]);
        let b = p(7, &[4, 0, 3]);
        let (quo, rem) = a.divmod(&b).unwrap();
        assert!(rem.degree() < b.degree());
        assert_eq!(quo.mul(&b).unwrap().add(&rem).unwrap(), a);
    }

    #[test]
    fn irreducibility_examples() {
        assert!(is_irreducible(&p(2, &[1, 0, 1, 0, 0, 1])).unwrap());
        assert!(!is_irreducible(&p(2, &[1, 0, 1])).unwrap());
        assert!(is_irreducible(&p(5, &[-3, 0, 1])).unwrap());
        assert!(is_irreducible(&p(3, &[1, 1])).unwrap());
        assert!(is_irreducible(&p(2, &[0, 1])).unwrap());
        assert!(matches!(is_irreducible(&p(5, &[2])), Err(Error::InvalidPolynomial(_))));
        assert!(matches!(is_irreducible(&p(5, &[1, 2])), Err(Error::InvalidPolynomial(_))));
    }

    #[test]
    fn irreducible_counts_match_necklace_formula() {
        // number of monic irreducibles of degree n: (1/n) Σ_{d|n} μ(d) q^{n/d}
        assert_eq!(monic_irreducibles(2, 5).unwrap().len(), 6);
        assert_eq!(monic_irreducibles(3, 4).unwrap().len(), 18);
        assert_eq!(monic_irreducibles(7, 2).unwrap().len(), 21);
        assert_eq!(monic_irreducibles(5, 3).unwrap().len(), 40);
    }

    #[test]
    fn norms() {
        assert_eq!(p(2, &[0, 1]).ideal_norm().unwrap(), BigInt::from(2));
        assert_eq!(p(2, &[0, 1]).ideal_deg().unwrap(), 1);
        assert_eq!(p(2, &[1, 0, 1, 0, 0, 1]).ideal_norm().unwrap(), BigInt::from(32));
        assert_eq!(p(5, &[-3, 0, 1]).ideal_norm().unwrap(), BigInt::from(25));
        assert!(FqPolynomial::zero(5).ideal_norm().is_err());
    }

    #[test]
    fn parsing_forms_agree() {
        let sym = FqPolynomial::parse(2, "T^5+T^2+1").unwrap();
        assert_eq!(sym, FqPolynomial::parse(2, "[1,0,1,0,0,1]").unwrap());
        assert_eq!(sym.to_string(), "T^5+T^2+1");
        assert_eq!(FqPolynomial::parse(5, "T^2-3").unwrap(), p(5, &[2, 0, 1]));
        assert_eq!(FqPolynomial::parse(7, "T^3 + 2").unwrap(), p(7, &[2, 0, 0, 1]));
        assert_eq!(FqPolynomial::parse(5, "2*T^2 + T - 1").unwrap(), p(5, &[4, 1, 2]));
        assert_eq!(FqPolynomial::parse(5, "[ -1, 6 ]").unwrap(), p(5, &[4, 1]));
        assert_eq!(FqPolynomial::parse(2, "T").unwrap(), FqPolynomial::t(2));
        assert_eq!(FqPolynomial::parse(3, "T+T").unwrap(), p(3, &[0, 2]));
        for bad in ["", "T^", "T^^2", "1+", "[1,a]", "T3"] {
            assert!(FqPolynomial::parse(5, bad).is_err(), "{bad:?}");
        }
    }
}
