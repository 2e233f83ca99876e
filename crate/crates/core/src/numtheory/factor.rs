//! Integer factorization for display: trial division, then Brent's variant
//! of Pollard rho, with Miller-Rabin certification of every prime reported.

use std::fmt;

use num_bigint::{BigInt, BigUint, RandBigInt, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

const TRIAL_BOUND: u64 = 10_000;
/// Composite cores larger than this are reported unfactored.
const RHO_MAX_BITS: u64 = 120;
const RHO_MAX_ROUND: u64 = 1 << 20;
const RHO_ATTEMPTS: u64 = 12;
/// Bases that make Miller-Rabin deterministic below 3.3·10^24.
const SMALL_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const RANDOM_ROUNDS: usize = 40;

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut result = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod_u64(result, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    result
}

/// Deterministic Miller-Rabin for 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in SMALL_BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in SMALL_BASES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_factors_u64(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn witness_passes(n: &BigUint, a: &BigUint, d: &BigUint, s: u64) -> bool {
    let n_minus_1 = n - 1u32;
    let mut x = a.modpow(d, n);
    if x.is_one() || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = x.modpow(&BigUint::from(2u32), n);
        if x == n_minus_1 {
            return true;
        }
    }
    false
}

/// Miller-Rabin: deterministic below 2^64, otherwise the fixed small bases
/// plus 40 bases drawn from an RNG seeded by `n`, so repeated calls agree.
pub fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if n.is_even() {
        return false;
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    for a in SMALL_BASES {
        if !witness_passes(n, &BigUint::from(a), &d, s) {
            return false;
        }
    }
    let seed = n.iter_u64_digits().next().unwrap_or(0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let two = BigUint::from(2u32);
    (0..RANDOM_ROUNDS).all(|_| {
        let a = rng.gen_biguint_range(&two, &n_minus_1);
        witness_passes(n, &a, &d, s)
    })
}

fn abs_diff(a: &BigUint, b: &BigUint) -> BigUint {
    if a > b {
        a - b
    } else {
        b - a
    }
}

/// One nontrivial divisor of an odd composite `n`, or `None` when the
/// iteration budget runs out.
fn brent_rho(n: &BigUint, c: u64) -> Option<BigUint> {
    let c = BigUint::from(c);
    let f = |x: &BigUint| (x * x + &c) % n;
    let batch = 128u64;
    let mut y = BigUint::from(2u32);
    let mut r = 1u64;
    let mut q = BigUint::one();
    let mut g = BigUint::one();
    let mut x = y.clone();
    let mut ys = y.clone();
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..batch.min(r - k) {
                y = f(&y);
                q = (q * abs_diff(&x, &y)) % n;
            }
            g = q.gcd(n);
            k += batch;
        }
        r *= 2;
        if r > RHO_MAX_ROUND && g.is_one() {
            return None;
        }
    }
    if &g == n {
        loop {
            ys = f(&ys);
            g = abs_diff(&x, &ys).gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    (&g != n).then_some(g)
}

/// Sign, certified prime powers, and any remainder that could not be split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInteger {
    pub negative: bool,
    /// Distinct primes in ascending order with their exponents.
    pub factors: Vec<(BigUint, u32)>,
    /// Product of composite pieces that were not split; `None` when the
    /// factorization is complete.
    pub cofactor: Option<BigUint>,
}

impl FactoredInteger {
    pub fn value(&self) -> BigInt {
        let mut v: BigUint = self.factors.iter().map(|(p, e)| p.pow(*e)).product();
        if let Some(c) = &self.cofactor {
            v *= c;
        }
        BigInt::from_biguint(if self.negative { Sign::Minus } else { Sign::Plus }, v)
    }

    pub fn is_complete(&self) -> bool {
        self.cofactor.is_none()
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        if let Some(c) = &self.cofactor {
            parts.push(format!("C{}", c.bits()));
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        if self.negative {
            f.write_str("-")?;
        }
        f.write_str(&parts.join("·"))
    }
}

pub fn factor_integer(n: &BigInt) -> Result<FactoredInteger> {
    if n.is_zero() {
        return Err(Error::FactorZero);
    }
    let negative = n.sign() == Sign::Minus;
    let mut m = n.magnitude().clone();
    let mut primes: Vec<BigUint> = Vec::new();

    let mut p = 2u64;
    while p <= TRIAL_BOUND && BigUint::from(p * p) <= m {
        let bp = BigUint::from(p);
        while (&m % &bp).is_zero() {
            m /= &bp;
            primes.push(bp.clone());
        }
        p += if p == 2 { 1 } else { 2 };
    }

    let mut cofactor: Option<BigUint> = None;
    let mut pending = vec![m];
    while let Some(x) = pending.pop() {
        if x.is_one() {
            continue;
        }
        if is_probable_prime(&x) {
            primes.push(x);
            continue;
        }
        let split = if x.bits() > RHO_MAX_BITS {
            None
        } else {
            (1..=RHO_ATTEMPTS).find_map(|c| brent_rho(&x, c))
        };
        match split {
            Some(d) => {
                pending.push(&x / &d);
                pending.push(d);
            }
            None => {
                cofactor = Some(cofactor.map_or(x.clone(), |c| c * &x));
            }
        }
    }

    primes.sort();
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(FactoredInteger { negative, factors, cofactor })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(n: i64) -> String {
        factor_integer(&BigInt::from(n)).unwrap().to_string()
    }

    #[test]
    fn desk_examples() {
        assert_eq!(render(1895575), "5^2·11·61·113");
        assert_eq!(render(36), "2^2·3^2");
        assert_eq!(render(20801), "11·31·61");
        assert_eq!(render(1), "1");
        assert_eq!(render(-12), "-2^2·3");
        assert!(matches!(factor_integer(&BigInt::zero()), Err(Error::FactorZero)));
    }

    #[test]
    fn rho_splits_products_of_large_primes() {
        // 1000003 · 1000033 · 6525499 · 13235507
        let n: BigInt = [1_000_003u64, 1_000_033, 6_525_499, 13_235_507].iter().map(|&p| BigInt::from(p)).product();
        let f = factor_integer(&n).unwrap();
        assert!(f.is_complete());
        assert_eq!(f.to_string(), "1000003·1000033·6525499·13235507");
        assert_eq!(f.value(), n);
    }

    #[test]
    fn large_primes_are_certified() {
        // 2^89 - 1 and 2^127 - 1 are Mersenne primes
        let m89 = (BigUint::one() << 89u32) - 1u32;
        let m127 = (BigUint::one() << 127u32) - 1u32;
        assert!(is_probable_prime(&m89));
        assert!(is_probable_prime(&m127));
        assert!(!is_probable_prime(&((BigUint::one() << 67u32) - 1u32)));
        let f = factor_integer(&BigInt::from(m127.clone())).unwrap();
        assert_eq!(f.factors, vec![(m127, 1)]);
    }

    #[test]
    fn oversized_cores_are_flagged() {
        // product of two ~64-bit primes (2^61 - 1 and 2^64 - 59): 125 bits
        let a = (BigUint::one() << 61u32) - 1u32;
        let b = (BigUint::one() << 64u32) - 59u32;
        assert!(is_probable_prime(&a) && is_probable_prime(&b));
        let n = BigInt::from(&a * &b * 4u32);
        let f = factor_integer(&n).unwrap();
        assert_eq!(f.factors, vec![(BigUint::from(2u32), 2)]);
        assert_eq!(f.cofactor, Some(&a * &b));
        assert_eq!(f.value(), n);
        assert_eq!(f.to_string(), "2^2·C125");
    }

    #[test]
    fn small_primality_agrees_with_sieve() {
        let limit = 5000usize;
        let mut sieve = vec![true; limit];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..limit {
            if sieve[i] {
                for j in (i * i..limit).step_by(i) {
                    sieve[j] = false;
                }
            }
        }
        for (n, &prime) in sieve.iter().enumerate() {
            assert_eq!(is_prime_u64(n as u64), prime, "{n}");
        }
        assert_eq!(prime_factors_u64(360), vec![2, 3, 5]);
        assert_eq!(prime_factors_u64(1), Vec::<u64>::new());
    }
}
