use compgroup::error::ErrorKind;
use compgroup::numtheory::{monic_irreducibles, FqPolynomial};
use compgroup::poly::IntPolynomial;
use compgroup::quaternion::{
    class_number_ff, class_number_q, closed_form_h1, h_weight_ff, mass_ff, n_d, phi_ff, phi_q, FfInput, QInput,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use proptest::prelude::*;

fn primes_up_to(q: u64, degree: usize) -> Vec<FqPolynomial> {
    (1..=degree).flat_map(|d| monic_irreducibles(q, d).unwrap()).collect()
}

/// `(x − N) Π (x − r_i)`.
fn poly_with_roots(n: &BigInt, roots: &[i64]) -> IntPolynomial {
    let mut p = IntPolynomial::linear(n.clone());
    for &r in roots {
        p = &p * &IntPolynomial::from_i64(&[-r, 1]);
    }
    p
}

/// A valid function-field configuration with class number at most 12.
fn ff_config() -> impl Strategy<Value = (FqPolynomial, Vec<FqPolynomial>)> {
    (prop::sample::select(vec![2u64, 3]), any::<u64>(), prop::sample::select(vec![1usize, 3])).prop_filter_map(
        "class number too large",
        |(q, seed, count)| {
            let pool = primes_up_to(q, 3);
            let mut idx: Vec<usize> = Vec::new();
            let mut k = seed;
            while idx.len() < count + 1 {
                let i = (k % pool.len() as u64) as usize;
                k = k / pool.len() as u64 + 7919;
                if !idx.contains(&i) {
                    idx.push(i);
                }
            }
            let p = pool[idx[0]].clone();
            let dprime: Vec<_> = idx[1..].iter().map(|&i| pool[i].clone()).collect();
            let h = class_number_ff(q, &dprime).ok()?;
            (h <= BigInt::from(12)).then_some((p, dprime))
        },
    )
}

proptest! {
    #[test]
    fn n_d_forms_agree_and_are_integral((p, dprime) in ff_config()) {
        let q = p.q();
        let nd = n_d(q, &p, &dprime).unwrap();
        prop_assert!(!nd.is_negative());
        let hw = h_weight_ff(q, &dprime).unwrap();
        let h = class_number_ff(q, &dprime).unwrap();
        let m = mass_ff(q, &dprime).unwrap();
        prop_assert!(h.is_positive());
        prop_assert!(BigRational::from_integer(h) >= m);
        prop_assert!(!hw.is_negative());
    }

    #[test]
    fn phi_ff_is_integral_or_rejected((p, dprime) in ff_config(), roots in prop::collection::vec(-20i64..20, 12)) {
        let q = p.q();
        let h = class_number_ff(q, &dprime).unwrap().to_usize().unwrap();
        let n = p.ideal_norm().unwrap() + 1;
        let charpoly = poly_with_roots(&n, &roots[..h - 1]);
        match phi_ff(&FfInput::with_charpoly(p, dprime, charpoly)) {
            Ok(report) => {
                prop_assert!(report.order.is_positive());
                prop_assert_eq!(report.factored.value(), report.order);
            }
            Err(e) => prop_assert_eq!(e.kind(), ErrorKind::Arithmetic, "{}", e),
        }
    }

    #[test]
    fn phi_ff_ignores_prime_order((p, dprime) in ff_config(), roots in prop::collection::vec(-20i64..20, 12)) {
        let q = p.q();
        let h = class_number_ff(q, &dprime).unwrap().to_usize().unwrap();
        let n = p.ideal_norm().unwrap() + 1;
        let charpoly = poly_with_roots(&n, &roots[..h - 1]);
        let forward = phi_ff(&FfInput::with_charpoly(p.clone(), dprime.clone(), charpoly.clone()));
        let mut reversed = dprime.clone();
        reversed.reverse();
        reversed.rotate_left(1);
        let backward = phi_ff(&FfInput::with_charpoly(p, reversed, charpoly));
        match (forward, backward) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a.order, b.order),
            (Err(a), Err(b)) => prop_assert_eq!(a.to_string(), b.to_string()),
            (a, b) => prop_assert!(false, "{:?} vs {:?}", a, b),
        }
    }

    #[test]
    fn phi_ff_rejects_polynomials_missing_the_root((p, dprime) in ff_config(), roots in prop::collection::vec(-20i64..20, 12), shift in 1i64..5) {
        let q = p.q();
        let h = class_number_ff(q, &dprime).unwrap().to_usize().unwrap();
        let n = p.ideal_norm().unwrap() + 1;
        let mut coeffs = poly_with_roots(&n, &roots[..h - 1]).coeffs().to_vec();
        coeffs[0] += shift;
        let err = phi_ff(&FfInput::with_charpoly(p, dprime, IntPolynomial::new(coeffs))).unwrap_err();
        prop_assert_eq!(err.kind(), ErrorKind::Validation);
    }

    #[test]
    fn phi_q_is_integral_or_rejected(
        p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13, 17, 19, 23]),
        dprime in prop::sample::select(vec![vec![5u64], vec![7], vec![11], vec![13], vec![17], vec![2, 3, 5], vec![2, 3, 7]]),
        roots in prop::collection::vec(-30i64..30, 8),
    ) {
        prop_assume!(!dprime.contains(&p));
        let h = class_number_q(&dprime).unwrap().to_usize().unwrap();
        prop_assume!(h <= 9);
        let charpoly = poly_with_roots(&BigInt::from(p + 1), &roots[..h - 1]);
        match phi_q(&QInput::with_charpoly(p, dprime, charpoly)) {
            Ok(report) => prop_assert!(report.order.is_positive()),
            Err(e) => prop_assert_eq!(e.kind(), ErrorKind::Arithmetic, "{}", e),
        }
    }
}

#[test]
fn closed_forms_agree_with_general_formula() {
    let mut checked = 0;
    for q in [2u64, 3, 5, 7] {
        let ps = primes_up_to(q, 4);
        let qprimes = primes_up_to(q, 2);
        for p in &ps {
            for qp in qprimes.iter().filter(|f| *f != p) {
                // closed_form_h1 runs phi_ff internally and errors on disagreement
                let value = closed_form_h1(p, qp).unwrap();
                let n = p.ideal_norm().unwrap() + 1;
                let general = phi_ff(&FfInput::with_charpoly(p.clone(), vec![qp.clone()], IntPolynomial::linear(n))).unwrap();
                assert_eq!(value, general.order, "q = {q}, p = {p}, q' = {qp}");
                checked += 1;
            }
        }
    }
    assert!(checked > 1000);
}
