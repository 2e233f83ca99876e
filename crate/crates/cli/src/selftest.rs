//! Randomized consistency checks at reduced size, reproducible from a seed.

use std::fmt::Write as _;

use compgroup::generators::{random_connected, RandomGraphParams};
use compgroup::graph::{double_cover, parse_graph, quotient_by_involution, write_graph};
use compgroup::homology::{
    component_group, cycle_basis, discriminant, discriminant_with, estar, gram_matrix, BasisChoice,
};
use compgroup::numtheory::{factor_integer, kronecker};
use compgroup::spectral::{double_cover_charpoly_identity, verify_spectral_discriminant};
use compgroup::{Result, WeightedGraph};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::failure::Failure;

const RESELECTIONS: usize = 5;

fn random_choice<R: Rng>(g: &WeightedGraph, rng: &mut R) -> BasisChoice {
    let mut order: Vec<usize> = (0..g.dart_count()).collect();
    order.shuffle(rng);
    let section = estar(g).into_iter().map(|e| if rng.gen_bool(0.5) { e } else { g.inverse(e) }).collect();
    BasisChoice { root: rng.gen_range(0..g.vertex_count()), dart_order: Some(order), section: Some(section) }
}

/// Returns a description of the first counterexample, if any.
type Check = fn(&WeightedGraph, &mut ChaCha8Rng) -> Result<Option<String>>;

fn spectral_formula(g: &WeightedGraph, _: &mut ChaCha8Rng) -> Result<Option<String>> {
    let c = verify_spectral_discriminant(g)?;
    Ok((!c.equal).then(|| format!("D = {} vs {}", c.lhs, c.rhs)))
}

fn basis_independence(g: &WeightedGraph, rng: &mut ChaCha8Rng) -> Result<Option<String>> {
    let d = discriminant(g)?;
    for _ in 0..RESELECTIONS {
        let other = discriminant_with(g, &random_choice(g, rng))?;
        if other != d {
            return Ok(Some(format!("{d} vs {other}")));
        }
    }
    Ok(None)
}

fn smith_consistency(g: &WeightedGraph, _: &mut ChaCha8Rng) -> Result<Option<String>> {
    let group = component_group(g)?;
    let d = discriminant(g)?;
    Ok((group.order != d).then(|| format!("{} vs {d}", group.order)))
}

fn cover_identity(g: &WeightedGraph, _: &mut ChaCha8Rng) -> Result<Option<String>> {
    let id = double_cover_charpoly_identity(g);
    Ok((!id.equal).then(|| format!("{} vs {}", id.lhs, id.rhs)))
}

fn cover_round_trip(g: &WeightedGraph, _: &mut ChaCha8Rng) -> Result<Option<String>> {
    let (cover, tau) = double_cover(g);
    let back = quotient_by_involution(&cover, &tau)?;
    let reparsed = parse_graph(&write_graph(&cover, None, None))?.graph;
    Ok((back != *g || reparsed != cover).then(|| "quotient or re-parse differs".to_string()))
}

fn graph_checks() -> [(&'static str, Check); 5] {
    [
        ("spectral formula for D(G)", spectral_formula),
        ("D(G) independent of basis", basis_independence),
        ("Smith factors multiply to D(G)", smith_consistency),
        ("double cover characteristic polynomial", cover_identity),
        ("double cover quotient round trip", cover_round_trip),
    ]
}

fn number_checks(rng: &mut ChaCha8Rng, cases: usize) -> Vec<(&'static str, Option<String>)> {
    let mut kron = None;
    let mut fact = None;
    for _ in 0..cases {
        let a = rng.gen_range(-1000i128..1000);
        let b = rng.gen_range(-1000i128..1000);
        let n = rng.gen_range(1i128..1000);
        if kron.is_none() && kronecker(a * b, n) != kronecker(a, n) * kronecker(b, n) {
            kron = Some(format!("({a}·{b} / {n})"));
        }
        let x: BigInt = (0..3).map(|_| BigInt::from(rng.gen_range(2u64..1 << 32))).product();
        match factor_integer(&x) {
            Ok(f) if f.value() == x => {}
            Ok(f) => fact = fact.or(Some(format!("{x} rendered as {f}"))),
            Err(e) => fact = fact.or(Some(e.to_string())),
        }
    }
    vec![("Kronecker symbol multiplicativity", kron), ("factorization reconstructs input", fact)]
}

pub fn selftest(seed: u64, cases: usize, out: &mut String) -> std::result::Result<(), Failure> {
    let params = RandomGraphParams::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graphs: Vec<WeightedGraph> = (0..cases).map(|_| random_connected(&mut rng, &params)).collect();
    let mut results: Vec<(&str, Option<String>)> = Vec::new();
    for (name, check) in graph_checks() {
        let mut found = None;
        for (i, g) in graphs.iter().enumerate() {
            let outcome = check(g, &mut rng).unwrap_or_else(|e| Some(format!("error: {e}")));
            if let Some(msg) = outcome {
                found = Some(format!("graph #{i}: {msg}"));
                break;
            }
        }
        results.push((name, found));
    }
    results.extend(number_checks(&mut rng, cases));
    let definite = graphs.iter().all(|g| {
        cycle_basis(g).and_then(|b| gram_matrix(g, &b)).map(|m| m.is_positive_definite()).unwrap_or(false)
    });
    results.push(("Gram matrix positive definite", (!definite).then(|| "leading minor not positive".to_string())));

    let _ = writeln!(out, "seed = {seed}, cases = {cases}");
    let mut failed = 0;
    for (name, problem) in &results {
        match problem {
            None => {
                let _ = writeln!(out, "PASS  {name}");
            }
            Some(msg) => {
                failed += 1;
                let _ = writeln!(out, "FAIL  {name}: {msg}");
            }
        }
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Check(format!("{failed} self-test checks failed")))
    }
}
