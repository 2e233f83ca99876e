//! Fixed regression values for the component-group formulas, rendered as a
//! pass/fail table.

use std::fmt::Write as _;

use compgroup::numtheory::{monic_irreducibles, FqPolynomial};
use compgroup::poly::IntPolynomial;
use compgroup::quaternion::{closed_form_h1, phi_ff, phi_q, FfInput, QInput};
use compgroup::Result;
use num_bigint::BigInt;
use num_rational::BigRational;

use crate::failure::Failure;

struct Row {
    name: String,
    passed: bool,
    detail: String,
}

fn row(name: impl Into<String>, result: Result<(bool, String)>) -> Row {
    match result {
        Ok((passed, detail)) => Row { name: name.into(), passed, detail },
        Err(e) => Row { name: name.into(), passed: false, detail: format!("error: {e}") },
    }
}

/// `(x − 3)(x² + x − 1)(x⁸ + x⁷ − 11x⁶ − 8x⁵ + 38x⁴ + 16x³ − 44x² − 4x + 4)`
fn degree_five_charpoly() -> IntPolynomial {
    [
        IntPolynomial::from_i64(&[-3, 1]),
        IntPolynomial::from_i64(&[-1, 1, 1]),
        IntPolynomial::from_i64(&[4, -4, -44, 16, 38, -8, -11, 1, 1]),
    ]
    .into_iter()
    .product()
}

fn degree_five_case() -> Vec<Row> {
    let input = || -> Result<FfInput> {
        Ok(FfInput::with_charpoly(
            FqPolynomial::parse(2, "T")?,
            vec![FqPolynomial::parse(2, "T^5+T^2+1")?],
            degree_five_charpoly(),
        ))
    };
    let report = input().and_then(|i| phi_ff(&i));
    let int = |n: i64| BigRational::from_integer(n.into());
    let mut rows = vec![row(
        "q=2 p=T d'=T^5+T^2+1: order",
        report.as_ref().map_err(Clone::clone).map(|r| {
            let rendered = format!("{} = {}", r.order, r.factored);
            (rendered == "1895575 = 5^2·11·61·113", rendered)
        }),
    )];
    for (name, expected) in [("h(d')", int(11)), ("m(d')", BigRational::new(31.into(), 3.into())), ("n(d)", int(2))] {
        rows.push(row(
            format!("q=2 p=T d'=T^5+T^2+1: {name}"),
            report.as_ref().map_err(Clone::clone).map(|r| match r.intermediate(name) {
                Some(v) => (*v == expected, v.to_string()),
                None => (false, "missing".into()),
            }),
        ));
    }
    rows
}

fn closed_form_sweep() -> Row {
    let sweep = || -> Result<(bool, String)> {
        let mut cases = 0;
        for q in [2u64, 3, 5, 7] {
            let ps: Vec<FqPolynomial> = (1..=4).map(|d| monic_irreducibles(q, d)).collect::<Result<Vec<_>>>()?.concat();
            let qs: Vec<FqPolynomial> = (1..=2).map(|d| monic_irreducibles(q, d)).collect::<Result<Vec<_>>>()?.concat();
            for p in &ps {
                for qp in qs.iter().filter(|f| *f != p) {
                    let value = closed_form_h1(p, qp)?;
                    let n = p.ideal_norm()? + 1;
                    let general = phi_ff(&FfInput::with_charpoly(p.clone(), vec![qp.clone()], IntPolynomial::linear(n)))?;
                    if general.order != value {
                        return Ok((false, format!("q={q} p={p} q'={qp}: {value} vs {}", general.order)));
                    }
                    cases += 1;
                }
            }
        }
        Ok((true, format!("{cases} cases")))
    };
    row("class number one closed forms, q in {2,3,5,7}", sweep())
}

fn rational_cases() -> Vec<Row> {
    let cases: [(&str, QInput, i64); 6] = [
        ("d=6 as p=3 d'=2", QInput::new(3, vec![2]), 1),
        ("d=6 as p=2 d'=3", QInput::new(2, vec![3]), 1),
        ("d=10 as p=5 d'=2", QInput::new(5, vec![2]), 1),
        ("d=22 as p=11 d'=2", QInput::new(11, vec![2]), 1),
        ("d=22 as p=2 d'=11", QInput::with_charpoly(2, vec![11], IntPolynomial::from_i64(&[-6, -1, 1])), 1),
        ("d=26 as p=13 d'=2", QInput::new(13, vec![2]), 21),
    ];
    cases
        .into_iter()
        .map(|(name, input, expected)| {
            row(
                name,
                phi_q(&input).map(|r| (r.order == BigInt::from(expected), format!("{} (expected {expected})", r.order))),
            )
        })
        .collect()
}

pub fn reproduce(out: &mut String) -> crate::commands::Outcome {
    let mut rows = degree_five_case();
    rows.push(closed_form_sweep());
    rows.extend(rational_cases());
    let width = rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
    for r in &rows {
        let mark = if r.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{mark}  {:width$}  {}", r.name, r.detail);
    }
    let failed = rows.iter().filter(|r| !r.passed).count();
    let _ = writeln!(out, "{} passed, {failed} failed", rows.len() - failed);
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Check(format!("{failed} regression checks failed")))
    }
}
