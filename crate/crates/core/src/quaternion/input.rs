//! Line-oriented input files for [`phi_ff`](super::phi_ff) and
//! [`phi_q`](super::phi_q).
//!
//! ```text
//! field ff
//! q 2
//! p T
//! dprime T^5+T^2+1
//! charpoly 4 0 -1 ...        # low degree first
//! ```
//!
//! Instead of `charpoly`, a `brandt` line may be followed by `h` rows of `h`
//! integers. `weights w1 ... wh` is optional. Lists in `dprime` are
//! whitespace separated, so symbolic polynomials there must not contain
//! spaces; the bracket form `[c0, c1, ...]` may.

use num_bigint::BigInt;

use super::{FfInput, QInput};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::numtheory::FqPolynomial;
use crate::poly::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuaternionInput {
    FunctionField(FfInput),
    Rational(QInput),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedInput {
    pub input: QuaternionInput,
    /// Normalizations applied while reading, e.g. scaling to monic.
    pub warnings: Vec<String>,
}

#[derive(Default)]
struct Raw {
    field: Option<(usize, String)>,
    q: Option<(usize, u64)>,
    p: Option<(usize, String)>,
    dprime: Option<(usize, Vec<String>)>,
    charpoly: Option<IntPolynomial>,
    brandt: Option<IntMatrix>,
    weights: Option<Vec<u64>>,
}

/// Splits on whitespace, keeping `[...]` groups together.
fn tokens(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0usize;
    for c in s.chars() {
        match c {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            _ => {}
        }
        if c.is_whitespace() && depth == 0 {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
        } else {
            cur.push(c);
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn number<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse().map_err(|_| Error::parse(line, format!("expected {what}, found {tok:?}")))
}

fn set_once<T>(slot: &mut Option<T>, value: T, line: usize, key: &str) -> Result<()> {
    if slot.is_some() {
        return Err(Error::parse(line, format!("duplicate key {key:?}")));
    }
    *slot = Some(value);
    Ok(())
}

fn ff_poly(line: usize, q: u64, text: &str, warnings: &mut Vec<String>) -> Result<FqPolynomial> {
    let f = FqPolynomial::parse(q, text).map_err(|e| match e {
        Error::InvalidPolynomial(msg) => Error::parse(line, msg),
        other => other,
    })?;
    if f.is_zero() {
        return Err(Error::parse(line, "zero polynomial"));
    }
    if !f.is_monic() {
        let monic = f.to_monic();
        warnings.push(format!("line {line}: {f} normalized to monic {monic}"));
        return Ok(monic);
    }
    Ok(f)
}

pub fn parse_input(text: &str) -> Result<ParsedInput> {
    let mut raw = Raw::default();
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()));
    while let Some((ln, line)) = lines.next() {
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        let toks = tokens(rest);
        let need_args = |n: usize| -> Result<()> {
            if toks.len() < n {
                Err(Error::parse(ln, format!("{key:?} needs a value")))
            } else {
                Ok(())
            }
        };
        match key {
            "field" => {
                need_args(1)?;
                set_once(&mut raw.field, (ln, toks[0].clone()), ln, key)?;
            }
            "q" => {
                need_args(1)?;
                set_once(&mut raw.q, (ln, number(ln, &toks[0], "a prime")?), ln, key)?;
            }
            "p" => {
                need_args(1)?;
                set_once(&mut raw.p, (ln, rest.to_string()), ln, key)?;
            }
            "dprime" => {
                need_args(1)?;
                set_once(&mut raw.dprime, (ln, toks), ln, key)?;
            }
            "charpoly" => {
                need_args(1)?;
                let coeffs = toks
                    .iter()
                    .map(|t| number::<BigInt>(ln, t, "an integer coefficient"))
                    .collect::<Result<Vec<_>>>()?;
                set_once(&mut raw.charpoly, IntPolynomial::new(coeffs), ln, key)?;
            }
            "weights" => {
                need_args(1)?;
                let w = toks.iter().map(|t| number::<u64>(ln, t, "a weight")).collect::<Result<Vec<_>>>()?;
                if w.contains(&0) {
                    return Err(Error::parse(ln, "weights must be positive"));
                }
                set_once(&mut raw.weights, w, ln, key)?;
            }
            "brandt" => {
                let mut rows: Vec<Vec<BigInt>> = Vec::new();
                let mut width = None;
                while width.is_none_or(|w| rows.len() < w) {
                    let Some((rl, row)) = lines.next() else {
                        return Err(Error::parse(ln, "Brandt matrix ends early"));
                    };
                    if row.is_empty() {
                        continue;
                    }
                    let entries = row
                        .split_whitespace()
                        .map(|t| number::<BigInt>(rl, t, "an integer matrix entry"))
                        .collect::<Result<Vec<_>>>()?;
                    let w = *width.get_or_insert(entries.len());
                    if entries.len() != w {
                        return Err(Error::parse(rl, format!("row has {} entries, expected {w}", entries.len())));
                    }
                    rows.push(entries);
                }
                let m = IntMatrix::from_rows(rows).map_err(|e| Error::parse(ln, e.to_string()))?;
                set_once(&mut raw.brandt, m, ln, key)?;
            }
            other => return Err(Error::parse(ln, format!("unknown key {other:?}"))),
        }
    }
    build(raw)
}

fn build(raw: Raw) -> Result<ParsedInput> {
    let (field_line, field) = raw.field.ok_or_else(|| Error::parse(1, "missing \"field\" line"))?;
    let (p_line, p_text) = raw.p.ok_or_else(|| Error::parse(field_line, "missing \"p\" line"))?;
    let (d_line, d_toks) = raw.dprime.ok_or_else(|| Error::parse(field_line, "missing \"dprime\" line"))?;
    let mut warnings = Vec::new();
    let mut charpoly = raw.charpoly;
    if let Some(p) = &charpoly {
        let lead = p.coeffs().last().cloned();
        match lead {
            None => return Err(Error::parse(field_line, "charpoly is zero")),
            Some(l) if l != BigInt::from(1) => {
                if p.coeffs().iter().all(|c| c % &l == BigInt::from(0)) {
                    let monic = IntPolynomial::new(p.coeffs().iter().map(|c| c / &l).collect());
                    warnings.push(format!("charpoly divided by leading coefficient {l}"));
                    charpoly = Some(monic);
                } else {
                    warnings.push(format!("charpoly has leading coefficient {l}"));
                }
            }
            Some(_) => {}
        }
    }
    let input = match field.as_str() {
        "ff" => {
            let (_, q) = raw.q.ok_or_else(|| Error::parse(field_line, "function field input needs a \"q\" line"))?;
            let p = ff_poly(p_line, q, &p_text, &mut warnings)?;
            let dprime = d_toks
                .iter()
                .map(|t| ff_poly(d_line, q, t, &mut warnings))
                .collect::<Result<Vec<_>>>()?;
            QuaternionInput::FunctionField(FfInput { p, dprime, charpoly, brandt: raw.brandt, weights: raw.weights })
        }
        "q" => {
            if let Some((ql, _)) = raw.q {
                return Err(Error::parse(ql, "\"q\" applies only to field ff"));
            }
            let p = number(p_line, p_text.trim(), "a prime")?;
            let dprime = d_toks.iter().map(|t| number(d_line, t, "a prime")).collect::<Result<Vec<u64>>>()?;
            QuaternionInput::Rational(QInput { p, dprime, charpoly, brandt: raw.brandt, weights: raw.weights })
        }
        other => return Err(Error::parse(field_line, format!("field must be ff or q, found {other:?}"))),
    };
    Ok(ParsedInput { input, warnings })
}
