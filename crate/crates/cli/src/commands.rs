use std::collections::HashSet;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::thread;

use compgroup::graph::{double_cover, parse_graph, write_graph, LabeledGraph};
use compgroup::homology::{component_group, discriminant};
use compgroup::quaternion::{parse_input, phi_ff, phi_q, QuaternionInput};
use compgroup::spectral::{char_poly, double_cover_charpoly_identity, laplacian_matrix, verify_spectral_discriminant};
use compgroup::Error;

use crate::failure::Failure;

pub type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|source| Failure::Io { path: path.to_path_buf(), source })
}

fn load_graph(path: &Path) -> Result<LabeledGraph, Failure> {
    Ok(parse_graph(&read(path)?)?)
}

fn ok_mark(equal: bool) -> &'static str {
    if equal {
        "OK"
    } else {
        "FAIL"
    }
}

pub fn graph_invariants(path: &Path, out: &mut String) -> Outcome {
    let g = load_graph(path)?.graph;
    g.require_connected()?;
    let d = discriminant(&g)?;
    let group = component_group(&g)?;
    let factors: Vec<String> = group.invariant_factors.iter().map(ToString::to_string).collect();
    let check = verify_spectral_discriminant(&g)?;
    let _ = writeln!(out, "vertices = {}", g.vertex_count());
    let _ = writeln!(out, "darts = {}", g.dart_count());
    let _ = writeln!(out, "rank H1 = {}", group.rank());
    let _ = writeln!(out, "D(G) = {d}");
    let _ = writeln!(out, "invariant factors = [{}]", factors.join(", "));
    let _ = writeln!(out, "component group = {group}");
    let _ = writeln!(out, "m(G) = {}", g.mass());
    let _ = writeln!(out, "char(Laplacian) = {}", char_poly(&laplacian_matrix(&g)));
    let _ = writeln!(out, "spectral formula: {} = {} {}", check.lhs, check.rhs, ok_mark(check.equal));
    if check.equal {
        Ok(())
    } else {
        Err(Failure::Check(format!("D(G) = {} but the spectral side is {}", check.lhs, check.rhs)))
    }
}

pub fn graph_verify(path: &Path, out: &mut String) -> Outcome {
    let g = load_graph(path)?.graph;
    let check = verify_spectral_discriminant(&g)?;
    let _ = writeln!(out, "{} = {} {}", check.lhs, check.rhs, ok_mark(check.equal));
    if check.equal {
        Ok(())
    } else {
        Err(Failure::Check(format!("D(G) = {} but the spectral side is {}", check.lhs, check.rhs)))
    }
}

/// Labels for the two sheets, `<label>_0` and `<label>_1`, unless that would
/// collide with another label.
fn sheet_labels(labels: &[String]) -> Option<Vec<String>> {
    let out: Vec<String> = (0..2).flat_map(|s| labels.iter().map(move |l| format!("{l}_{s}"))).collect();
    let distinct: HashSet<&String> = out.iter().collect();
    (distinct.len() == out.len()).then_some(out)
}

pub fn graph_double_cover(path: &Path, dest: Option<&Path>, out: &mut String) -> Outcome {
    let labeled = load_graph(path)?;
    let (cover, _) = double_cover(&labeled.graph);
    let vertex_labels = sheet_labels(&labeled.vertex_labels);
    let dart_labels = sheet_labels(&labeled.dart_labels);
    let text = write_graph(&cover, vertex_labels.as_deref(), dart_labels.as_deref());
    let identity = double_cover_charpoly_identity(&labeled.graph);
    let report = format!(
        "char(adjacency of cover) = {}\n(-1)^h P(x) P(-x) = {}\nidentity: {}\n",
        identity.lhs,
        identity.rhs,
        ok_mark(identity.equal)
    );
    match dest {
        Some(dest) => {
            fs::write(dest, &text).map_err(|source| Failure::Io { path: dest.to_path_buf(), source })?;
            out.push_str(&report);
        }
        None => {
            // keep stdout re-parseable as a graph file
            out.push_str(&text);
            for line in report.lines() {
                let _ = writeln!(out, "# {line}");
            }
        }
    }
    if identity.equal {
        Ok(())
    } else {
        Err(Failure::Check("double cover characteristic polynomial identity".into()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    FunctionField,
    Rational,
}

pub fn phi(path: &Path, field: Field, out: &mut String) -> Outcome {
    let parsed = parse_input(&read(path)?)?;
    for w in &parsed.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    let report = match (field, &parsed.input) {
        (Field::FunctionField, QuaternionInput::FunctionField(input)) => phi_ff(input)?,
        (Field::Rational, QuaternionInput::Rational(input)) => phi_q(input)?,
        (Field::FunctionField, _) => {
            return Err(Error::InvalidInput("input declares `field q`; use phi-q".into()).into())
        }
        (Field::Rational, _) => {
            return Err(Error::InvalidInput("input declares `field ff`; use phi-ff".into()).into())
        }
    };
    let _ = writeln!(out, "{report}");
    Ok(())
}

/// Runs `task` on every path, at most `jobs` at a time, and returns the
/// results in input order.
pub fn batch<F>(paths: &[PathBuf], jobs: usize, task: F) -> Vec<(String, Outcome)>
where
    F: Fn(&Path, &mut String) -> Outcome + Sync,
{
    let run = |p: &PathBuf| {
        let mut out = String::new();
        let status = task(p, &mut out);
        (out, status)
    };
    if jobs <= 1 || paths.len() <= 1 {
        return paths.iter().map(run).collect();
    }
    let chunk = paths.len().div_ceil(jobs);
    thread::scope(|s| {
        let handles: Vec<_> = paths.chunks(chunk).map(|c| s.spawn(|| c.iter().map(run).collect::<Vec<_>>())).collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}
