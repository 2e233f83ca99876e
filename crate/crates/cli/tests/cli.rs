use std::path::PathBuf;
use std::process::{Command, Output};

use compgroup::graph::{double_cover, isomorphic, parse_graph};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn compgroup(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_compgroup")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

#[test]
fn banana_invariants() {
    let o = compgroup(&["graph-invariants", &path("banana.graph")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("D(G) = 11\n"), "{text}");
    assert!(text.contains("component group = Z/11"), "{text}");
    assert!(text.contains("spectral formula: 11 = 11 OK"), "{text}");
}

#[test]
fn verify_exits_zero_on_equality() {
    let o = compgroup(&["graph-verify", &path("triangle.graph"), &path("folded.graph")]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn double_cover_stdout_reparses() {
    let o = compgroup(&["graph-double-cover", &path("folded.graph")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("# identity: OK"), "{text}");
    let cover = parse_graph(&text).unwrap().graph;
    let base = parse_graph(&std::fs::read_to_string(data("folded.graph")).unwrap()).unwrap().graph;
    assert!(isomorphic(&cover, &double_cover(&base).0));
}

#[test]
fn double_cover_to_file() {
    let dest = std::env::temp_dir().join(format!("compgroup-cover-{}.graph", std::process::id()));
    let o = compgroup(&["graph-double-cover", &path("banana.graph"), "--out", &dest.to_string_lossy()]);
    assert_eq!(o.status.code(), Some(0));
    let written = std::fs::read_to_string(&dest).unwrap();
    std::fs::remove_file(&dest).unwrap();
    let cover = parse_graph(&written).unwrap();
    assert_eq!(cover.graph.vertex_count(), 4);
    assert!(cover.vertex_labels.contains(&"u_1".to_string()));
}

#[test]
fn quaternion_orders() {
    for (file, order) in [("d22.q", "order = 1"), ("d26.q", "order = 21"), ("d22_brandt.q", "order = 1")] {
        let o = compgroup(&["phi-q", &path(file)]);
        assert_eq!(o.status.code(), Some(0), "{file}");
        assert!(stdout(&o).contains(order), "{file}: {}", stdout(&o));
    }
    let o = compgroup(&["phi-ff", &path("degree5.ff")]);
    assert!(stdout(&o).contains("order = 1895575 = 5^2·11·61·113"));
}

#[test]
fn exit_codes() {
    // wrong field is a validation error
    assert_eq!(compgroup(&["phi-q", &path("degree5.ff")]).status.code(), Some(1));
    // a graph file is not a quaternion input
    assert_eq!(compgroup(&["phi-q", &path("banana.graph")]).status.code(), Some(3));
    assert_eq!(compgroup(&["graph-verify", "/nonexistent/file.graph"]).status.code(), Some(3));
    assert_eq!(compgroup(&["graph-verify", &path("d22.q")]).status.code(), Some(3));
}

#[test]
fn non_integral_order_exits_two() {
    let file = std::env::temp_dir().join(format!("compgroup-nonint-{}.ff", std::process::id()));
    // (x − 3)·x^10 has the right root and degree but gives a non-integral order
    let coeffs = ["0"; 10].join(" ");
    std::fs::write(&file, format!("field ff\nq 2\np T\ndprime T^5+T^2+1\ncharpoly {coeffs} -3 1\n")).unwrap();
    let o = compgroup(&["phi-ff", &file.to_string_lossy()]);
    std::fs::remove_file(&file).unwrap();
    assert_eq!(o.status.code(), Some(2), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(!stdout(&o).contains("order ="));
}

#[test]
fn batch_output_keeps_input_order() {
    let files = ["banana.graph", "triangle.graph", "folded.graph", "banana.graph"].map(path);
    let mut serial = vec!["graph-invariants"];
    serial.extend(files.iter().map(String::as_str));
    let mut parallel = serial.clone();
    parallel.extend(["--jobs", "3"]);
    let a = compgroup(&serial);
    let b = compgroup(&parallel);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    let text = stdout(&a);
    let headers: Vec<&str> = text.lines().filter(|l| l.starts_with("== ")).collect();
    assert_eq!(headers.len(), 4);
    assert!(headers[1].contains("triangle.graph") && headers[2].contains("folded.graph"));
}

#[test]
fn selftest_is_deterministic() {
    let run = || compgroup(&["selftest", "--seed", "11", "--cases", "20"]);
    let (a, b) = (run(), run());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert!(!stdout(&a).contains("FAIL"));
}

#[test]
fn reproduce_paper_passes() {
    let o = compgroup(&["reproduce-paper"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 failed"));
}
