use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use sqw::walk::io::parse_dense;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn sqw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sqw"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// The machine block is the last stdout line.
fn json_block(o: &Output) -> Value {
    let out = stdout(o);
    let last = out.lines().last().expect("some output");
    serde_json::from_str(last).unwrap_or_else(|e| panic!("{e}: {last}"))
}

#[test]
fn classify_fig1() {
    let o = sqw(&["classify", "--graph", &fixture("fig1.edges")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let j = json_block(&o);
    assert_eq!(j["class"], "Class2a");
    assert_eq!(j["witness"]["kind"], "krausz_partition");
    assert_eq!(j["rechecked"], true);
    assert!(stdout(&o).contains("class: Class2a"));
}

#[test]
fn dense_dump_is_the_reference_matrix() {
    let o = sqw(&[
        "evolve",
        "--graph",
        &fixture("fig1.edges"),
        "--tess",
        &fixture("fig1.tess"),
        "--dump-dense",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let rows: [[f64; 5]; 5] = [
        [3.0, -3.0, 3.0, 3.0, 0.0],
        [-3.0, 3.0, 3.0, 3.0, 0.0],
        [1.0, 1.0, 3.0, -3.0, 4.0],
        [1.0, 1.0, -3.0, 3.0, 4.0],
        [4.0, 4.0, 0.0, 0.0, -2.0],
    ];
    let m = parse_dense(&stdout(&o)).unwrap();
    assert_eq!(m.shape(), (5, 5));
    for i in 0..5 {
        for j in 0..5 {
            let z = m[(i, j)];
            assert!(
                (z.re - rows[i][j] / 6.0).abs() < 1e-12 && z.im.abs() < 1e-12,
                "({i},{j}) = {z}"
            );
        }
    }
}

#[test]
fn convert_rejects_shared_edge() {
    let o = sqw(&[
        "convert",
        "--graph",
        &fixture("barbell.edges"),
        "--tess",
        &fixture("barbell_a.tess"),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stderr(&o).lines().any(|l| l == "reason=EdgeInIntersection"),
        "{}",
        stderr(&o)
    );
}

#[test]
fn convert_certifies_barbell_b() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = sqw(&[
        "convert",
        "--graph",
        &fixture("barbell.edges"),
        "--tess",
        &fixture("barbell_b.tess"),
        "--out",
        out,
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let j = json_block(&o);
    assert_eq!(j["idle_dimension"], 4);
    assert!(j["max_deviation"].as_f64().unwrap() < 1e-10);
    let meta: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("meta.json")).unwrap()).unwrap();
    assert_eq!(meta["command"], "convert");
    assert!(dir.path().join("certificate.json").exists());
}

#[test]
fn tolerance_override_is_recorded() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = sqw(&[
        "convert",
        "--graph",
        &fixture("barbell.edges"),
        "--tess",
        &fixture("barbell_b.tess"),
        "--tolerance",
        "1e-8",
        "--out",
        out,
    ]);
    assert_eq!(o.status.code(), Some(0));
    let meta = std::fs::read_to_string(dir.path().join("meta.json")).unwrap();
    assert!(meta.contains("tolerance overridden"));
}

#[test]
fn tessellate_builds_and_rejects() {
    let o = sqw(&["tessellate", "--graph", &fixture("fig1.edges")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(json_block(&o)["pair"]["blue"].is_array());
    let o = sqw(&["tessellate", "--graph", &fixture("c5.edges")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("reason=NotTwoTessellable"));
    let o = sqw(&[
        "tessellate",
        "--graph",
        &fixture("fig1.edges"),
        "--check",
        &fixture("fig1.tess"),
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(sqw(&["classify"]).status.code(), Some(2));
    assert_eq!(
        sqw(&["classify", "--graph", "x", "--bogus"]).status.code(),
        Some(2)
    );
    assert_eq!(sqw(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn missing_file_is_a_domain_error() {
    let o = sqw(&["classify", "--graph", "/nonexistent/graph.edges"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("reason=Io"));
}

#[test]
fn model_output_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = sqw(&["model", "honeycomb", "--m", "2", "--out", out]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(json_block(&o)["vertices"], 24);
    let edges = dir.path().join("graph.edges");
    let tess = dir.path().join("pair.tess");
    let o = sqw(&[
        "convert",
        "--graph",
        edges.to_str().unwrap(),
        "--tess",
        tess.to_str().unwrap(),
        "--coined",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(json_block(&o)["form"], "coined");
    let o = sqw(&["model", "three-state", "--sites", "2", "--rho", "0.5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("reason=TooSmall"));
}

#[test]
fn search_is_deterministic() {
    let run = || {
        let dir = tempfile::tempdir().unwrap();
        let o = sqw(&[
            "search",
            "--n-list",
            "3,4,5,6",
            "--t-max",
            "80",
            "--out",
            dir.path().to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        let csv = std::fs::read_to_string(dir.path().join("series_n4.csv")).unwrap();
        let report = std::fs::read_to_string(dir.path().join("fit_report.json")).unwrap();
        (csv, report)
    };
    let (a, ra) = run();
    let (b, rb) = run();
    assert_eq!(a, b);
    assert_eq!(ra, rb);
    assert!(a.starts_with("t,p\n0,"));
}
