//! Behavior of the `survnet` binary: output formats and the exit-code
//! contract (0 ok/verified, 1 verification failure, 2 input error).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_survnet"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn number_prints_ranked_table_and_csv() {
    let out = run(&["number", fixture("reference7.csv").to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    for row in [
        "F,13,1", "C,15,2", "D,18,3", "A,19,4", "B,20,5", "E,22,6", "G,25,7",
    ] {
        assert!(text.contains(row), "missing {row} in:\n{text}");
    }
    assert!(text.contains("label,accumulated_cost,number"));
}

#[test]
fn number_rejects_asymmetric_matrix_naming_the_pair() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.csv");
    fs::write(&bad, "label,X,Y\nX,0,2\nY,3,0\n").unwrap();
    let out = run(&["number", bad.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    let err = stderr(&out);
    assert!(err.contains('X') && err.contains('Y'), "stderr: {err}");
    assert!(err.contains('2') && err.contains('3'), "stderr: {err}");
}

#[test]
fn number_rejects_missing_file() {
    let out = run(&["number", "/nonexistent/matrix.csv"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn generate_writes_canonical_edge_list_to_stdout() {
    let out = run(&["generate", "--method", "bipartite", "-n", "7", "-k", "3"]);
    assert_eq!(exit_code(&out), 0);
    let mut expected = String::from("7 3 bipartite\n");
    for i in 1..=3 {
        for j in 4..=7 {
            expected.push_str(&format!("{i} {j}\n"));
        }
    }
    assert_eq!(stdout(&out), expected);
    let err = stderr(&out);
    assert!(err.contains("links: 12"));
    assert!(err.contains("kappa: 3"));
}

#[test]
fn generate_warns_past_the_bipartite_half() {
    let out = run(&["generate", "--method", "bipartite", "-n", "6", "-k", "4"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stderr(&out).contains("warning: achieved connectivity 2 < requested 4"));
}

#[test]
fn generate_hypercube_derives_n_from_k() {
    let out = run(&["generate", "--method", "hypercube", "-k", "2"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "4 2 hypercube\n1 2\n1 3\n2 4\n3 4\n");
}

#[test]
fn generate_usage_errors() {
    let out = run(&["generate", "--method", "bipartite", "-n", "7", "-k", "0"]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&["generate", "--method", "bipartite", "-k", "3"]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&[
        "generate",
        "--method",
        "bipartite",
        "-n",
        "7",
        "-k",
        "3",
        "--labels",
    ]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&[
        "generate",
        "--method",
        "bipartite",
        "-n",
        "6",
        "-k",
        "3",
        "--matrix",
        fixture("reference7.csv").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("7 labels"));
}

#[test]
fn generate_labels_dot_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("k34.txt");
    let dot = dir.path().join("k34.dot");
    let manifest = dir.path().join("run.json");
    let out = run(&[
        "generate",
        "--method",
        "bipartite",
        "-k",
        "3",
        "--matrix",
        fixture("reference7.csv").to_str().unwrap(),
        "--out",
        edges.to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
        "--labels",
        "--manifest",
        manifest.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(
        text.contains("labels: 1=F 2=C 3=D 4=A 5=B 6=E 7=G"),
        "{text}"
    );
    let dot_text = fs::read_to_string(&dot).unwrap();
    assert!(dot_text.contains("1 [label=\"F\"];"));
    assert!(dot_text.contains("1 -- 4;"));
    let manifest_text = fs::read_to_string(&manifest).unwrap();
    assert!(manifest_text.contains("\"command\": \"generate\""));
    assert!(manifest_text.contains(edges.to_str().unwrap()));
    assert!(manifest_text.contains(dot.to_str().unwrap()));
    let edge_text = fs::read_to_string(&edges).unwrap();
    assert!(edge_text.starts_with("7 3 bipartite\n"));
}

fn write_k34(dir: &Path) -> PathBuf {
    let path = dir.join("k34.txt");
    let out = run(&[
        "generate",
        "--method",
        "bipartite",
        "-n",
        "7",
        "-k",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    path
}

#[test]
fn verify_exit_codes_and_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let k34 = write_k34(dir.path());

    let ok = run(&["verify", k34.to_str().unwrap(), "-k", "3"]);
    assert_eq!(exit_code(&ok), 0);
    let text = stdout(&ok);
    assert!(text.contains("kappa: 3"));
    assert!(text.contains("verdict: 3-connected"));
    assert_eq!(text.matches("path: ").count(), 3);

    let fail = run(&["verify", k34.to_str().unwrap(), "-k", "4"]);
    assert_eq!(exit_code(&fail), 1);
    let text = stdout(&fail);
    assert!(text.contains("verdict: not 4-connected"));
    assert!(text.contains("cut: 1 2 3"));

    let bad_k = run(&["verify", k34.to_str().unwrap(), "-k", "0"]);
    assert_eq!(exit_code(&bad_k), 2);
    let bad_k = run(&["verify", k34.to_str().unwrap(), "-k", "7"]);
    assert_eq!(exit_code(&bad_k), 2);

    // no -k flag: the header's k is the target
    let default_k = run(&["verify", k34.to_str().unwrap()]);
    assert_eq!(exit_code(&default_k), 0);
}

#[test]
fn verify_disconnected_graph_prints_empty_cut() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.txt");
    fs::write(&path, "2 1 external\n").unwrap();
    let out = run(&["verify", path.to_str().unwrap(), "-k", "1"]);
    assert_eq!(exit_code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("kappa: 0"), "{text}");
    assert!(text.contains("cut:\n"), "{text}");
    assert!(text.contains("separated: 1 2"), "{text}");
}

#[test]
fn verify_rejects_malformed_edge_lists() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "7 3 mesh\n1 2\n").unwrap();
    let out = run(&["verify", path.to_str().unwrap(), "-k", "3"]);
    assert_eq!(exit_code(&out), 2);
    fs::write(&path, "7 3 bipartite\n1 9\n").unwrap();
    let out = run(&["verify", path.to_str().unwrap(), "-k", "3"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn compare_emits_table_and_csv() {
    let out = run(&[
        "compare",
        "-n",
        "7",
        "-k",
        "3",
        "--matrix",
        fixture("reference7.csv").to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("12 < 15"), "{text}");
    assert!(text.contains("method,links,formula,kappa,total_cost,flags"));
    assert!(text.contains("bipartite,12,12,3,34,"));
    assert!(text.contains("sequential,15,15,3,40,"));

    let with_cube = run(&["compare", "-n", "8", "-k", "3"]);
    assert!(stdout(&with_cube).contains("hypercube,12,12,3,,"));

    let bad = run(&["compare", "-n", "7", "-k", "0"]);
    assert_eq!(exit_code(&bad), 2);
}

#[test]
fn simulate_is_seed_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let k34 = write_k34(dir.path());
    let args = [
        "simulate",
        k34.to_str().unwrap(),
        "--mode",
        "node",
        "-f",
        "3",
        "--trials",
        "2000",
        "--seed",
        "11",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(exit_code(&a), 0);
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).contains("mode,f,trials,survived,fraction,kappa"));
    assert!(stdout(&a).contains("node,3,2000,"));
}

#[test]
fn simulate_rejects_out_of_range_failures() {
    let dir = tempfile::tempdir().unwrap();
    let k34 = write_k34(dir.path());
    let out = run(&[
        "simulate",
        k34.to_str().unwrap(),
        "--mode",
        "node",
        "-f",
        "6",
    ]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&[
        "simulate",
        k34.to_str().unwrap(),
        "--mode",
        "node",
        "-f",
        "2",
        "--trials",
        "0",
    ]);
    assert_eq!(exit_code(&out), 2);
}
