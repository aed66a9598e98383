use std::path::Path;
use std::process::{Command, Output};

fn gemfive(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gemfive")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const C5: &str = "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";
const P5: &str = "p edge 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n";

#[test]
fn detect_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.col", C5);
    let p5 = write(dir.path(), "p5.col", P5);
    let bad = write(dir.path(), "bad.col", "p edge x\n");
    assert_eq!(gemfive(&["detect", &c5]).status.code(), Some(0));
    let o = gemfive(&["detect", &p5]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness=P5 1 2 3 4 5"));
    assert_eq!(gemfive(&["detect", &bad]).status.code(), Some(2));
    assert_eq!(gemfive(&["detect", "/no/such/file"]).status.code(), Some(2));
}

#[test]
fn color_reports() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.col", C5);
    let o = gemfive(&["color", &c5, "--certify"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("colors=3") && out.contains("bound=3"), "{out}");
    assert_eq!(out.lines().filter(|l| l.contains(':')).count(), 5);

    let mut k6 = String::from("p edge 6 15\n");
    for i in 1..=6 {
        for j in i + 1..=6 {
            k6.push_str(&format!("e {i} {j}\n"));
        }
    }
    let k6 = write(dir.path(), "k6.col", &k6);
    let out = stdout(&gemfive(&["color", &k6]));
    assert!(out.contains("bound=8 colors=6"), "{out}");

    let p5 = write(dir.path(), "p5.col", P5);
    assert_eq!(gemfive(&["color", &p5]).status.code(), Some(1));
}

#[test]
fn gen_tight_then_color_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t2.col");
    let o = gemfive(&["gen", "--family", "tight", "--q", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = gemfive(&["color", out.to_str().unwrap(), "--json", "--certify"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["report"]["colors"], 5);
    assert_eq!(v["report"]["bound"], 5);
    assert_eq!(v["report"]["chi"], 5);
    assert_eq!(v["coloring"].as_array().unwrap().len(), 10);
}

#[test]
fn gen_families_are_in_class() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["--family", "gk", "--k", "7", "--seed", "3"],
        vec!["--family", "gk", "--k", "10", "--seed", "1", "--cograph"],
        vec!["--family", "hstar", "--seed", "5", "--max-n", "20"],
        vec!["--family", "random", "--seed", "9"],
    ] {
        let out = dir.path().join("g.col");
        let mut full = vec!["gen"];
        full.extend(&args);
        full.extend(["--out", out.to_str().unwrap()]);
        assert_eq!(gemfive(&full).status.code(), Some(0), "{args:?}");
        assert_eq!(gemfive(&["detect", out.to_str().unwrap()]).status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn decompose_with_claims() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.col", C5);
    let o = gemfive(&["decompose", &c5, "--claims"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("\"base\":1"), "{out}");
    assert!(out.contains("claims_passed=true"));
}

#[test]
fn oracle_and_basics() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.col", C5);
    let out = stdout(&gemfive(&["oracle", &c5]));
    assert!(out.contains("omega=2 chi=3 delta=2 bound54=3 reed=3"), "{out}");
    let o = gemfive(&["basics", "validate"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));
    let out = stdout(&gemfive(&["basics", "dump", "10"]));
    assert!(out.starts_with("p edge 9 18"));
    assert_eq!(gemfive(&["basics", "dump", "11"]).status.code(), Some(2));
}

#[test]
fn suite_passes_and_catches_a_fault() {
    let o = gemfive(&["suite", "--from", "1", "--to", "21", "--max-n", "18"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("suite passed=20 failed=0"));
    let o = gemfive(&["suite", "--to", "3", "--inject-fault"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("improper"));
}

#[test]
fn usage_error_is_two() {
    assert_eq!(gemfive(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(gemfive(&["gen"]).status.code(), Some(2));
}
