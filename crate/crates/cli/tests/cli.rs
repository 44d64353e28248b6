//! End-to-end runs of the binary: report contents, determinism and the
//! exit-code contract.

use std::path::{Path, PathBuf};
use std::process::Command;

use convexval::cli::render_text;
use tempfile::TempDir;

const SQUARE: &str = r#"{"dim":2,"vertices":[["0","0"],["1","0"],["0","1"],["1","1"]]}"#;
const TRIANGLE_WITH_INTERIOR: &str = r#"{"dim":2,"vertices":[["0","0"],["1","0"],["0","1"],["1/3","1/3"]]}"#;
const CUBE: &str = r#"{"dim":3,"vertices":[["0","0","0"],["1","0","0"],["0","1","0"],["0","0","1"],
    ["1","1","0"],["1","0","1"],["0","1","1"],["1","1","1"]]}"#;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_convexval"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).expect("utf-8"),
        stderr: String::from_utf8(out.stderr).expect("utf-8"),
    }
}

struct Files {
    dir: TempDir,
}

impl Files {
    fn new() -> Self {
        Files {
            dir: TempDir::new().expect("temp dir"),
        }
    }

    fn write(&self, name: &str, text: &str) -> String {
        let path: PathBuf = self.dir.path().join(name);
        std::fs::write(&path, text).expect("write input");
        path_str(&path)
    }
}

fn path_str(p: &Path) -> String {
    p.to_str().expect("utf-8 path").to_string()
}

#[test]
fn expand_square_volume() {
    let f = Files::new();
    let sq = f.write("square.json", SQUARE);
    let r = run(&["expand", "--valuation", "volume", "--input", &sq]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("coefficients: f_0=0 f_1=0 f_2=1"), "{}", r.stdout);
}

#[test]
fn expand_other_valuations() {
    let f = Files::new();
    let sq = f.write("square.json", SQUARE);
    let r = run(&["expand", "--valuation", "probe:unit_square", "--input", &sq]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    // vol(λ[0,1]² + [0,1]²) = (λ+1)².
    assert!(r.stdout.contains("f_0=1 f_1=2 f_2=1"), "{}", r.stdout);
    let r = run(&["expand", "--valuation", "euler", "--input", &sq]);
    assert!(r.stdout.contains("f_0=1 f_1=0 f_2=0"), "{}", r.stdout);
    let r = run(&["expand", "--valuation", "support:1,-1/2", "--input", &sq, "--lambda", "3/2"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.contains("f_0=0 f_1=1 f_2=0"), "{}", r.stdout);
    let r = run(&["expand", "--valuation", "lattice", "--input", &sq, "--lambda", "4"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.contains("f_0=1 f_1=2 f_2=1"), "{}", r.stdout);
    assert!(r.stdout.contains("expansion=25 direct=25"), "{}", r.stdout);
}

#[test]
fn components_of_square() {
    let f = Files::new();
    let sq = f.write("square.json", SQUARE);
    let r = run(&["components", "--input", &sq, "--lambda", "2"]);
    assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
    assert!(r.stdout.contains("sum: 2[X] - 4[(1/2)X] + 2[p]"), "{}", r.stdout);
    assert!(r.stdout.contains("sum: [p]"), "{}", r.stdout);
    assert!(r.stdout.contains("e_2(e_2[X]): pass"), "{}", r.stdout);
    assert!(r.stdout.ends_with("status: pass\n"));
}

#[test]
fn decompose_standard_basis() {
    let r = run(&["decompose", "--basis", "e1,e2", "--a", "1", "--b", "1"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.contains("vol(A_0)=1/2 vol(A_1)=1 vol(A_2)=1/2"), "{}", r.stdout);
    let explicit = run(&["decompose", "--basis", "1,0;0,1"]);
    assert_eq!(explicit.stdout, r.stdout);
    let skew = run(&["decompose", "--basis", "1,1/2,0;0,1,-1;2,0,3", "--a", "2", "--b", "1/3"]);
    assert_eq!(skew.code, 0, "{}", skew.stdout);
}

#[test]
fn ehrhart_and_mixed() {
    let f = Files::new();
    let cube = f.write("cube.json", CUBE);
    let r = run(&["ehrhart", "--input", &cube, "--max-lambda", "3"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.contains("counts: 0=1 1=8 2=27 3=64"), "{}", r.stdout);
    assert!(r.stdout.contains("f_0=1 f_1=3 f_2=3 f_3=1"), "{}", r.stdout);

    let sq = f.write("square.json", SQUARE);
    let tri = f.write("tri.json", TRIANGLE_WITH_INTERIOR);
    let r = run(&["mixed", "--input", &sq, "--input", &tri]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.contains("mixed_volume: 1\n"), "{}", r.stdout);
    assert!(r.stdout.contains("f_0=1/2 f_1=2 f_2=1"), "{}", r.stdout);
}

#[test]
fn pruned_vertices_are_noticed() {
    let f = Files::new();
    let tri = f.write("tri.json", TRIANGLE_WITH_INTERIOR);
    let r = run(&["expand", "--input", &tri]);
    assert_eq!(r.code, 0);
    assert!(r.stderr.contains("pruned 1"), "{}", r.stderr);
    assert!(r.stdout.contains("f_0=0 f_1=0 f_2=1/2"), "{}", r.stdout);
}

#[test]
fn compare_exit_codes() {
    let f = Files::new();
    let sq = f.write("square.json", SQUARE);
    let moved = f.write(
        "moved.json",
        r#"[{"coef":1,"polytope":{"dim":2,"vertices":[["5","5"],["6","5"],["5","6"],["6","6"]]}}]"#,
    );
    let e2 = f.write(
        "e2.json",
        r#"[{"coef":2,"polytope":{"dim":2,"vertices":[["0","0"],["1","0"],["0","1"],["1","1"]]}},
            {"coef":-4,"polytope":{"dim":2,"vertices":[["0","0"],["1/2","0"],["0","1/2"],["1/2","1/2"]]}},
            {"coef":2,"polytope":{"dim":2,"vertices":[["0","0"]]}}]"#,
    );
    let same = run(&["compare", "--input", &sq, "--input", &moved]);
    assert_eq!(same.code, 0, "{}", same.stdout);
    assert!(same.stdout.contains("equal on panel"));
    let differ = run(&["compare", "--input", &e2, "--input", &sq]);
    assert_eq!(differ.code, 1, "{}", differ.stdout);
    assert!(differ.stdout.contains("witness: euler: 0 vs 1"), "{}", differ.stdout);
    let non_invariant = run(&["compare", "--input", &sq, "--input", &sq, "--panel", "support:1,0"]);
    assert_eq!(non_invariant.code, 2);
}

#[test]
fn json_mirrors_text() {
    let f = Files::new();
    let sq = f.write("square.json", SQUARE);
    for args in [
        vec!["components", "--input", sq.as_str()],
        vec!["decompose", "--basis", "e1,e2"],
        vec!["expand", "--input", sq.as_str(), "--valuation", "lattice"],
    ] {
        let text = run(&args);
        let mut json_args = args.clone();
        json_args.extend(["--format", "json"]);
        let json = run(&json_args);
        assert_eq!(text.code, json.code);
        let doc: serde_json::Value = serde_json::from_str(&json.stdout).expect("valid JSON");
        assert_eq!(render_text(&doc), text.stdout);
    }
}

#[test]
fn reports_are_deterministic() {
    let a = run(&["verify", "--seed", "5", "--criterion", "1", "--criterion", "7"]);
    let b = run(&["verify", "--seed", "5", "--criterion", "7", "--criterion", "1"]);
    assert_eq!(a.code, 0, "{}", a.stdout);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.stdout.contains("seed: 5\n"));
    assert!(a.stdout.contains("1 difference_laws: pass (300 cases)"), "{}", a.stdout);

    let f = Files::new();
    let sq = f.write("square.json", SQUARE);
    let first = run(&["components", "--input", &sq, "--format", "json"]);
    let second = run(&["components", "--input", &sq, "--format", "json"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn check_failures_exit_one() {
    let f = Files::new();
    let sq = f.write("square.json", SQUARE);
    // A degree bound below the true degree cannot reproduce the function.
    let r = run(&["expand", "--input", &sq, "--degree", "1"]);
    assert_eq!(r.code, 1, "{}{}", r.stdout, r.stderr);
    assert!(r.stderr.contains("check failed"), "{}", r.stderr);
    let r = run(&["ehrhart", "--input", &sq, "--degree", "1"]);
    assert_eq!(r.code, 1);
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let f = Files::new();
    let sq = f.write("square.json", SQUARE);
    let cube = f.write("cube.json", CUBE);
    let broken = f.write("broken.json", "{\"dim\":2,\n\"vertices\":[[\"0\"");
    let short_row = f.write("short.json", r#"{"dim":2,"vertices":[["0","0"],["1"]]}"#);
    let bad_number = f.write("bad.json", r#"{"dim":1,"vertices":[["1/0"]]}"#);
    let missing = path_str(&f.dir.path().join("missing.json"));

    let cases: Vec<Vec<&str>> = vec![
        vec![],
        vec!["frobnicate"],
        vec!["expand"],
        vec!["expand", "--input", &missing],
        vec!["expand", "--input", &broken],
        vec!["expand", "--input", &short_row],
        vec!["expand", "--input", &bad_number],
        vec!["expand", "--input", &sq, "--valuation", "bogus"],
        vec!["expand", "--input", &sq, "--valuation", "support:1,2,3"],
        vec!["expand", "--input", &sq, "--probe", "dodecahedron"],
        vec!["expand", "--input", &sq, "--lambda", "-1"],
        vec!["expand", "--input", &sq, "--format", "yaml"],
        vec!["decompose", "--basis", "1,1;2,2"],
        vec!["decompose", "--basis", "e1,e2", "--a", "0"],
        vec!["decompose", "--basis", "e1,e2", "--b", "x"],
        vec!["mixed", "--input", &sq],
        vec!["mixed", "--input", &sq, "--input", &cube],
        vec!["verify", "--criterion", "9"],
        vec!["verify", "--seed", "-3"],
        vec!["components", "--input", &sq, "--panel", "nonsense"],
        vec!["compare", "--input", &sq, "--input", &cube],
    ];
    for args in cases {
        let r = run(&args);
        assert_eq!(r.code, 2, "{args:?}: {}{}", r.stdout, r.stderr);
        assert!(r.stdout.is_empty(), "{args:?} printed a report");
    }
}

#[test]
fn help_succeeds() {
    let r = run(&["--help"]);
    assert_eq!(r.code, 0);
    for command in ["expand", "components", "decompose", "verify", "ehrhart", "mixed", "compare"] {
        assert!(r.stdout.contains(command), "{command}");
    }
}
