//! Golden-file tests for every verb. Set `UPDATE_GOLDEN=1` to rewrite the
//! expected files after an intentional output change.

use std::path::{Path, PathBuf};
use std::process::Command;

const CASES: &[(&str, &[&str])] = &[
    ("enumerate_text", &["enumerate", "--outer", "3,1", "--n", "2"]),
    ("enumerate_skew_json", &["enumerate", "--outer", "3,1", "--inner", "2", "--n", "2", "--format", "json"]),
    ("apply_word", &["apply", "--op", "F'", "--index", "1", "--word", "211", "--n", "2"]),
    ("apply_raise_word", &["apply", "--op", "E", "--index", "1", "--word", "22", "--n", "2"]),
    ("apply_tableau", &["apply", "--op", "F", "--index", "1", "--tableau-file", "tests/fixtures/square.txt", "--n", "3"]),
    ("apply_blocked", &["apply", "--op", "F", "--index", "2", "--tableau-file", "tests/fixtures/blocked.txt", "--n", "3"]),
    ("apply_bad_index", &["apply", "--op", "F", "--index", "2", "--word", "211", "--n", "2"]),
    ("walk", &["walk", "--index", "1", "--word", "211'12'22'1'1'", "--n", "2"]),
    ("std", &["std", "--word", "211'12'22'1'1'", "--n", "2"]),
    ("eta", &["eta", "--word", "3111'21'12'", "--n", "3"]),
    ("graph_json", &["graph", "--outer", "2", "--n", "2"]),
    ("graph_dot", &["graph", "--outer", "2,1", "--n", "3", "--format", "dot"]),
    ("graph_text", &["graph", "--outer", "3,1", "--inner", "1", "--n", "2", "--format", "text"]),
    ("check_certified", &["check", "--outer", "3,1", "--n", "3"]),
    ("check_selected_json", &["check", "--outer", "2,1", "--n", "3", "--axioms", "K,B1,A1", "--format", "json"]),
    ("check_broken_graph", &["check", "--graph", "tests/fixtures/broken.json", "--axioms", "B1,K"]),
    ("check_bad_shape", &["check", "--outer", "3,3", "--n", "2"]),
    ("check_unknown_axiom", &["check", "--outer", "2", "--n", "2", "--axioms", "A9"]),
    ("expand", &["expand", "--outer", "2,1", "--n", "2"]),
    ("expand_skew", &["expand", "--outer", "4,2", "--inner", "2", "--n", "3"]),
    ("expand_json", &["expand", "--outer", "3,1", "--inner", "1", "--n", "3", "--format", "json"]),
];

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_shcrystal"))
        .args(args)
        .current_dir(manifest_dir())
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap_or(-1),
    )
}

fn render(args: &[&str]) -> String {
    let (stdout, stderr, code) = run(args);
    let mut s = format!("$ shcrystal {}\n", args.join(" "));
    s += &stdout;
    if !stderr.is_empty() {
        s += "--- stderr\n";
        s += &stderr;
    }
    s += &format!("--- exit {code}\n");
    s
}

fn golden_path(name: &str) -> PathBuf {
    manifest_dir().join("tests/golden").join(format!("{name}.txt"))
}

#[test]
fn golden_outputs() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut failures = Vec::new();
    for (name, args) in CASES {
        let got = render(args);
        let path = golden_path(name);
        if update {
            std::fs::write(&path, &got).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
        if got != want {
            failures.push(format!("{name}:\n--- expected\n{want}--- got\n{got}"));
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn output_is_deterministic() {
    for (_, args) in CASES {
        assert_eq!(run(args), run(args));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["check", "--outer", "3,1", "--n", "3"]).2, 0);
    assert_eq!(run(&["check", "--graph", "tests/fixtures/broken.json"]).2, 1);
    assert_eq!(run(&["check", "--outer", "3,3", "--n", "2"]).2, 2);
    assert_eq!(run(&["check", "--graph", "tests/fixtures/missing.json"]).2, 2);
    assert_eq!(run(&["walk", "--word", "12"]).2, 2);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("shcrystal-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("graph.dot");
    let file_arg = file.to_str().unwrap();
    let (stdout, _, code) = run(&["graph", "--outer", "2,1", "--n", "3", "--format", "dot", "--out", file_arg]);
    assert_eq!((stdout.as_str(), code), ("", 0));
    let written = std::fs::read_to_string(&file).unwrap();
    assert_eq!(written, run(&["graph", "--outer", "2,1", "--n", "3", "--format", "dot"]).0);
    std::fs::remove_dir_all(Path::new(&dir)).unwrap();
}

#[test]
fn exported_graph_checks_like_built_graph() {
    let dir = std::env::temp_dir().join(format!("shcrystal-roundtrip-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("g.json");
    let file_arg = file.to_str().unwrap();
    run(&["graph", "--outer", "4,2,1", "--n", "3", "--out", file_arg]);
    let imported = run(&["check", "--graph", file_arg, "--format", "json"]);
    let built = run(&["check", "--outer", "4,2,1", "--n", "3", "--format", "json"]);
    assert_eq!(imported, built);
    assert_eq!(imported.2, 0);
    std::fs::remove_dir_all(&dir).unwrap();
}
