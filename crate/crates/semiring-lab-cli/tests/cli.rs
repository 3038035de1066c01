//! End-to-end tests of the binary: exit codes, formats, and golden
//! outputs on the checked-in catalog.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_semiring-lab"))
}

fn catalog_file(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../semiring-lab/data/catalog")
        .join(format!("{name}.json"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn check_z6_reports_the_lop_witness() {
    let out = run(&["check", catalog_file("z6").to_str().unwrap(), "--format", "json"]);
    assert!(out.status.success());
    let profile: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(profile["lop"]["cond5"]["status"], "fails");
    assert_eq!(profile["lop"]["cond5"]["witness"], "(2, 3)");
    assert_eq!(profile["semidomain"]["status"], "fails");
    assert_eq!(profile["valuation"]["status"], "skipped");
}

#[test]
fn check_boolean_all_applicable_hold() {
    let out = run(&["check", catalog_file("boolean").to_str().unwrap(), "--format", "json"]);
    assert!(out.status.success());
    let profile: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for key in ["semidomain", "local", "uniserial", "valuation", "gcd", "pvs"] {
        assert_eq!(profile[key]["status"], "holds", "{key}");
    }
}

#[test]
fn check_text_format_mentions_every_property() {
    let out = run(&["check", catalog_file("z4").to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    for needle in ["semidomain", "lop-cond5", "divided-cond4", "pvs-cond6"] {
        assert!(text.contains(needle), "missing {needle} in:\n{text}");
    }
}

#[test]
fn schema_error_exits_2() {
    let dir = std::env::temp_dir();
    let path = dir.join("semiring-lab-malformed.json");
    std::fs::write(&path, "{\"order\": 2, \"zero\": 0").unwrap();
    let out = run(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line"), "no position info: {err}");

    let path2 = dir.join("semiring-lab-badshape.json");
    std::fs::write(
        &path2,
        r#"{"order": 2, "zero": 0, "one": 1, "add": [[0,1]], "mul": [[0,0],[0,1]]}"#,
    )
    .unwrap();
    let out = run(&["check", path2.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn axiom_failure_exits_3_with_report() {
    let dir = std::env::temp_dir();
    let path = dir.join("semiring-lab-bad-axioms.json");
    // commutativity of + broken at (0,1)
    std::fs::write(
        &path,
        r#"{"order": 2, "zero": 0, "one": 1, "add": [[0,1],[0,1]], "mul": [[0,0],[0,1]]}"#,
    )
    .unwrap();
    let out = run(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("commutativity of +"), "{err}");
}

#[test]
fn lattice_z4_is_a_chain_of_three() {
    let out = run(&["lattice", catalog_file("z4").to_str().unwrap()]);
    assert!(out.status.success());
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("label=").count(), 3);
    assert_eq!(dot.matches("->").count(), 2);
}

#[test]
fn lattice_z6_is_a_diamond() {
    let out = run(&["lattice", catalog_file("z6").to_str().unwrap()]);
    let dot = stdout(&out);
    assert_eq!(dot.matches("label=").count(), 4);
    assert_eq!(dot.matches("->").count(), 4);
}

#[test]
fn lattice_boolean_two_nodes() {
    let out = run(&["lattice", catalog_file("boolean").to_str().unwrap()]);
    let dot = stdout(&out);
    assert_eq!(dot.matches("label=").count(), 2);
    assert_eq!(dot.matches("->").count(), 1);
}

#[test]
fn enumerate_order_2_emits_two_lines() {
    let out = run(&["enumerate", "--order", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 2);
    for line in text.lines() {
        let value: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(value["order"], 2);
    }
    let summary = String::from_utf8(out.stderr).unwrap();
    assert!(summary.contains("2 of 2"), "{summary}");
}

#[test]
fn enumerate_filter_semidomain_order_3() {
    let out = run(&["enumerate", "--order", "3", "--filter", "semidomain"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 1);
    let summary = String::from_utf8(out.stderr).unwrap();
    assert!(summary.contains("1 of 6"), "{summary}");
}

#[test]
fn enumerate_beyond_cap_fails_and_env_overrides_it() {
    let out = bin()
        .env_remove("SEMIRING_LAB_ORDER_CAP")
        .args(["enumerate", "--order", "5"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("SEMIRING_LAB_ORDER_CAP"), "{err}");

    // the env var moves the guard in both directions
    let out = bin()
        .env("SEMIRING_LAB_ORDER_CAP", "3")
        .args(["enumerate", "--order", "4"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    let out = bin()
        .env("SEMIRING_LAB_ORDER_CAP", "3")
        .args(["enumerate", "--order", "3"])
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn witness_outputs() {
    let z6 = catalog_file("z6");
    let out = run(&["witness", z6.to_str().unwrap(), "lop-cond5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "(2, 3)");

    let b = catalog_file("boolean");
    let out = run(&["witness", b.to_str().unwrap(), "lop-cond5"]);
    assert_eq!(stdout(&out).trim(), "none (holds)");

    let out = run(&["witness", z6.to_str().unwrap(), "valuation"]);
    assert_eq!(stdout(&out).trim(), "skipped (not a semidomain)");

    let out = run(&["witness", z6.to_str().unwrap(), "no-such-property"]);
    assert!(!out.status.success());
}

#[test]
fn verify_small_run_passes_and_is_byte_stable() {
    let args = ["verify", "--order", "2", "--bound", "16", "--format", "json"];
    let first = run(&args);
    assert!(first.status.success(), "{}", String::from_utf8_lossy(&first.stderr));
    let second = run(&args);
    assert_eq!(stdout(&first), stdout(&second));
    let report: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(report["failures"], 0);
}

#[test]
fn verify_mutation_fails_naming_the_theorem() {
    let out = run(&[
        "verify", "--order", "2", "--bound", "8", "--mutate", "lop-cond3",
    ]);
    assert!(!out.status.success());
    assert!(stdout(&out).contains("lop-equivalence"));
}

#[test]
fn verify_with_tiny_bound_skips_unresolved_symbolic_checks() {
    // below the smallest witnesses, bounded searches return unknown and
    // the dependent implications are skipped rather than asserted
    let out = run(&[
        "verify", "--order", "2", "--bound", "2", "--format", "json",
    ]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let symbolic = report["symbolic"].as_array().unwrap();
    assert!(symbolic
        .iter()
        .any(|c| c["outcome"]["status"] == "skipped"
            && c["outcome"]["reason"]
                .as_str()
                .unwrap()
                .contains("unresolved")));
}

#[test]
fn verify_empty_corpus_warns_and_exits_zero() {
    let out = run(&[
        "verify", "--order", "1", "--no-catalog", "--no-symbolic",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("0 structures"), "{text}");
    assert!(text.contains("warning"), "{text}");
}

#[test]
fn exotic_zero_one_placement_classifies_identically() {
    // same structure as z4 but relabeled so zero sits at index 2 and one
    // at index 3; statuses must match the canonical layout
    let z4 = std::fs::read_to_string(catalog_file("z4")).unwrap();
    let mut raw: serde_json::Value = serde_json::from_str(&z4).unwrap();
    let perm = [2usize, 3, 0, 1];
    let relabel = |t: &serde_json::Value| -> serde_json::Value {
        let mut out = vec![vec![0u64; 4]; 4];
        for a in 0..4 {
            for b in 0..4 {
                let v = t[a][b].as_u64().unwrap() as usize;
                out[perm[a]][perm[b]] = perm[v] as u64;
            }
        }
        serde_json::json!(out)
    };
    raw["add"] = relabel(&raw["add"]);
    raw["mul"] = relabel(&raw["mul"]);
    raw["zero"] = serde_json::json!(perm[0]);
    raw["one"] = serde_json::json!(perm[1]);
    raw["name"] = serde_json::json!("z4-relabeled");
    let path = std::env::temp_dir().join("semiring-lab-relabeled-z4.json");
    std::fs::write(&path, raw.to_string()).unwrap();

    let strip = |text: &str| -> serde_json::Value {
        let mut v: serde_json::Value = serde_json::from_str(text).unwrap();
        fn rm(v: &mut serde_json::Value) {
            if let serde_json::Value::Object(m) = v {
                m.remove("witness");
                m.remove("name");
                for (_, c) in m.iter_mut() {
                    rm(c);
                }
            }
        }
        rm(&mut v);
        v
    };
    let original = run(&["check", catalog_file("z4").to_str().unwrap(), "--format", "json"]);
    let relabeled = run(&["check", path.to_str().unwrap(), "--format", "json"]);
    assert!(relabeled.status.success());
    assert_eq!(strip(&stdout(&original)), strip(&stdout(&relabeled)));
}

#[test]
fn oversized_order_is_a_resource_error() {
    // order 12 identity-like tables: the ideal lattice guard must refuse
    // politely rather than attempt 2^12 subsets
    let n = 12usize;
    let add: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    let mul: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| (a * b) % n).collect())
        .collect();
    let raw = serde_json::json!({
        "order": n, "zero": 0, "one": 1, "add": add, "mul": mul
    });
    let path = std::env::temp_dir().join("semiring-lab-z12.json");
    std::fs::write(&path, raw.to_string()).unwrap();
    let out = run(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("cap"), "{err}");
}

#[test]
fn out_flag_writes_the_file() {
    let path = std::env::temp_dir().join("semiring-lab-lattice.dot");
    let out = run(&[
        "lattice",
        catalog_file("boolean").to_str().unwrap(),
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("digraph"));
}
