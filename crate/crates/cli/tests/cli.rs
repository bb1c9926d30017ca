use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use projrep::catalog;
use projrep_cli::{cmd_chartab, cmd_classes, cmd_irreps, load_inputs, Mode, Settings, Strategy};
use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

fn projrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_projrep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn classes_pauli() {
    let out = projrep(&[
        "classes",
        "--json",
        path(&data("klein4.json")),
        path(&data("pauli_cocycle.json")),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["order"], 4);
    assert_eq!(v["m"], 1);
    assert_eq!(v["e"], 4);
    assert_eq!((v["p"].as_u64(), v["z"].as_u64()), (Some(5), Some(2)));
}

#[test]
fn chartab_exact_json_shape() {
    let out = projrep(&[
        "chartab",
        path(&data("klein4.json")),
        path(&data("pauli_cocycle.json")),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim(),
        r#"{"e":4,"p":5,"z":2,"regular_class_reps":[0],"irreps":[{"degree":2,"chars":[{"class":0,"multiplicities":[2,0,0,0]}]}]}"#
    );
}

#[test]
fn chartab_out_file_and_pretty_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("s3.json");
    let out = projrep(&[
        "chartab",
        "--mode",
        "float",
        path(&data("s3.json")),
        "--out",
        path(&out_path),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let pretty = String::from_utf8(out.stdout).unwrap();
    assert!(pretty.contains("class"), "{pretty}");
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(v["irreps"].as_array().unwrap().len(), 3);
}

#[test]
fn irreps_regular_and_iterative_agree_on_degrees() {
    for strategy in ["regular", "iterative"] {
        let out = projrep(&["irreps", "--strategy", strategy, path(&data("q8.json"))]);
        assert_eq!(out.status.code(), Some(0), "{strategy}");
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        let mut degrees: Vec<u64> = v["manifest"]
            .as_array()
            .unwrap()
            .iter()
            .map(|m| m["degree"].as_u64().unwrap())
            .collect();
        degrees.sort();
        assert_eq!(degrees, vec![1, 1, 1, 1, 2], "{strategy}");
        assert_eq!(v["irreps"].as_array().unwrap().len(), 5);
    }
}

#[test]
fn irreps_iterative_from_pi_file() {
    let dir = tempfile::tempdir().unwrap();
    let pi = dir.path().join("pi.json");
    std::fs::write(
        &pi,
        serde_json::to_string(&catalog::pauli_rep().to_json()).unwrap(),
    )
    .unwrap();
    let out = projrep(&[
        "irreps",
        "--strategy",
        "iterative",
        "--pi",
        path(&pi),
        path(&data("klein4.json")),
        path(&data("pauli_cocycle.json")),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["manifest"][0]["degree"], 2);
}

#[test]
fn check_green() {
    let out = projrep(&[
        "check",
        path(&data("klein4.json")),
        path(&data("pauli_cocycle.json")),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains("FAIL"), "{text}");
}

#[test]
fn malformed_json_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"cayley\": [[0, 1]").unwrap();
    let out = projrep(&["chartab", path(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    let out = projrep(&["classes", path(&dir.path().join("missing.json"))]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn corrupted_cocycle_exits_3() {
    let (g, c) = (data("klein4.json"), data("pauli_cocycle_corrupted.json"));
    let args = [path(&g), path(&c)];
    for cmd in ["classes", "chartab", "check"] {
        let out = projrep(&[cmd, args[0], args[1]]);
        assert_eq!(out.status.code(), Some(3), "{cmd}");
    }
    let out = projrep(&["check", args[0], args[1]]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("FAIL"));
}

#[test]
fn group_too_large_exits_3() {
    let out = projrep(&["--max-group-order", "5", "classes", path(&data("s3.json"))]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn same_seed_same_bytes() {
    let run = |seed: &str| projrep(&["--seed", seed, "irreps", path(&data("s3.json"))]).stdout;
    assert_eq!(run("3"), run("3"));
}

#[test]
fn library_commands() {
    let settings = Settings::default();
    let mult = load_inputs(&data("z2.json"), None, &settings).unwrap();
    let text = cmd_classes(&mult, false).unwrap();
    assert!(text.contains("m = 2"), "{text}");
    let (_, pretty) = cmd_chartab(&mult, Mode::Exact, &settings).unwrap();
    assert_eq!(pretty.lines().count(), 5, "{pretty}");
    let (json, summary) = cmd_irreps(&mult, Strategy::Regular, None, &settings).unwrap();
    assert_eq!(summary.lines().count(), 2);
    let v: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["manifest"][0]["multiplicity"], 1);
}

#[test]
fn trivial_group() {
    let out = projrep(&["chartab", "--mode", "float", path(&data("trivial.json"))]);
    assert_eq!(out.status.code(), Some(0));
}
