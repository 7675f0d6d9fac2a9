use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn rackhom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rackhom")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn family(dir: &TempDir, args: &[&str]) -> PathBuf {
    let mut full = vec!["family"];
    full.extend_from_slice(args);
    let out = rackhom(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    write(dir, &format!("{}.json", args.join("-")), &stdout(&out))
}

fn json(args: &[&str]) -> Value {
    let out = rackhom(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

/// `(free_rank, [torsion])` for each degree.
fn groups(doc: &Value) -> Vec<(u64, Vec<u64>)> {
    doc["degrees"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| (d["free_rank"].as_u64().unwrap(), d["torsion"].as_array().unwrap().iter().map(|t| t.as_u64().unwrap()).collect()))
        .collect()
}

#[test]
fn family_output() {
    assert_eq!(stdout(&rackhom(&["family", "trivial", "2"])).trim(), r#"{"size":2,"op":[[0,1],[0,1]]}"#);
    let d3: Value = serde_json::from_str(&stdout(&rackhom(&["family", "dihedral", "3"]))).unwrap();
    assert_eq!(d3["op"][0], serde_json::json!([0, 2, 1]));
    assert_eq!(rackhom(&["family", "octahedral", "3"]).status.code(), Some(2));
    assert_eq!(rackhom(&["family", "alexander", "4", "2"]).status.code(), Some(2));
}

#[test]
fn check_round_trips_every_family() {
    let dir = TempDir::new().unwrap();
    for args in [&["trivial", "3"][..], &["dihedral", "5"], &["alexander", "5", "2"], &["conjugation-s3"], &["conjugation-q8"]] {
        let path = family(&dir, args);
        let out = rackhom(&["check", p(&path), "--quandle"]);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn check_failures() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", r#"{"size": 3, "op": [[0,1,2],[0,0,2],[0,1,2]]}"#);
    let out = rackhom(&["check", p(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("row 1 is not a permutation"));

    let swap = write(&dir, "swap.json", r#"{"size": 2, "op": [[1,0],[1,0]]}"#);
    assert_eq!(rackhom(&["check", p(&swap)]).status.code(), Some(0));
    let out = rackhom(&["check", p(&swap), "--quandle"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("0▷0 = 1"));

    let broken = write(&dir, "broken.json", "{\"size\": 2,\n \"op\": [[0,1],[0,1]");
    let out = rackhom(&["check", p(&broken)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let extra = write(&dir, "extra.json", r#"{"size": 1, "op": [[0]], "name": "point"}"#);
    assert_eq!(rackhom(&["check", p(&extra)]).status.code(), Some(2));
    let range = write(&dir, "range.json", r#"{"size": 2, "op": [[0,1],[0,2]]}"#);
    assert_eq!(rackhom(&["check", p(&range)]).status.code(), Some(2));
    assert_eq!(rackhom(&["check", "/nonexistent/rack.json"]).status.code(), Some(2));
}

#[test]
fn homology_documents() {
    let dir = TempDir::new().unwrap();
    let t2 = family(&dir, &["trivial", "2"]);
    let doc = json(&["homology", p(&t2), "--max-degree", "4"]);
    let ranks: Vec<u64> = groups(&doc).iter().map(|g| g.0).collect();
    assert_eq!(ranks, [1, 2, 4, 8, 16]);

    let d3 = family(&dir, &["dihedral", "3"]);
    let doc = json(&["homology", p(&d3), "--max-degree", "1"]);
    assert_eq!(groups(&doc)[1], (1, vec![]));
    let doc = json(&["homology", p(&d3), "--theory", "quandle", "--max-degree", "3"]);
    assert_eq!(groups(&doc), [(1, vec![]), (1, vec![]), (0, vec![]), (0, vec![3])]);
    assert_eq!(doc["theory"], "quandle");
    assert_eq!(doc["coefficient"], "Z");

    let doc = json(&["cohomology", p(&d3), "--max-degree", "0", "--coeff", "Z/7"]);
    assert_eq!(groups(&doc), [(0, vec![7])]);
}

#[test]
fn quandle_theory_needs_a_quandle() {
    let dir = TempDir::new().unwrap();
    let swap = write(&dir, "swap.json", r#"{"size": 2, "op": [[1,0],[1,0]]}"#);
    let out = rackhom(&["homology", p(&swap), "--theory", "quandle"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("0▷0 = 1"));
    assert!(rackhom(&["homology", p(&swap), "--theory", "rack"]).status.success());
}

#[test]
fn right_convention_gives_the_same_homology() {
    let dir = TempDir::new().unwrap();
    let file: Value = serde_json::from_str(&stdout(&rackhom(&["family", "alexander", "5", "2"]))).unwrap();
    let op: Vec<Vec<u64>> = serde_json::from_value(file["op"].clone()).unwrap();
    let transposed: Vec<Vec<u64>> = (0..op.len()).map(|x| op.iter().map(|row| row[x]).collect()).collect();
    let left = write(&dir, "left.json", &file.to_string());
    let right = write(&dir, "right.json", &serde_json::json!({"size": 5, "op": transposed, "convention": "right"}).to_string());
    let bare = write(&dir, "bare.json", &serde_json::json!({"size": 5, "op": transposed}).to_string());
    for theory in ["rack", "quandle"] {
        let a = json(&["homology", p(&left), "--theory", theory, "--max-degree", "3"]);
        let b = json(&["homology", p(&right), "--theory", theory, "--max-degree", "3"]);
        let c = json(&["homology", p(&bare), "--convention", "right", "--theory", theory, "--max-degree", "3"]);
        assert_eq!(a["degrees"], b["degrees"]);
        assert_eq!(a["degrees"], c["degrees"]);
    }
}

#[test]
fn cocycles_and_quillen() {
    let dir = TempDir::new().unwrap();
    let d3 = family(&dir, &["dihedral", "3"]);
    let coc = json(&["cocycles", p(&d3), "--coeff", "Z/3"]);
    let h2 = json(&["cohomology", p(&d3), "--theory", "quandle", "--max-degree", "2", "--coeff", "Z/3"]);
    assert_eq!(coc["group"]["order"], h2["degrees"][2]["order"]);

    let d4 = family(&dir, &["dihedral", "4"]);
    let coc = json(&["cocycles", p(&d4), "--coeff", "Z/2"]);
    let reps = coc["representatives"].as_array().unwrap();
    assert_eq!(reps.len(), 4);
    assert_eq!(coc["group"]["order"], 16);
    assert_eq!(reps[0].as_array().unwrap().len(), 4);

    let point = family(&dir, &["trivial", "1"]);
    let q = json(&["quillen", p(&point), "--max-degree", "0", "--coeff", "Z/2"]);
    assert_eq!(q["degrees"][0]["quillen"]["order"], 2);
    for d in q["degrees"].as_array().unwrap() {
        assert_eq!(d["quillen"], d["cohomology"]);
        assert_eq!(d["cohomology_degree"].as_u64(), d["degree"].as_u64().map(|n| n + 1));
    }
}

#[test]
fn basis_budget() {
    let dir = TempDir::new().unwrap();
    let d3 = family(&dir, &["dihedral", "3"]);
    let out = rackhom(&["homology", p(&d3), "--max-degree", "3", "--basis-budget", "80"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
    let out = Command::new(env!("CARGO_BIN_EXE_rackhom"))
        .args(["homology", p(&d3), "--max-degree", "3"])
        .env("RACKHOM_BASIS_BUDGET", "81")
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn documents_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let q8 = family(&dir, &["conjugation-q8"]);
    let run = || {
        let mut doc = json(&["cohomology", p(&q8), "--theory", "quandle", "--max-degree", "3", "--coeff", "Z/4"]);
        doc.as_object_mut().unwrap().remove("timing");
        doc.to_string()
    };
    assert_eq!(run(), run());
}

#[test]
fn free_operations() {
    assert_eq!(stdout(&rackhom(&["free-op", "a b : a", "b"])).trim(), "a b a b' a' : b");
    assert_eq!(stdout(&rackhom(&["free-op", "a", "a"])).trim(), "a : a");
    assert_eq!(stdout(&rackhom(&["free-op", "a", "a", "--quandle"])).trim(), "a");
    assert_eq!(stdout(&rackhom(&["free-op", "a", "a : b", "--inverse"])).trim(), "b");
    assert_eq!(stdout(&rackhom(&["free-op", "a", "b", "--inverse"])).trim(), "a' : b");
    assert_eq!(rackhom(&["free-op", "A", "b"]).status.code(), Some(2));
}

#[test]
fn usage_errors() {
    assert_eq!(rackhom(&["homology"]).status.code(), Some(2));
    let dir = TempDir::new().unwrap();
    let d3 = family(&dir, &["dihedral", "3"]);
    assert_eq!(rackhom(&["homology", p(&d3), "--coeff", "Z/1"]).status.code(), Some(2));
    assert_eq!(rackhom(&["homology", p(&d3), "--theory", "group"]).status.code(), Some(2));
}
