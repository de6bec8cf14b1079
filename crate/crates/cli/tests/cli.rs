//! End-to-end tests of the `lcdeg` binary: exit codes, determinism, and the
//! documented command examples.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lcdeg"))
}

fn tmp(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write_tmp(name: &str, contents: &str) -> PathBuf {
    let path = tmp(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

const C5_EDGES: &str = "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n";

#[test]
fn deltaloc_c5() {
    let file = write_tmp("c5.edges", C5_EDGES);
    let out = bin().arg("deltaloc").arg(&file).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("delta_loc = 2"));
}

#[test]
fn deltaloc_k2_orbit_check_agrees() {
    let file = write_tmp("k2.edges", "2 1\n0 1\n");
    let out = bin()
        .args(["deltaloc", file.to_str().unwrap(), "--orbit-check"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("delta_loc = 1"));
    assert!(text.contains("Agree"));
}

#[test]
fn deltaloc_cap_refusal_is_exit_2() {
    // perfect matching on 40 vertices: 2^40 enumeration refuses without
    // --bipartite, the 20+20 one-sided split goes through
    let mut text = String::from("40 20\n");
    for i in 0..20 {
        text.push_str(&format!("{i} {}\n", 20 + i));
    }
    let file = write_tmp("big.edges", &text);
    let out = bin().arg("deltaloc").arg(&file).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("exponential search too large"));

    let ok = bin()
        .args(["deltaloc", file.to_str().unwrap(), "--bipartite"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0), "{}", stderr(&ok));
    assert!(stdout(&ok).contains("delta_loc = 1"));
}

#[test]
fn deltaloc_env_cap_override() {
    let file = write_tmp("c5b.edges", C5_EDGES);
    let out = bin()
        .arg("deltaloc")
        .arg(&file)
        .env("LCDEG_CAP_N", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn deltaloc_reads_graph6() {
    let file = write_tmp("c5.g6", "Dhc\n");
    let out = bin().arg("deltaloc").arg(&file).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("delta_loc = 2"));
}

#[test]
fn deltaloc_parse_failure_is_exit_2() {
    let file = write_tmp("bad.edges", "2 1\n1 0\n");
    let out = bin().arg("deltaloc").arg(&file).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn paley_5_holds() {
    let out = bin().args(["paley", "5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("delta_loc(Pal_5) = 2"));
    assert!(text.contains("holds"));
}

#[test]
fn paley_7_rejected_with_reason() {
    let out = bin().args(["paley", "7"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not congruent to 1 mod 4"));
}

#[test]
fn paley_13_verify_all_passes() {
    let out = bin().args(["paley", "13", "--verify-all"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("character-sum identity: pass"));
    assert!(text.contains("Weil bound: pass"));
}

#[test]
fn reduce_unit_matrix() {
    let file = write_tmp("a_unit.txt", "2 1\n1\n1\n");
    let out = bin()
        .args([
            "reduce",
            file.to_str().unwrap(),
            "--gadget-side",
            "8",
            "--required-d",
            "4",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("d_min = 2"));
    assert!(text.contains("EQUAL"));
}

#[test]
fn reduce_singular_short_circuits() {
    let file = write_tmp("a_singular.txt", "3 2\n11\n11\n00\n");
    let out = bin().arg("reduce").arg(&file).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("minimum weight 0, no graph built"));
}

#[test]
fn reduce_hamming_with_gadget_file_and_bundle() {
    let matrix = write_tmp(
        "hamming.txt",
        "7 4\n1000\n0100\n0010\n0001\n1101\n1011\n0111\n",
    );
    // circulant gadget with stacked distance 6 on both sides
    let mut gadget = String::from("10 10\n");
    let first = [1u8, 1, 1, 1, 0, 1, 0, 0, 0, 0];
    for i in 0..10 {
        for j in 0..10 {
            gadget.push(if first[(j + 10 - i) % 10] == 1 { '1' } else { '0' });
        }
        gadget.push('\n');
    }
    let gadget_file = write_tmp("gadget.txt", &gadget);
    let bundle = tmp("bundle");
    let out = bin()
        .args([
            "reduce",
            matrix.to_str().unwrap(),
            "--gadget-file",
            gadget_file.to_str().unwrap(),
            "--falsifier-trials",
            "10000",
            "--emit-dir",
            bundle.to_str().unwrap(),
            "--output",
            "json",
            "--deterministic",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["d_min"], 3);
    assert_eq!(json["delta_loc_plus_1"], 3);
    assert_eq!(json["equal"], true);
    assert_eq!(json["method"], "theorem-assisted");
    for name in [
        "a.txt",
        "gadget.edges",
        "composed.edges",
        "composed.dot",
        "manifest.json",
    ] {
        assert!(bundle.join(name).exists(), "missing bundle file {name}");
    }
    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(bundle.join("manifest.json")).unwrap())
            .unwrap();
    assert_eq!(manifest["k"], 4);
    assert_eq!(manifest["n"], 3);
}

#[test]
fn reduce_with_paley_gadget_is_experimental_exact() {
    let file = write_tmp("a_unit3.txt", "2 1\n1\n1\n");
    let out = bin()
        .args([
            "reduce",
            file.to_str().unwrap(),
            "--paley-gadget",
            "13",
            "--output",
            "json",
            "--deterministic",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["method"], "exact-general");
    assert_eq!(json["equal"], true);

    // Pal_5 is too weak a gadget for this instance
    let out = bin()
        .args(["reduce", file.to_str().unwrap(), "--paley-gadget", "5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("precondition"));
}

#[test]
fn reduce_gadget_exhaustion_is_exit_2() {
    let file = write_tmp("a_unit2.txt", "2 1\n1\n1\n");
    let out = bin()
        .args([
            "reduce",
            file.to_str().unwrap(),
            "--gadget-side",
            "2",
            "--required-d",
            "4",
            "--attempts",
            "50",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("gadget search exhausted"));
}

#[test]
fn lll_constants() {
    let out = bin().args(["lll", "bipartite"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("c_max = 0.110"));

    let out = bin().args(["lll", "general"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("c_max = 0.189"));
}

#[test]
fn sample_histograms_are_deterministic() {
    let run = || {
        let out = bin()
            .args([
                "sample",
                "graph",
                "--size",
                "10",
                "--count",
                "50",
                "--seed",
                "7",
                "--output",
                "json",
                "--deterministic",
            ])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        stdout(&out)
    };
    let a = run();
    let b = run();
    assert_eq!(a, b, "identical seeds must give byte-identical output");
    assert!(a.contains("histogram"));
}

#[test]
fn json_envelope_is_deterministic_for_deltaloc() {
    let file = write_tmp("c5c.edges", C5_EDGES);
    let run = || {
        let out = bin()
            .args([
                "deltaloc",
                file.to_str().unwrap(),
                "--output",
                "json",
                "--deterministic",
            ])
            .output()
            .unwrap();
        stdout(&out)
    };
    let a = run();
    assert_eq!(a, run());
    let json: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(json["delta_loc"], 2);
    assert_eq!(json["witness"], serde_json::json!([0]));
    assert!(json.get("timestamp_unix").is_none());
}

#[test]
fn dot_output_for_paley() {
    let out = bin()
        .args(["paley", "5", "--output", "dot"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("graph G {"));
    assert!(text.contains("0 -- 1;"));
}
