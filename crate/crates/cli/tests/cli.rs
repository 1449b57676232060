use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn wmgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wmgraph")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    })
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Writes a generated graph into `dir` and returns its path.
fn generated(dir: &TempDir, name: &str, kind: &[&str]) -> PathBuf {
    let path = dir.path().join(name);
    let mut args = vec!["generate"];
    args.extend_from_slice(kind);
    let out = wmgraph(&args);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    fs::write(&path, &out.stdout).unwrap();
    path
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn recognize_cycle_of_length_seven() {
    let dir = TempDir::new().unwrap();
    let c7 = generated(&dir, "c7.txt", &["cycle", "7"]);
    let out = wmgraph(&["recognize", "--graph", p(&c7)]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["locally-weakly-modular"]["verdict"], "yes");
    assert_eq!(v["weakly-modular"]["verdict"], "no");
    assert_eq!(v["simply-connected"]["verdict"], "no");
    assert!(v["weakly-modular"]["witness"].is_array());
}

#[test]
fn barycentric_graph_of_triangle_is_a_star() {
    let dir = TempDir::new().unwrap();
    let k3 = generated(&dir, "k3.txt", &["complete", "3"]);
    let out = wmgraph(&["gstar", "--graph", p(&k3)]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "4 3\n0 3\n1 3\n2 3\n");
    let star = dir.path().join("star.txt");
    let out = wmgraph(&["gstar", "--graph", p(&k3), "--out", p(&star)]);
    assert_eq!(code(&out), 0);
    assert_eq!(fs::read_to_string(&star).unwrap(), "4 3\n0 3\n1 3\n2 3\n");
    let side = json(&out);
    assert_eq!(side["origin"], serde_json::json!([0, 1, 2]));
    assert_eq!(side["sets"][3], serde_json::json!([0, 1, 2]));
}

#[test]
fn zero_extension_on_an_edge() {
    let dir = TempDir::new().unwrap();
    let k2 = generated(&dir, "k2.txt", &["complete", "2"]);
    let inst = dir.path().join("inst.json");
    fs::write(&inst, r#"{"n": 2, "b": [[0, 0, 1], [1, 1, 1]], "c": [[0, 1, 3]]}"#).unwrap();
    let out = wmgraph(&["zeroext", "--graph", p(&k2), "--instance", p(&inst), "--mode", "both"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["exact"]["cost"], "1");
    let approx: f64 = v["approx"]["cost"].as_str().unwrap().parse().unwrap();
    assert!(approx <= 2.0);
    assert!(v["ratio"].is_string());
}

#[test]
fn zero_extension_budget_and_parse_errors() {
    let dir = TempDir::new().unwrap();
    let q3 = generated(&dir, "q3.txt", &["cube", "3"]);
    let inst = dir.path().join("inst.json");
    fs::write(&inst, r#"{"n": 4, "b": [[0, 0, "1/2"]], "c": []}"#).unwrap();
    let out = wmgraph(&["zeroext", "--graph", p(&q3), "--instance", p(&inst), "--mode", "exact", "--budget", "10"]);
    assert_eq!(code(&out), 4);
    fs::write(&inst, r#"{"n": 1, "b": [[0, 0, 0.5]]}"#).unwrap();
    let out = wmgraph(&["zeroext", "--graph", p(&q3), "--instance", p(&inst)]);
    assert_eq!(code(&out), 3);
}

#[test]
fn exit_codes_for_bad_input() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "3 1\n0 1\n").unwrap();
    assert_eq!(code(&wmgraph(&["recognize", "--graph", p(&bad)])), 3);
    fs::write(&bad, "2 1\n0 x\n").unwrap();
    assert_eq!(code(&wmgraph(&["recognize", "--graph", p(&bad)])), 3);
    assert_eq!(code(&wmgraph(&["recognize"])), 3);
    assert_eq!(code(&wmgraph(&["frobnicate"])), 3);
    assert_eq!(code(&wmgraph(&["--help"])), 0);
}

#[test]
fn not_applicable_inputs_exit_two() {
    let dir = TempDir::new().unwrap();
    let c5 = generated(&dir, "c5.txt", &["cycle", "5"]);
    assert_eq!(code(&wmgraph(&["gstar", "--graph", p(&c5)])), 2);
    assert_eq!(code(&wmgraph(&["fill", "--graph", p(&c5), "--cycle", "0,1,2,3,4"])), 2);
    assert_eq!(code(&wmgraph(&["cover", "--graph", p(&c5), "--radius", "2"])), 2);
    let out = wmgraph(&["hyperbolicity", "--graph", p(&c5)]);
    assert_eq!(code(&out), 2);
    let v = json(&out);
    assert_eq!(v["delta_doubled"], 1);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "not-evaluated"));
}

#[test]
fn cap_errors_exit_four() {
    let dir = TempDir::new().unwrap();
    let c7 = generated(&dir, "c7.txt", &["cycle", "7"]);
    assert_eq!(code(&wmgraph(&["cover", "--graph", p(&c7), "--radius", "3", "--cap", "1"])), 4);
    let grid = generated(&dir, "grid.txt", &["grid", "4", "4"]);
    assert_eq!(code(&wmgraph(&["hyperbolicity", "--graph", p(&grid), "--cap", "2"])), 4);
    let q3 = generated(&dir, "q3.txt", &["cube", "3"]);
    assert_eq!(code(&wmgraph(&["diag", "--graph", p(&q3), "--cap", "1"])), 4);
}

#[test]
fn cover_of_cycle_is_a_path() {
    let dir = TempDir::new().unwrap();
    let c7 = generated(&dir, "c7.txt", &["cycle", "7"]);
    let out = wmgraph(&["cover", "--graph", p(&c7), "--radius", "3", "--json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["graph"]["n"], 7);
    assert_eq!(v["graph"]["edges"].as_array().unwrap().len(), 6);
    assert_eq!(v["projection"].as_array().unwrap().len(), 7);
}

#[test]
fn thickening_and_diagonals_of_the_cube() {
    let dir = TempDir::new().unwrap();
    let q3 = generated(&dir, "q3.txt", &["cube", "3"]);
    let out = wmgraph(&["thicken", "--graph", p(&q3), "--json"]);
    assert_eq!(json(&out)["graph"]["edges"].as_array().unwrap().len(), 28);
    let out = wmgraph(&["diag", "--graph", p(&q3), "--json"]);
    let v = json(&out);
    assert_eq!(v["rank"], 2);
    assert_eq!(v["graph"]["edges"].as_array().unwrap().len(), 28);
    let out = wmgraph(&["diag", "--graph", p(&q3), "--k", "1", "--json"]);
    assert_eq!(json(&out)["graph"]["edges"].as_array().unwrap().len(), 24);
}

#[test]
fn normal_paths_and_fellow_travel() {
    let dir = TempDir::new().unwrap();
    let p4 = generated(&dir, "p4.txt", &["path", "4"]);
    let out = wmgraph(&["normalpath", "--graph", p(&p4), "--from", "0", "--to", "3", "--fellow", "1,3"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["vertices"], serde_json::json!([0, 1, 2, 3]));
    assert_eq!(v["fellow"]["fellow_travelers"], true);
}

#[test]
fn hull_bfs_and_fill() {
    let dir = TempDir::new().unwrap();
    let q3 = generated(&dir, "q3.txt", &["cube", "3"]);
    let out = wmgraph(&["hull", "--graph", p(&q3), "--set", "0,7"]);
    assert_eq!(json(&out)["hull"].as_array().unwrap().len(), 8);

    let out = wmgraph(&["bfs", "--graph", p(&q3), "--seed", "5"]);
    let v = json(&out);
    assert_eq!(v["distance_preserving"], true);
    assert_eq!(v["order"].as_array().unwrap().len(), 8);
    assert_eq!(code(&wmgraph(&["bfs", "--graph", p(&q3)])), 3);

    let c6 = generated(&dir, "c6.txt", &["cycle", "6"]);
    let out = wmgraph(&["bfs", "--graph", p(&c6), "--seed", "0", "--order", "0,3,1,2,4,5"]);
    let v = json(&out);
    assert_eq!(v["distance_preserving"], false);
    assert!(v["witness"].is_object());

    let grid = generated(&dir, "grid.txt", &["grid", "3", "3"]);
    let out = wmgraph(&["fill", "--graph", p(&grid), "--cycle", "0,1,2,5,8,7,6,3"]);
    let v = json(&out);
    assert!(v["area"].as_u64().unwrap() <= 128);
    assert!(v["moves"][0]["face"].is_array());
    assert_eq!(code(&wmgraph(&["fill", "--graph", p(&grid), "--cycle", "0,4"])), 3);
}

#[test]
fn generators() {
    let dir = TempDir::new().unwrap();
    let k2 = generated(&dir, "k2.txt", &["complete", "2"]);
    let k3 = generated(&dir, "k3.txt", &["complete", "3"]);
    let out = wmgraph(&["generate", "cartesian-product", p(&k2), p(&k3), "--json"]);
    assert_eq!(json(&out)["graph"]["n"], 6);
    let prism = dir.path().join("prism.txt");
    wmgraph(&["generate", "--out", p(&prism), "cartesian-product", p(&k2), p(&k3)]);
    let v = json(&wmgraph(&["recognize", "--graph", p(&prism)]));
    assert_eq!(v["swm"]["verdict"], "yes");

    let c4 = generated(&dir, "c4.txt", &["cycle", "4"]);
    let out = wmgraph(&["generate", "gated-amalgam", p(&c4), "0,1", p(&c4), "0,1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("6 7\n"));
    let k4 = generated(&dir, "k4.txt", &["complete", "4"]);
    let out = wmgraph(&["generate", "gated-amalgam", p(&k4), "0,1", p(&c4), "0,1"]);
    assert_eq!(code(&out), 3);

    assert_eq!(code(&wmgraph(&["generate", "random-swm"])), 3);
    let a = wmgraph(&["generate", "random-swm", "--seed", "11", "--max-vertices", "18"]);
    let b = wmgraph(&["generate", "random-swm", "--seed", "11", "--max-vertices", "18"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn manifests_run_each_graph_and_output_is_stable() {
    let dir = TempDir::new().unwrap();
    generated(&dir, "q3.txt", &["cube", "3"]);
    generated(&dir, "k33.txt", &["complete-bipartite", "3", "3"]);
    let manifest = dir.path().join("corpus.txt");
    fs::write(&manifest, "# corpus\nq3.txt\nk33.txt\n").unwrap();
    let first = wmgraph(&["recognize", "--manifest", p(&manifest)]);
    assert_eq!(code(&first), 0);
    let v = json(&first);
    assert_eq!(v[0]["graph"], "q3.txt");
    assert_eq!(v[1]["result"]["dual-polar"]["verdict"], "yes");
    let second = wmgraph(&["recognize", "--manifest", p(&manifest)]);
    assert_eq!(first.stdout, second.stdout);

    let out = wmgraph(&["hyperbolicity", "--manifest", p(&manifest)]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)[0]["result"]["kappa"], 1);
}
