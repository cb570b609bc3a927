//! End-to-end tests of the binary: JSON shapes, exit codes, stream modes.

use std::io::Write;
use std::process::{Command, Stdio};

fn cdcrit() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cdcrit"))
}

fn run_json(args: &[&str], stdin: Option<&str>) -> (serde_json::Value, i32) {
    let mut cmd = cdcrit();
    cmd.args(args).stdout(Stdio::piped());
    if stdin.is_some() {
        cmd.stdin(Stdio::piped());
    }
    let mut child = cmd.spawn().expect("binary runs");
    if let Some(input) = stdin {
        child
            .stdin
            .as_mut()
            .unwrap()
            .write_all(input.as_bytes())
            .unwrap();
    }
    let out = child.wait_with_output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let value = serde_json::from_str(text.trim()).unwrap_or(serde_json::Value::Null);
    (value, out.status.code().unwrap_or(-1))
}

fn c6_graph6() -> String {
    cdcrit::graph6::encode(&cdcrit::graph::Graph::cycle(6))
}

#[test]
fn gamma_c_on_c6() {
    let (v, code) = run_json(&["gamma-c", &c6_graph6()], None);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], "cdcrit/1");
    assert_eq!(v["gamma_c"], 4);
    assert_eq!(v["witness"], serde_json::json!([0, 1, 2, 3]));
}

#[test]
fn gamma_c_reads_stdin() {
    let (v, code) = run_json(&["gamma-c", "--all"], Some(&format!("{}\n", c6_graph6())));
    assert_eq!(code, 0);
    assert_eq!(v["all_min_sets"].as_array().unwrap().len(), 6);
}

#[test]
fn critical_exit_codes() {
    let (v, code) = run_json(&["critical", &c6_graph6()], None);
    assert_eq!(code, 0);
    assert_eq!(v["is_critical"], true);
    assert_eq!(v["k"], 4);

    // C4 plus a pendant vertex is not critical: exit 1
    let g = cdcrit::graph::Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
    let (v, code) = run_json(&["critical", &cdcrit::graph6::encode(&g)], None);
    assert_eq!(code, 1);
    assert_eq!(v["is_critical"], false);
}

#[test]
fn blocks_report() {
    let g = cdcrit::graph::Graph::path(5);
    let (v, code) = run_json(&["blocks", &cdcrit::graph6::encode(&g)], None);
    assert_eq!(code, 0);
    assert_eq!(v["zeta"], 3);
    assert_eq!(v["zeta0"], 2);
    assert_eq!(v["cut_vertices"], serde_json::json!([1, 2, 3]));
}

#[test]
fn factor_critical_exit_codes() {
    let c5 = cdcrit::graph6::encode(&cdcrit::graph::Graph::cycle(5));
    let (v, code) = run_json(&["factor-critical", "--ell", "1", &c5], None);
    assert_eq!(code, 0);
    assert_eq!(v["holds"], true);

    // parity mismatch is a usage/input error: exit 2
    let (_, code) = run_json(&["factor-critical", "--ell", "1", &c6_graph6()], None);
    assert_eq!(code, 2);
}

#[test]
fn check_properties() {
    let star = cdcrit::graph6::encode(&cdcrit::graph::Graph::star(3));
    let (v, code) = run_json(&["check", "--property", "claw-free", &star], None);
    assert_eq!(code, 1);
    assert_eq!(v["holds"], false);

    let c4 = cdcrit::graph6::encode(&cdcrit::graph::Graph::cycle(4));
    let (v, code) = run_json(&["check", "--property", "diam-critical", "--k", "2", &c4], None);
    assert_eq!(code, 0);
    assert_eq!(v["holds"], true);
}

#[test]
fn gen_emits_graph6_and_sidecar() {
    let dir = std::env::temp_dir().join(format!("cdcrit-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let sidecar = dir.join("claims.json");
    let out = cdcrit()
        .args([
            "gen",
            "--family",
            "F",
            "--params",
            "p=1,q=2,r=2",
            "--sidecar",
            sidecar.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let g6 = String::from_utf8(out.stdout).unwrap();
    let g = cdcrit::graph6::decode(g6.trim()).unwrap();
    assert_eq!(cdcrit::gamma::gamma_c_value(&g).unwrap(), 7);
    let claims: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&sidecar).unwrap()).unwrap();
    assert_eq!(claims["claims"]["gamma_c"], 7);
    assert_eq!(claims["claims"]["zeta"], 3);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn gen_rejects_bad_specs() {
    let out = cdcrit().args(["gen", "--spec", "X:s=1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = cdcrit().args(["gen", "--spec", "WAT:x=1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_internal_and_stream_agree() {
    // all 2-critical graphs on up to 5 vertices, internal enumeration
    let out = cdcrit()
        .args(["enumerate", "--max-n", "5", "--k", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let internal = String::from_utf8(out.stdout).unwrap();
    assert!(!internal.trim().is_empty());

    // piping the full census through the stream filter gives the same set
    let all = cdcrit()
        .args(["enumerate", "--max-n", "5"])
        .output()
        .unwrap();
    let mut child = cdcrit()
        .args(["enumerate", "--stream", "--k", "2"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(&all.stdout)
        .unwrap();
    let streamed = child.wait_with_output().unwrap();
    let streamed = String::from_utf8(streamed.stdout).unwrap();
    let a: std::collections::BTreeSet<&str> = internal.lines().collect();
    let b: std::collections::BTreeSet<&str> = streamed.lines().collect();
    assert_eq!(a, b);
    for line in &a {
        let g = cdcrit::graph6::decode(line).unwrap();
        assert_eq!(cdcrit::critical::criticality_level(&g).unwrap(), Some(2));
    }
}

#[test]
fn verify_suite_runs() {
    let dir = std::env::temp_dir().join(format!("cdcrit-verify-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let manifest = dir.join("m.manifest");
    std::fs::write(&manifest, "chen.max_n = 5\n").unwrap();
    let (v, code) = run_json(
        &[
            "verify",
            "--suite",
            "chen",
            "--manifest",
            manifest.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(code, 0);
    assert_eq!(v["suite"], "chen");
    assert_eq!(v["passed"], true);
    std::fs::remove_dir_all(&dir).ok();

    let out = cdcrit().args(["verify", "--suite", "wat"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn env_var_overrides_census_cap() {
    let out = cdcrit()
        .env("CDCRIT_MAX_N", "4")
        .args(["enumerate", "--max-n", "5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = cdcrit()
        .env("CDCRIT_MAX_N", "5")
        .args(["enumerate", "--max-n", "5"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 31);
}

#[test]
fn malformed_graph6_is_exit_2() {
    let (_, code) = run_json(&["gamma-c", "A\u{7f}"], None);
    assert_eq!(code, 2);
}
