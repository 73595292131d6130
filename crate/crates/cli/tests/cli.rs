use std::path::Path;
use std::process::{Command, Output};

fn workbench(args: &[&str], cache: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_workbench"))
        .args(args)
        .env("WORKBENCH_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn datum_list_and_describe() {
    let dir = tempfile::tempdir().unwrap();
    let o = workbench(&["datum", "list"], dir.path());
    assert!(o.status.success());
    assert_eq!(stdout(&o), "SL2\nGL2\nSL3\nGL3\nSp4\nG2\n");
    let o = workbench(&["datum", "describe", "--group", "Sp4", "--json"], dir.path());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["positive_roots"].as_array().unwrap().len(), 4);
    let o = workbench(&["datum", "describe", "--group", "E8"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn adm_sizes_and_report() {
    let dir = tempfile::tempdir().unwrap();
    for (m, n) in [(1, 5), (2, 9), (3, 13)] {
        let o = workbench(&["adm", "--group", "SL2", "--mu", &m.to_string(), "--json"], dir.path());
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["size"], n);
    }
    let o = workbench(&["adm", "--group", "GL2", "--mu", "1,0", "--report"], dir.path());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 4);
    assert!(text.contains("pi^1 s0"));
    let o = workbench(&["adm", "--group", "SL2", "--mu", "-1"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn mul_examples() {
    let dir = tempfile::tempdir().unwrap();
    let o = workbench(
        &[
            "mul", "--group", "SL2", "--p", "3", "--q", "0",
            "--lhs", "T[e] + T[s0] + T[s1] + T[s0 s1] + T[s1 s0]",
            "--rhs", "T[s1]",
        ],
        dir.path(),
    );
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "T[s1 s0 s1]");
    let o = workbench(&["mul", "--group", "SL2", "--lhs", "T[s0]", "--rhs", "T[s0]"], dir.path());
    assert_eq!(stdout(&o).trim(), "q*T[e] + (q-1)*T[s0]");
    let o = workbench(&["mul", "--group", "SL2", "--p", "3", "--lhs", "T[s0]", "--rhs", "T[s0]"], dir.path());
    assert_eq!(stdout(&o).trim(), "2*T[s0]");
    let o = workbench(&["mul", "--group", "SL2", "--p", "2", "--lhs", "T[s0]", "--rhs", "T[s0]"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("p > 2"));
    let o = workbench(
        &["mul", "--group", "SL2", "--p", "2", "--allow-p2", "--lhs", "T[s0]", "--rhs", "T[s0]"],
        dir.path(),
    );
    assert_eq!(stdout(&o).trim(), "T[s0]");
}

fn strip_timing(path: &Path) -> serde_json::Value {
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    for r in v.as_array_mut().unwrap() {
        r["duration_ms"] = serde_json::json!(0);
    }
    v
}

#[test]
fn verify_passes_with_and_without_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let c = dir.path().join("c.json");
    let base = ["verify", "all", "--group", "GL2", "--height", "4", "--primes", "3,5", "--report-file"];
    let run = |out: &Path, extra: &[&str]| {
        let mut args: Vec<&str> = base.to_vec();
        args.push(out.to_str().unwrap());
        args.extend_from_slice(extra);
        workbench(&args, &cache)
    };
    let o = run(&a, &["--no-cache"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("all verifications passed"));
    assert!(!cache.exists());
    assert!(run(&b, &[]).status.success());
    assert!(cache.join("GL2.v1.json").exists());
    assert!(run(&c, &[]).status.success());
    assert_eq!(strip_timing(&a), strip_timing(&b));
    assert_eq!(strip_timing(&a), strip_timing(&c));
}

#[test]
fn verify_single_suite_json() {
    let dir = tempfile::tempdir().unwrap();
    let o = workbench(
        &["verify", "central", "--group", "SL2", "--height", "10", "--primes", "3,5", "--json", "--no-cache"],
        dir.path(),
    );
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["suite"], "central");
    assert_eq!(v[0]["passed"], true);
    assert_eq!(v[0]["cases_total"], 12);
    let o = workbench(&["verify", "central", "--group", "SL2", "--primes", "2", "--no-cache"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn export_tables() {
    let dir = tempfile::tempdir().unwrap();
    let o = workbench(&["export", "adm-sizes", "--group", "SL2"], dir.path());
    assert_eq!(
        stdout(&o),
        "mu,height,size\n[0],0,1\n[1],2,5\n[2],4,9\n[3],6,13\n[4],8,17\n[5],10,21\n"
    );
    let out = dir.path().join("strata.json");
    let o = workbench(
        &["export", "strata", "--group", "GL2", "--mu", "1,0", "--format", "json", "--out", out.to_str().unwrap()],
        dir.path(),
    );
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 3);
    let o = workbench(&["export", "strata", "--group", "GL2"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    let o = workbench(&["export", "matrix", "--group", "SL2", "--height", "4"], dir.path());
    assert_eq!(stdout(&o), "lambda,[0],[1],[2]\n[0],1,1,1\n[1],0,1,1\n[2],0,0,1\n");
}
