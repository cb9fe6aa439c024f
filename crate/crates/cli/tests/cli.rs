use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn turan(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_turan"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen(args: &[&str]) -> String {
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    let o = turan(&full, None);
    assert!(o.status.success());
    stdout(&o)
}

fn temp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("turan-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn without_timings(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timings");
    v
}

#[test]
fn g26_is_m_free() {
    let o = turan(&["check", "-"], Some(&gen(&["g26"])));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "M-free: true");
}

#[test]
fn complete_graph_has_an_m1_witness() {
    let o = turan(
        &["check", "-", "--json"],
        Some(&gen(&["complete", "5", "3"])),
    );
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["results"]["violation"]["kind"], "M1");
    assert_eq!(
        v["results"]["violation"]["witness_edges"]
            .as_array()
            .unwrap()
            .len(),
        9
    );
    assert_eq!(v["command"], "check");
}

#[test]
fn piping_matches_files() {
    let path = temp("g2-9.txt");
    let o = turan(&["gen", "g2", "9", "--out", path.to_str().unwrap()], None);
    assert!(o.status.success());
    let piped = gen(&["g2", "9"]);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), piped);
    let from_file = turan(&["region", path.to_str().unwrap()], None);
    let from_pipe = turan(&["region", "-"], Some(&piped));
    assert_eq!(stdout(&from_file), stdout(&from_pipe));
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(turan(&["frobnicate"], None).status.code(), Some(2));
    let o = turan(&["check", "-"], Some("3 5\n0 1 2\n0 1\n"));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(turan(&["gen", "g1", "1"], None).status.code(), Some(2));
    assert_eq!(
        turan(&["check", "-", "--mode", "slow"], Some("3 3\n"))
            .status
            .code(),
        Some(2)
    );
    let o = turan(
        &["symmetrize", "-", "--algorithm", "2"],
        Some("3 3\n0 1 2\n"),
    );
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn search_six_vertices() {
    let o = turan(&["search", "--n", "6", "--family", "m", "--json"], None);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["results"]["max_edges"], 16);
    assert_eq!(v["results"]["optimal"], true);
    assert_eq!(v["results"]["bound_2n3_27"]["num"], 16);
    let text = stdout(&turan(&["search", "--n", "4"], None));
    assert!(text.starts_with("# max_edges: 4\n"));
    assert!(text.contains("\n3 4\n"));
}

#[test]
fn custom_family_search() {
    let path = temp("k4.txt");
    std::fs::write(&path, gen(&["complete", "4", "3"])).unwrap();
    let o = turan(
        &[
            "search",
            "--n",
            "5",
            "--family",
            "custom",
            "--forbid",
            path.to_str().unwrap(),
        ],
        None,
    );
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("# max_edges: 7\n"));
}

#[test]
fn lagrangian_reports_are_deterministic() {
    let k4 = gen(&["complete", "4", "3"]);
    let args = ["lagrangian", "-", "--certify", "--seed", "5", "--json"];
    let a: Value = serde_json::from_str(&stdout(&turan(&args, Some(&k4)))).unwrap();
    let b: Value = serde_json::from_str(&stdout(&turan(&args, Some(&k4)))).unwrap();
    assert_eq!(without_timings(a.clone()), without_timings(b));
    assert!((a["results"]["lower_bound"].as_f64().unwrap() - 1.0 / 16.0).abs() < 1e-9);
    let ub = &a["results"]["certificate"]["upper_bound"];
    let (num, den) = (ub["num"].as_f64().unwrap(), ub["den"].as_f64().unwrap());
    assert!(num / den >= 1.0 / 16.0);
    assert_eq!(a["seed"], 5);
}

#[test]
fn symmetrize_writes_output_and_trace() {
    let trace = temp("trace.json");
    let input = "3 4\n0 1 2\n0 1 3\n0 2 3\n";
    let o = turan(
        &[
            "symmetrize",
            "-",
            "--algorithm",
            "2",
            "--alpha",
            "1",
            "--trace",
            trace.to_str().unwrap(),
        ],
        Some(input),
    );
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("3 3\n0 1 2\n"));
    let t: Value = serde_json::from_str(&std::fs::read_to_string(&trace).unwrap()).unwrap();
    assert_eq!(t["alpha"]["num"], 1);
    assert_eq!(t["alpha"]["den"], 1);
    assert_eq!(t["events"][0]["event"], "remove");
    assert_eq!(t["events"][0]["vertex"], 1);
    let one = turan(&["symmetrize", "-"], Some("3 4\n0 1 2\n"));
    assert!(stdout(&one).ends_with("3 4\n0 1 2\n1 2 3\n"));
}

#[test]
fn region_counts_and_edit_distance() {
    let a = temp("g91.txt");
    let b = temp("g90.txt");
    std::fs::write(&a, gen(&["kostochka", "9", "1"])).unwrap();
    std::fs::write(&b, gen(&["kostochka", "9", "0"])).unwrap();
    let (a, b) = (a.to_str().unwrap(), b.to_str().unwrap());
    assert_eq!(stdout(&turan(&["k43count", a], None)).trim(), "3");
    let ed = stdout(&turan(&["edlb", a, b], None));
    assert!(ed.starts_with("1/2 "));
    assert!(ed.contains("edit distance >= 1"));
    let star = stdout(&turan(&["region", "-"], Some(&gen(&["star", "10"]))));
    assert!(star.starts_with("shadow density: 1 (1.000000000)"));
}

#[test]
fn verify_region_suite() {
    let o = turan(&["verify-lemmas", "--suite", "region"], None);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("PASS phi-formula"));
    assert!(text.trim_end().ends_with("3/3 claims passed"));
    let o = turan(&["verify-lemmas", "--suite", "search", "--json"], None);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["results"]["claims"][0]["id"], "search-n6");
    assert_eq!(
        turan(&["verify-lemmas", "--suite", "nope"], None)
            .status
            .code(),
        Some(2)
    );
}
