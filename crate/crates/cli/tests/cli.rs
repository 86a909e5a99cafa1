use std::io::Write;
use std::process::{Command, Output, Stdio};

fn arbogray(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arbogray"))
        .args(args)
        .env_remove("ARBOGRAY_BUDGET")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn graycode_pipes_into_verify() {
    let code = arbogray(&["graycode", "fig-bipartite7"]);
    assert!(code.status.success());
    let mut verify = Command::new(env!("CARGO_BIN_EXE_arbogray"))
        .args(["verify", "fig-bipartite7", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    verify.stdin.take().unwrap().write_all(&code.stdout).unwrap();
    let out = verify.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().filter(|l| l.starts_with("pass")).count(), 5);
}

#[test]
fn graycode_files_verify() {
    let dir = tempfile::tempdir().unwrap();
    for instance in ["bidirected-complete:4", "random-tournament:6:42", "fig-bipartite7", "intro-3vertex"] {
        let json = dir.path().join("p.json");
        let delta = dir.path().join("p.txt");
        let out = arbogray(&[
            "graycode",
            instance,
            "--json",
            json.to_str().unwrap(),
            "--delta",
            delta.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{instance}");
        assert!(stdout(&out).is_empty());
        for p in [&json, &delta] {
            let v = arbogray(&["verify", instance, p.to_str().unwrap()]);
            assert_eq!(v.status.code(), Some(0), "{instance} {}", p.display());
        }
        let parsed: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
        let n = parsed["n_steps"].as_u64().unwrap() as usize;
        assert_eq!(parsed["steps"].as_array().unwrap().len(), n);
        assert_eq!(parsed["flips"].as_array().unwrap().len(), n - 1);
    }
}

#[test]
fn verify_rejects_a_broken_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    // both arborescences of the intro graph, but the second one twice
    std::fs::write(&path, "0 1\n-1 +2\n-2 +1\n").unwrap();
    let out = arbogray(&["verify", "intro-3vertex", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(5));
    assert!(stdout(&out).contains("FAIL distinct"));
}

#[test]
fn parity_of_graph13() {
    let out = arbogray(&["parity", "fig-graph13"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("classes 7 6"));
    assert!(text.contains("determinant 1"));
    assert!(text.contains("Hamiltonian cycle impossible"));
}

#[test]
fn hamsearch_finds_no_cycle_in_graph13() {
    let out = arbogray(&["hamsearch", "fig-graph13", "--cycle"]);
    assert_eq!(stdout(&out).trim(), "none");
    let out = arbogray(&["hamsearch", "fig-graph13"]);
    assert!(stdout(&out).starts_with("path 13"));
}

#[test]
fn refusal_and_oracle() {
    let out = arbogray(&["graycode", "fig-graph13"]);
    assert_eq!(out.status.code(), Some(2));
    let out = arbogray(&["graycode", "fig-graph13", "--oracle"]);
    assert!(out.status.success());
    let out = arbogray(&["graycode", "fig-graph13", "--strategy", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "3 2 0\n0 1\n1 x\n").unwrap();
    assert_eq!(arbogray(&["enumerate", bad.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(arbogray(&["enumerate", "bidirected-cycle:zz"]).status.code(), Some(1));
    assert_eq!(arbogray(&["--budget", "5", "enumerate", "fig-graph13"]).status.code(), Some(3));
    let env = Command::new(env!("CARGO_BIN_EXE_arbogray"))
        .args(["enumerate", "fig-graph13"])
        .env("ARBOGRAY_BUDGET", "12")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(3));
    assert_eq!(arbogray(&["--search-budget", "4", "hamsearch", "fig-bipartite7"]).status.code(), Some(3));
}

#[test]
fn enumerate_and_show() {
    let out = arbogray(&["enumerate", "bidirected-cycle:5"]);
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("count 5"));
    assert_eq!(text.lines().count(), 6);
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.txt");
    std::fs::write(&file, stdout(&arbogray(&["show", "fig-flipG1"]))).unwrap();
    let from_file = arbogray(&["enumerate", file.to_str().unwrap()]);
    assert_eq!(stdout(&from_file), stdout(&arbogray(&["enumerate", "fig-flipG1"])));
}

#[test]
fn flipgraph_dot_and_legend() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("fg.dot");
    let out = arbogray(&["flipgraph", "fig-flipG1", "--dot", dot.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("nodes 6"));
    assert!(text.contains("degree-one 1"));
    assert!(text.contains("bipartite false"));
    let dot_text = std::fs::read_to_string(&dot).unwrap();
    assert!(dot_text.starts_with("graph flips {"));
    assert_eq!(dot_text.matches(" -- ").count(), 7);
    let legend = std::fs::read_to_string(dir.path().join("fg.dot.legend")).unwrap();
    assert_eq!(legend.lines().count(), 6);
}

#[test]
fn strategies_are_listed() {
    let text = stdout(&arbogray(&["strategies"]));
    assert!(text.contains("clique-support"));
    assert!(text.contains("bruteforce"));
}
