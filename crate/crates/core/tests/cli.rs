use std::process::{Command, Output};

fn colorfix(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_colorfix")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn theorem1_campaign_exits_zero() {
    let o = colorfix(&["check", "theorem1", "--builtin", "7", "--planar", "--chromatic", "4", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["scanned"].as_u64().unwrap() > 0);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn converse_findings_do_not_fail() {
    let o = colorfix(&["check", "lemma4", "--direction", "converse", "--builtin", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("findings:"));
}

#[test]
fn unknown_check_is_a_usage_error() {
    let o = colorfix(&["check", "nosuch", "--builtin", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown check"));
}

#[test]
fn joinable_one_line_verdicts() {
    for (g, u, v, want) in [("Bg", "0", "2", "joinable"), ("fixture:octahedron", "4", "5", "not-joinable"), ("fixture:fig1", "3", "4", "not-joinable")] {
        let o = colorfix(&["joinable", g, u, v]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), format!("{want}\n"));
    }
    assert_eq!(colorfix(&["joinable", "fixture:grotzsch", "0", "2"]).status.code(), Some(2));
}

#[test]
fn analyze_fig1_structured_and_human_agree() {
    let s = colorfix(&["analyze", "fixture:fig1", "--format", "structured"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&s)).unwrap();
    assert_eq!(v["chromatic_number"], 4);
    assert_eq!(v["planar"], true);
    assert_eq!(v["chains"].as_array().unwrap().len(), 1);
    assert_eq!(v["color_identical_pairs"][0]["joinable"], "not-joinable");
    let h = stdout(&colorfix(&["analyze", "fixture:fig1"]));
    assert!(h.contains("chromatic number:  4"));
    assert!(h.contains("planar:            true"));
    assert!(h.contains("fixation chains: 1"));
}

#[test]
fn analyze_reads_edge_list_files() {
    let dir = std::env::temp_dir().join(format!("colorfix-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k4.txt");
    std::fs::write(&path, "# K4\n4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
    let o = colorfix(&["analyze", path.to_str().unwrap(), "--format", "tabular"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("graph6,kind,item,detail"));
    assert!(out.contains("property,chromatic_number,4"));
    assert!(!out.contains("color_identical,"));
}

#[test]
fn graph6_file_corpus_and_jobs_env() {
    let dir = std::env::temp_dir().join(format!("colorfix-corpus-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("corpus.g6");
    // K4, K5 minus an edge, K5
    std::fs::write(&path, "C~\nD~w\nD~{\n").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_colorfix"))
        .args(["check", "theorem1", "--input", path.to_str().unwrap(), "--format", "tabular"])
        .env("COLORFIX_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).trim(), "graph6,check,kind,detail");
    let missing = colorfix(&["check", "theorem1", "--input", "/nonexistent/corpus.g6"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn grotzsch_check_and_corollary() {
    let o = colorfix(&["check", "grotzsch", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["findings"].as_array().unwrap().len(), 2);
    let o = colorfix(&["check", "corollary1", "--input", "fixture:k5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("edges_dropping_to_4: 10"));
}
