use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fairset(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fairset"))
        .args(args)
        .env_remove("FAIRSET_CEILING")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fairset-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn fair_center_of_a_pair_in_k4() {
    let o = fairset(&["fc", "--family", "complete:4", "--set", "0,1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("center [2,3]"), "{text}");
    assert!(text.contains("min partiality 0"), "{text}");
}

#[test]
fn wheel5_oracle_is_exact() {
    let o = fairset(&["verify-family", "--family", "wheel5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict exact"));
}

#[test]
fn c5_inventory_count_is_pinned() {
    let o = fairset(&["enumerate", "--family", "cycle:5", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["result"]["fair_set_count"], 16);
    assert_eq!(v["config"]["command"], "enumerate");
    assert_eq!(v["config"]["family"], "cycle:5");
    assert_eq!(v["config"]["include_singleton_s"], false);
    let first = &v["result"]["fair_sets"][0];
    assert_eq!(first["set"], serde_json::json!([0]));
    assert_eq!(first["set_one_based"], serde_json::json!([1]));
}

#[test]
fn json_is_identical_across_worker_counts() {
    let run =
        |w: &str| fairset(&["enumerate", "--family", "wheel:8", "--json", "--workers", w]).stdout;
    assert_eq!(run("1"), run("4"));
    let scan = |w: &str| fairset(&["scan", "--connected", "6", "--json", "--workers", w]).stdout;
    assert_eq!(scan("1"), scan("3"));
}

#[test]
fn mismatch_exits_with_one() {
    let o = fairset(&[
        "verify-family",
        "--family",
        "wheel:7",
        "--interpretation",
        "vertices",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let o = fairset(&[
        "verify-family",
        "--family",
        "wheel:7",
        "--interpretation",
        "both",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["result"]["exact"], serde_json::json!(["edges"]));
}

#[test]
fn input_errors_exit_with_two() {
    for args in [
        &["fc", "--family", "complete:4", "--set", "0,7"][..],
        &["fc", "--family", "nonsense:4", "--set", "0"],
        &["enumerate", "--family", "path:30"],
        &["enumerate", "--family", "cycle:5", "--input", "x.g6"],
        &["scan", "--connected", "4", "--shard", "4/4"],
        &["frobnicate"],
    ] {
        assert_eq!(fairset(args).status.code(), Some(2), "{args:?}");
    }
    let dir = scratch("bad");
    let bad = dir.join("bad.g6");
    std::fs::write(&bad, "D~{\nnot graph6 \u{1}\n").unwrap();
    let o = fairset(&["enumerate", "--input", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn ceiling_comes_from_the_environment() {
    let run = |extra: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_fairset"))
            .args(["enumerate", "--family", "path:6"])
            .args(extra)
            .env("FAIRSET_CEILING", "5")
            .output()
            .unwrap()
    };
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["--force"]).status.code(), Some(0));
    assert_eq!(run(&["--ceiling", "6"]).status.code(), Some(0));
}

#[test]
fn generated_edge_list_audits_like_the_family() {
    let dir = scratch("gen");
    let path = dir.join("w5.txt");
    let o = fairset(&["gen", "--family", "wheel:5", "--format", "edgelist"]);
    std::fs::write(&path, &o.stdout).unwrap();
    let from_file = fairset(&[
        "audit",
        "--input",
        path.to_str().unwrap(),
        "--format",
        "edgelist",
        "--json",
    ]);
    let from_family = fairset(&["audit", "--family", "wheel:5", "--json"]);
    assert_eq!(from_file.status.code(), Some(0));
    let (a, b) = (json(&from_file), json(&from_family));
    assert_eq!(a["result"]["fair_set_count"], 6);
    assert_eq!(a["result"]["all_connected"], false);
    assert_eq!(a["result"]["graph_id"], b["result"]["graph_id"]);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn shard_reports_merge_to_the_full_scan() {
    let dir = scratch("shards");
    let mut files = Vec::new();
    for k in 0..3 {
        let o = fairset(&[
            "scan",
            "--connected",
            "6",
            "--shard",
            &format!("{k}/3"),
            "--json",
        ]);
        assert_eq!(o.status.code(), Some(0));
        let path = dir.join(format!("part{k}.json"));
        std::fs::write(&path, &o.stdout).unwrap();
        files.push(path.to_str().unwrap().to_string());
    }
    let mut args = vec!["scan", "--json", "--merge"];
    args.extend(files.iter().map(String::as_str));
    let merged = json(&fairset(&args));
    let whole = json(&fairset(&["scan", "--connected", "6", "--json"]));
    assert_eq!(merged["result"], whole["result"]);
    assert_eq!(whole["result"]["graphs_scanned"], 143);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn trees_and_products_hold() {
    let o = fairset(&["trees", "--max-n", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("48 trees"));
    let o = fairset(&[
        "product-check",
        "--family",
        "path:3",
        "--family",
        "path:3",
        "--set",
        "0",
        "--set",
        "0,2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = fairset(&["product-check", "--random", "10", "--seed", "5", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["result"].as_array().unwrap().len(), 10);
}
