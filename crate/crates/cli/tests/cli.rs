use std::path::Path;
use std::process::{Command, Output};

fn annigraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_annigraph"))
        .args(args)
        .env_remove("ANNIGRAPH_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn topo_enum_counts() {
    for (args, lines) in [
        (vec!["topo", "enum", "2"], 4),
        (vec!["topo", "enum", "3"], 29),
        (vec!["topo", "enum", "3", "--canonical"], 9),
        (vec!["topo", "enum", "4", "--canonical", "--filter", "discrete"], 1),
    ] {
        let o = annigraph(&args);
        assert!(o.status.success(), "{args:?}");
        assert_eq!(stdout(&o).lines().count(), lines, "{args:?}");
    }
}

#[test]
fn topo_enum_json_round_trips() {
    let o = annigraph(&["topo", "enum", "2", "--format", "json"]);
    let first = stdout(&o).lines().next().unwrap().to_string();
    let v: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["n"], 2);
}

#[test]
fn cap_exceeded_is_a_usage_error() {
    let o = annigraph(&["topo", "enum", "6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap"));
}

#[test]
fn graph_invariants_of_three_points() {
    let r = json(&annigraph(&["graph", "ag-discrete:3", "--invariants"]));
    assert_eq!(r["diameter"], 3);
    assert_eq!(r["radius"], 2);
    assert_eq!(r["girth"], 3);
    assert_eq!(r["dominating_number"], 3);
    assert_eq!(r["clique_number"], 3);
    assert_eq!(r["chromatic_number"], 3);
}

#[test]
fn two_points_is_a_star() {
    let r = json(&annigraph(&["graph", "ag-discrete:2", "--invariants"]));
    assert_eq!(r["is_star"], true);
}

#[test]
fn sierpinski_file_gives_degenerate_dg() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("sierpinski.txt");
    std::fs::write(&file, "# Sierpinski space\nn=2; opens=0,1,3\n").unwrap();
    let model = format!("dg:{}", file.display());
    let r = json(&annigraph(&["graph", &model]));
    assert_eq!(r["vertex_count"], 0);
    assert_eq!(r["degenerate"], true);

    let json_file = dir.path().join("sierpinski.json");
    std::fs::write(&json_file, r#"{"n":2,"opens":["0","1","3"]}"#).unwrap();
    let r = json(&annigraph(&["graph", &format!("dg:{}", json_file.display())]));
    assert_eq!(r["vertex_count"], 0);
}

#[test]
fn exports() {
    let dot = stdout(&annigraph(&["graph", "ag-discrete:3", "--export", "dot"]));
    assert!(dot.starts_with("graph"));
    let dimacs = stdout(&annigraph(&["graph", "ag-discrete:3", "--export", "dimacs"]));
    assert!(dimacs.lines().any(|l| l == "p edge 6 6"));
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.json");
    let o = annigraph(&["graph", "ag-discrete:3", "--export", "json", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let g: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(g["edges"].as_array().unwrap().len(), 6);
}

#[test]
fn bad_model_is_a_usage_error() {
    assert_eq!(annigraph(&["graph", "ring:3"]).status.code(), Some(2));
    assert_eq!(annigraph(&["graph", "dg:/no/such/file"]).status.code(), Some(2));
}

#[test]
fn verify_discrete_guaranteed_passes() {
    let o = annigraph(&["verify", "--n-range", "3..4", "--filter", "discrete"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let lines = stdout(&o);
    assert!(lines.lines().all(|l| l.contains(r#""schema":"veritas/1""#)));
}

#[test]
fn verify_reports_known_guaranteed_failures() {
    let o = annigraph(&["verify", "--claims", "thm.dt.bounds", "--n-range", "2..2"]);
    assert_eq!(o.status.code(), Some(1));
    let rows: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(rows.iter().any(|r| r["verdict"] == "fail" && r["witness"].is_object()));
}

#[test]
fn explore_suite_exits_zero_with_findings() {
    let o = annigraph(&["verify", "--suite", "explore", "--n-range", "2..4", "--claims", "dg.*"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(r#""verdict":"fail""#));
    assert!(String::from_utf8_lossy(&o.stderr).contains("dg.thm.c"));
}

#[test]
fn unknown_claim_is_a_usage_error() {
    assert_eq!(annigraph(&["verify", "--claims", "thm.nope"]).status.code(), Some(2));
    assert_eq!(annigraph(&["search", "thm.nope"]).status.code(), Some(2));
}

#[test]
fn output_does_not_depend_on_parallelism_or_cache() {
    let base = ["verify", "--suite", "all", "--n-range", "2..3", "--trials", "50"];
    let one = annigraph(&[&base[..], &["--parallelism", "1"]].concat());
    let four = annigraph(&[&base[..], &["--parallelism", "4"]].concat());
    assert_eq!(one.stdout, four.stdout);

    let dir = tempfile::tempdir().unwrap();
    let cached = |d: &Path| {
        Command::new(env!("CARGO_BIN_EXE_annigraph"))
            .args(base)
            .env("ANNIGRAPH_CACHE_DIR", d)
            .output()
            .unwrap()
    };
    let cold = cached(dir.path());
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
    let warm = cached(dir.path());
    assert_eq!(cold.stdout, one.stdout);
    assert_eq!(warm.stdout, one.stdout);
}

#[test]
fn search_finds_witnesses_or_none() {
    let hit = json(&annigraph(&["search", "cor.elementAG.b.literal"]));
    assert_eq!(hit["verdict"], "fail");
    assert_eq!(hit["space"].as_str().unwrap().split(';').next(), Some("n=2"));

    let none = annigraph(&["search", "thm.girth", "--filter", "discrete", "--min-n", "3", "--max-n", "5"]);
    assert_eq!(stdout(&none).trim(), "none");

    let strict = json(&annigraph(&["search", "prop.O.cap.b.strict", "--max-n", "3"]));
    assert_eq!(strict["verdict"], "pass");
}

#[test]
fn claims_listing() {
    let o = annigraph(&["claims"]);
    assert!(stdout(&o).lines().any(|l| l.starts_with("thm.radius\t")));
}
