use ltlf::cli::{run, EXIT_ERROR};
use serde_json::Value;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn ltlf(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ltlf").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn json(r: &Run) -> Value {
    serde_json::from_str(r.out.trim()).unwrap_or_else(|e| panic!("{e}: {}", r.out))
}

#[test]
fn sat_prints_shortest_witness() {
    let r = ltlf(&["sat", "X X X true"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out, "sat\n[[],[],[],[]]\n");
}

#[test]
fn unsat_exits_one() {
    let r = ltlf(&["sat", "p & !p"]);
    assert_eq!((r.code, r.out.as_str()), (1, "unsat\n"));
}

#[test]
fn valid_and_invalid() {
    assert_eq!(ltlf(&["valid", "F end"]).code, 0);
    let r = ltlf(&["valid", "X true"]);
    assert_eq!(r.code, 1);
    assert_eq!(r.out, "invalid\n[[]]\n");
}

#[test]
fn at_root_matches_default_validity() {
    for f in ["p -> p", "G p -> p", "p", "X true | end"] {
        let a = ltlf(&["valid", f]).code;
        let b = ltlf(&["valid", "--at-root", f]).code;
        assert_eq!(a, b, "{f}");
    }
}

#[test]
fn json_schema() {
    let v = json(&ltlf(&["--json", "sat", "p U q"]));
    assert_eq!(v["verdict"], "sat");
    assert!(v["witness"].is_array());
    assert!(v["stats"]["nodes"].as_u64().unwrap() >= 1);
    assert!(v["stats"]["expansions"].is_u64());

    let v = json(&ltlf(&["valid", "--json", "p"]));
    assert_eq!(v["verdict"], "invalid");
    assert_eq!(v["countermodel"], serde_json::json!([[]]));

    let v = json(&ltlf(&["--json", "valid", "p | !p"]));
    assert_eq!(v["verdict"], "valid");
    assert!(v.get("countermodel").is_none());
}

#[test]
fn eval_reads_trace_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k4.json");
    std::fs::write(&path, r#"[["x"],["x","y"],[],["x","y","z"]]"#).unwrap();
    let path = path.to_str().unwrap();

    let r = ltlf(&["eval", "x W y", "--trace", path]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out, "at position 1: true\nall positions: false\n");

    let v = json(&ltlf(&[
        "--json", "eval", "X end", "--trace", path, "--pos", "3",
    ]));
    assert_eq!(v["position"], 3);
    assert_eq!(v["at_position"], true);
    assert_eq!(v["all_positions"], false);

    let r = ltlf(&["eval", "x", "--trace", path, "--pos", "5"]);
    assert_eq!(r.code, EXIT_ERROR);
    assert!(r.err.contains("error:"), "{}", r.err);
}

#[test]
fn eval_rejects_bad_trace() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.json");
    std::fs::write(&path, "[]").unwrap();
    let r = ltlf(&["eval", "p", "--trace", path.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_ERROR);
    assert!(r.err.contains("bad trace file"), "{}", r.err);
}

#[test]
fn graph_writes_dot() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.dot");
    let r = ltlf(&["--json", "graph", "p W q", "--dot", path.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    let v = json(&r);
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph G {"));
    assert_eq!(
        dot.matches("label=").count() as u64,
        v["nodes"].as_u64().unwrap()
    );
    assert!(v["roots"].as_u64().unwrap() >= 1);
}

#[test]
fn oracle_modes() {
    let r = ltlf(&["oracle", "sat", "X X true", "--max-len", "4"]);
    assert_eq!((r.code, r.out.as_str()), (0, "sat\n[[],[],[]]\n"));
    let r = ltlf(&["oracle", "sat", "X X true", "--max-len", "2"]);
    assert_eq!(r.code, 1);
    let v = json(&ltlf(&[
        "--json",
        "oracle",
        "valid",
        "F end",
        "--max-len",
        "3",
    ]));
    assert_eq!(v["verdict"], "valid");
    assert_eq!(v["stats"]["max_len"], 3);
    assert_eq!(
        ltlf(&["oracle", "sat", "p", "--max-len", "0"]).code,
        EXIT_ERROR
    );
}

#[test]
fn parse_error_points_at_offender() {
    let r = ltlf(&["sat", "p & & q"]);
    assert_eq!(r.code, EXIT_ERROR);
    assert!(r.out.is_empty());
    assert!(r.err.contains("cannot parse formula"), "{}", r.err);
    let lines: Vec<&str> = r.err.lines().collect();
    let caret = lines.iter().find(|l| l.trim() == "^").unwrap();
    assert_eq!(caret.find('^'), Some(2 + 4));
}

#[test]
fn closure_guard_warns() {
    let r = ltlf(&["--max-closure", "2", "sat", "p U q"]);
    assert_eq!(r.code, 0);
    assert!(r.err.starts_with("warning:"), "{}", r.err);
    assert!(ltlf(&["sat", "p"]).err.is_empty());
}

#[test]
fn usage_errors() {
    assert_eq!(ltlf(&[]).code, EXIT_ERROR);
    assert_eq!(ltlf(&["frobnicate"]).code, EXIT_ERROR);
    let r = ltlf(&["--help"]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("sat"));
}
