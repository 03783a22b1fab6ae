use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn scl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scl"))
        .args(args)
        .env_remove("SCL_CATALOG_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

fn ok(args: &[&str]) -> Output {
    let o = scl(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    o
}

fn code(args: &[&str]) -> i32 {
    scl(args).status.code().unwrap()
}

fn tmp(dir: &tempfile::TempDir, name: &str) -> String {
    dir.path().join(name).to_string_lossy().into_owned()
}

#[test]
fn validate_reports_clauses() {
    assert_eq!(json(&ok(&["cube", "validate", &data("side_by_side.json")]))["ok"], true);
    let o = scl(&["cube", "validate", &data("overlap.json")]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(json(&o)["violations"][0]["clause"], "overlap");
    assert!(String::from_utf8_lossy(&o.stderr).contains("not almost disjoint"));
    assert_eq!(json(&ok(&["scl", "validate", &data("scl_outer.json")]))["ok"], true);
    assert_eq!(code(&["scl", "validate", &data("side_by_side.json")]), 2);
}

#[test]
fn parse_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    for (name, text) in [
        ("zero_den.json", r#"{"dim":1,"mode":"disjoint","cubes":[[["1/0","0"]]]}"#),
        ("zero_scale.json", r#"{"dim":1,"mode":"disjoint","cubes":[[["0","0"]]]}"#),
        ("extra.json", r#"{"dim":1,"mode":"disjoint","cubes":[],"extra":1}"#),
        ("truncated.json", r#"{"dim":1,"#),
    ] {
        let path = tmp(&dir, name);
        std::fs::write(&path, text).unwrap();
        assert_eq!(code(&["cube", "validate", &path]), 2, "{name}");
    }
    assert_eq!(code(&["cube", "validate", "/nonexistent.json"]), 2);
    assert_eq!(code(&["cube", "validate", &data("swapped.json"), "--bogus"]), 2);
    assert_eq!(code(&["nonsense"]), 2);
}

#[test]
fn stdin_is_accepted() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_scl"))
        .args(["cube", "pi0", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    use std::io::Write;
    child
        .stdin
        .take()
        .unwrap()
        .write_all(std::fs::read(data("swapped.json")).unwrap().as_slice())
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o).trim(), r#"{"perm":[2,1]}"#);
}

#[test]
fn compose_and_components() {
    let o = ok(&["cube", "compose", &data("c2_outer.json"), &data("c2_inner.json"), "--at", "2"]);
    assert_eq!(json(&o)["cubes"].as_array().unwrap().len(), 4);
    assert_eq!(code(&["cube", "compose", &data("c2_outer.json"), &data("c2_inner.json"), "--at", "4"]), 3);
    assert_eq!(code(&["cube", "compose", &data("c2_outer.json"), &data("swapped.json"), "--at", "1"]), 3);
    assert_eq!(stdout(&ok(&["cube", "pi0", &data("swapped.json")])).trim(), r#"{"perm":[2,1]}"#);
    assert_eq!(stdout(&ok(&["cube", "pi0", &data("side_by_side.json")])).trim(), r#"{"point":true}"#);
    let o = ok(&["cube", "orderings", &data("side_by_side.json")]);
    assert_eq!(json(&o)["orderings"].as_array().unwrap().len(), 2);

    let o = ok(&["scl", "compose", &data("scl_outer.json"), &data("scl_inner.json"), "--at", "3"]);
    let v = json(&o);
    assert_eq!(v["cubes"].as_array().unwrap().len(), 9);
    assert_eq!(v["colors"][2], "up");
    assert_eq!(v["colors"][5], "updown");
    assert_eq!(code(&["scl", "compose", &data("scl_outer.json"), &data("scl_inner.json"), "--at", "1"]), 3);
    assert_eq!(stdout(&ok(&["scl", "pi0", &data("scl_outer.json")])).trim(), r#"{"perm":[2,6]}"#);
}

#[test]
fn kappa_concatenates_side_by_side() {
    let dir = tempfile::tempdir().unwrap();
    let out = tmp(&dir, "k.json");
    let o = ok(&["act", "kappa", &data("side_by_side.json"), "catalog:trefoil", "catalog:figure-eight", "--out", &out]);
    assert_eq!(json(&o), serde_json::json!({"kind": "knot", "framing": 0}));
    assert_eq!(json(&ok(&["invariant", &out]))["framing"], 0);
    // the diagram of a concatenation has the crossings of both factors
    let count = |r: &str| {
        let svg = stdout(&ok(&["render", "diagram", r]));
        let desc = svg.lines().find(|l| l.contains("<desc>")).unwrap().to_string();
        desc.rsplit(' ').next().unwrap().trim_end_matches("</desc>").parse::<usize>().unwrap()
    };
    assert_eq!(count(&out), count("catalog:trefoil") + count("catalog:figure-eight"));
    let o = ok(&["act", "kappa", &data("unit_square.json"), "twist:2"]);
    assert_eq!(json(&o)["framing"], 2);
    assert_eq!(code(&["act", "kappa", &data("side_by_side.json"), "catalog:trefoil"]), 3);
    assert_eq!(code(&["act", "kappa", &data("side_by_side.json"), "catalog:trefoil", "catalog:clasp"]), 3);
}

#[test]
fn mu_and_lambda() {
    let o = ok(&["act", "mu", &data("identity_up.json"), "catalog:trefoil"]);
    assert_eq!(json(&o), serde_json::json!({"kind": "link", "framing": [0, 0], "linking": 0}));
    assert_eq!(code(&["act", "mu", &data("identity_up.json"), "catalog:clasp"]), 3);
    let dir = tempfile::tempdir().unwrap();
    let out = tmp(&dir, "e.json");
    ok(&["act", "lambda", &data("empty_interval.json"), "--out", &out]);
    let standard = tmp(&dir, "s.json");
    ok(&["act", "lambda", &data("empty_interval.json"), "--out", &standard]);
    assert_eq!(std::fs::read(&out).unwrap(), std::fs::read(&standard).unwrap());
    assert_eq!(
        stdout(&ok(&["render", "diagram", &out])),
        stdout(&ok(&["render", "diagram", "standard-link"]))
    );
    let o = ok(&["act", "lambda", &data("swapped.json"), "catalog:clasp", "catalog:split"]);
    assert_eq!(json(&o)["linking"].as_i64().unwrap().abs(), 1);
}

#[test]
fn monoid_words() {
    assert_eq!(stdout(&ok(&["monoid", "mul", "[q1||0]", "[q2||0]"])), "[q1.q2||0]\n");
    assert_eq!(stdout(&ok(&["monoid", "phi", "up", "{3_1}"])), "[|up:{3_1}|0]\n");
    assert_eq!(stdout(&ok(&["monoid", "braid", "-2"])), "[||-2]\n");
    assert_eq!(stdout(&ok(&["monoid", "mul", "{4_1}", "{3_1}"])), "{3_1,4_1}\n");
    let central = stdout(&ok(&["monoid", "phi", "updown", "{3_1}"]));
    let central = central.trim();
    assert_eq!(
        stdout(&ok(&["monoid", "mul", central, "[q1||0]"])),
        stdout(&ok(&["monoid", "mul", "[q1||0]", central]))
    );
    assert_ne!(
        stdout(&ok(&["monoid", "mul", "[q1||0]", "[q2||0]"])),
        stdout(&ok(&["monoid", "mul", "[q2||0]", "[q1||0]"]))
    );
    assert_eq!(code(&["monoid", "mul", "[q1|"]), 2);
    assert_eq!(code(&["monoid", "mul", "[q3||0]", "--alphabet", "links=q1,q2"]), 2);
    assert_eq!(code(&["monoid", "mul", "[q1||0]", "--alphabet", "links=q1,q2;knots=3_1"]), 0);
    assert_eq!(code(&["monoid", "mul", "[q1||0]", "{3_1}"]), 3);
    assert_eq!(code(&["monoid", "phi", "o", "{3_1}"]), 3);
}

#[test]
fn check_emits_json_lines() {
    let o = ok(&["check", "kappa", "linking", "--trials", "3", "--seed", "7"]);
    let lines: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(lines.iter().any(|l| l["suite"] == "kappa"));
    assert!(lines.iter().all(|l| l["passed"] == true));
    assert_eq!(code(&["check", "no-such-suite"]), 2);
    assert_eq!(code(&["check", "pi0", "--trials", "0"]), 2);
}

#[test]
fn renders_figures() {
    let svg = stdout(&ok(&["render", "cubes", &data("unit_square.json")]));
    assert_eq!(svg.matches("class=\"cube ").count(), 1);
    let dir = tempfile::tempdir().unwrap();
    let composite = tmp(&dir, "composite.json");
    let o = ok(&["scl", "compose", &data("scl_outer.json"), &data("scl_inner.json"), "--at", "3", "--out", &composite]);
    assert!(o.stdout.is_empty());
    let svg = stdout(&ok(&["render", "cubes", &composite]));
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let boxes = doc.descendants().filter(|n| n.attribute("class").is_some_and(|c| c.starts_with("cube "))).count();
    assert_eq!(boxes, 9);
    assert!(svg.contains("9<tspan baseline-shift=\"super\" font-size=\"11px\">↑</tspan>"));
    let svg = stdout(&ok(&["render", "diagram", "standard-link"]));
    assert_eq!(svg.matches("<polyline").count(), 2);
    assert!(svg.contains("crossings 0"));
}

#[test]
fn catalog_directory_override() {
    let dir = tempfile::tempdir().unwrap();
    let twist = tmp(&dir, "trefoil.json");
    ok(&["act", "kappa", &data("unit_square.json"), "twist:-1", "--out", &twist]);
    let o = Command::new(env!("CARGO_BIN_EXE_scl"))
        .args(["invariant", "catalog:trefoil"])
        .env("SCL_CATALOG_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(json(&o)["framing"], -1);
    let missing: PathBuf = dir.path().join("nothing");
    let o = Command::new(env!("CARGO_BIN_EXE_scl"))
        .args(["invariant", "catalog:trefoil"])
        .env("SCL_CATALOG_DIR", &missing)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
