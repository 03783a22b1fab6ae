//! One line per acceptance criterion. Exits non-zero when any fails.

mod oracle;

use std::path::Path;
use std::process::Command;
use std::time::Instant;

use scl_core::checks::{run_suite, CheckReport, TrialConfig};
use scl_core::cubes::format::{config_to_json, parse_config, parse_scl, scl_to_json};
use scl_core::pl::catalog::{load_knot, load_link};
use scl_core::pl::{
    close_above, close_below, framing_number, linking_of_strands, materialize_knot, materialize_link, twist,
    Presentation, CHORD_TOLERANCE,
};

use oracle::gauss_integer;

const SEED: u64 = 42;
const TOLERANCE: f64 = 1e-6;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn suite(name: &str, trials: usize, max_arity: usize) -> CheckReport {
    let cfg = TrialConfig {
        seed: SEED,
        trials,
        max_arity,
        tolerance: TOLERANCE,
    };
    run_suite(name, &cfg).expect("suite exists")
}

fn summary(reports: &[CheckReport]) -> (bool, String) {
    let properties: usize = reports.iter().map(|r| r.properties.len()).sum();
    let checks: usize = reports.iter().flat_map(|r| &r.properties).map(|p| p.trials).sum();
    let failed: Vec<String> = reports
        .iter()
        .flat_map(|r| r.failed())
        .map(|p| {
            let ce = p.counterexample.as_ref().map(|c| format!(" (trial {}: {})", c.trial, c.message)).unwrap_or_default();
            format!("{}/{}{ce}", p.suite, p.property)
        })
        .collect();
    let ok = failed.is_empty();
    let mut s = format!("{properties} properties, {checks} checks");
    if !ok {
        s += &format!(", failed: {}", failed.join("; "));
    }
    (ok, s)
}

fn operad_axioms() -> Outcome {
    let start = Instant::now();
    let reports: Vec<_> = ["axioms-c1", "axioms-c2", "axioms-scl"].iter().map(|s| suite(s, 1000, 5)).collect();
    let secs = start.elapsed().as_secs_f64();
    let (ok, s) = summary(&reports);
    outcome(ok && secs < 30.0, format!("1000 trials per operad, {s}, {secs:.1} s (limit 30 s)"))
}

fn orderings() -> Outcome {
    let (ok, s) = summary(&[suite("orderings", 200, 6)]);
    outcome(ok, format!("200 configurations with k <= 6, {s}"))
}

fn kappa() -> Outcome {
    let (ok, s) = summary(&[suite("kappa", 50, 4)]);
    outcome(ok, format!("50 configurations, tolerance {TOLERANCE:e}, {s}"))
}

fn framing() -> Outcome {
    let (ok, s) = summary(&[suite("framing", 20, 5)]);
    // independent oracle: the Gauss integral of core and pushoff
    let mut oracle_ok = true;
    for n in -3..=3 {
        let tube = materialize_knot(&twist(n), CHORD_TOLERANCE).expect("twists materialize");
        let g = gauss_integer(&close_below(tube.core()), &close_above(tube.pushoff()));
        oracle_ok &= g == Some(n) && framing_number(&twist(n)).ok() == Some(n);
    }
    outcome(ok && oracle_ok, format!("twists -3..3 match the Gauss integral: {oracle_ok}, {s}"))
}

fn phi_hat() -> Outcome {
    let (ok, s) = summary(&[suite("phi-hat", 1, 3)]);
    outcome(ok, format!("catalog knots and twists, every closed color, {s}"))
}

fn mu() -> Outcome {
    let (ok, s) = summary(&[suite("mu", 25, 4)]);
    outcome(ok, format!("25 pairs with total arity <= 4, {s}"))
}

fn pi0() -> Outcome {
    let (ok, s) = summary(&[suite("pi0", 1, 3)]);
    outcome(ok, format!("arity <= 3, word length <= 4, {s}"))
}

fn linking() -> Outcome {
    let (ok, s) = summary(&[suite("linking", 10, 5)]);
    let mut notes = Vec::new();
    let mut oracle_ok = true;
    for (name, expect_abs) in [("clasp", 1), ("split", 0)] {
        let l = load_link(name).expect("catalog link");
        let [up, down] = materialize_link(&l, CHORD_TOLERANCE).expect("materializes");
        let g = gauss_integer(&close_above(up.core()), &close_below(down.core()));
        let counted = linking_of_strands(&l).ok();
        oracle_ok &= g.is_some() && g == counted && g.map(i64::abs) == Some(expect_abs);
        notes.push(format!("{name}: crossings {counted:?}, Gauss {g:?}"));
    }
    for name in ["trefoil", "figure-eight"] {
        let tube = materialize_knot(&load_knot(name).expect("catalog knot"), CHORD_TOLERANCE).expect("materializes");
        let g = gauss_integer(&close_below(tube.core()), &close_above(tube.pushoff()));
        oracle_ok &= g == Some(0);
    }
    outcome(ok && oracle_ok, format!("{}, 10 random shears, {s}", notes.join(", ")))
}

fn scl(args: &[&str]) -> (i32, Vec<u8>) {
    let o = Command::new(env!("CARGO_BIN_EXE_scl"))
        .args(args)
        .env_remove("SCL_CATALOG_DIR")
        .output()
        .expect("binary runs");
    (o.status.code().unwrap_or(-1), o.stdout)
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).to_string_lossy().into_owned()
}

enum Kind {
    Config,
    Scl,
    Presentation,
    Svg,
    JsonLines,
    Word,
}

/// Whether `bytes` parse and reprint to the same value.
fn reparses(kind: &Kind, bytes: &[u8]) -> bool {
    let Ok(text) = std::str::from_utf8(bytes) else { return false };
    match kind {
        Kind::Config => parse_config(text).is_ok_and(|c| config_to_json(&c) + "\n" == text),
        Kind::Scl => parse_scl(text).is_ok_and(|e| scl_to_json(&e) + "\n" == text),
        Kind::Presentation => Presentation::parse(text).is_ok_and(|p| {
            p.to_json() == text && Presentation::parse(&p.to_json()).is_ok_and(|q| q == p) && p.to_fat().is_ok()
        }),
        Kind::Svg => roxmltree::Document::parse(text).is_ok(),
        Kind::JsonLines => text.lines().all(|l| {
            serde_json::from_str::<serde_json::Value>(l).is_ok_and(|v| {
                serde_json::from_str::<serde_json::Value>(&v.to_string()).is_ok_and(|w| w == v)
            })
        }),
        Kind::Word => {
            let w = text.trim_end();
            let again = scl(&["monoid", "normalize", w]);
            again.0 == 0 && again.1 == bytes
        }
    }
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().expect("temporary directory");
    let out = |n: &str| dir.path().join(n).to_string_lossy().into_owned();
    let (side, unit, outer, inner) = (data("side_by_side.json"), data("unit_square.json"), data("scl_outer.json"), data("scl_inner.json"));
    let (c2a, c2b, swapped, idup) = (data("c2_outer.json"), data("c2_inner.json"), data("swapped.json"), data("identity_up.json"));
    // (arguments, kind of stdout or of the file after `--out`)
    let runs: Vec<(Vec<String>, Kind, bool)> = vec![
        (vec!["cube".into(), "compose".into(), c2a, c2b, "--at".into(), "2".into()], Kind::Config, false),
        (vec!["scl".into(), "compose".into(), outer.clone(), inner.clone(), "--at".into(), "3".into()], Kind::Scl, false),
        (vec!["act".into(), "kappa".into(), side.clone(), "catalog:trefoil".into(), "catalog:figure-eight".into(), "--out".into(), out("k.json")], Kind::Presentation, true),
        (vec!["act".into(), "kappa".into(), unit, "twist:3".into(), "--out".into(), out("t.json")], Kind::Presentation, true),
        (vec!["act".into(), "lambda".into(), swapped.clone(), "catalog:clasp".into(), "catalog:split".into(), "--out".into(), out("l.json")], Kind::Presentation, true),
        (vec!["act".into(), "mu".into(), idup, "catalog:figure-eight".into(), "--out".into(), out("m.json")], Kind::Presentation, true),
        (vec!["render".into(), "cubes".into(), outer, "--out".into(), out("c.svg")], Kind::Svg, true),
        (vec!["render".into(), "diagram".into(), "catalog:clasp".into(), "--out".into(), out("d.svg")], Kind::Svg, true),
        (vec!["render".into(), "diagram".into(), "catalog:trefoil".into()], Kind::Svg, false),
        (vec!["check".into(), "kappa".into(), "orderings".into(), "--trials".into(), "5".into()], Kind::JsonLines, false),
        (vec!["cube".into(), "pi0".into(), swapped], Kind::JsonLines, false),
        (vec!["invariant".into(), "catalog:clasp".into(), "--diagnostics".into()], Kind::JsonLines, false),
        (vec!["monoid".into(), "mul".into(), "[q2|both:{4_1}|1]".into(), "[q1|up:{3_1}|-3]".into()], Kind::Word, false),
        (vec!["monoid".into(), "phi".into(), "down".into(), "{4_1,3_1}".into()], Kind::Word, false),
    ];
    let mut failures = Vec::new();
    let mut artifacts = 0;
    for (args, kind, to_file) in &runs {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let file = to_file.then(|| args.last().expect("--out path").to_string());
        let mut outputs = Vec::new();
        for _ in 0..2 {
            let (code, stdout) = scl(&args);
            let artifact = file.as_ref().map(|f| std::fs::read(f).unwrap_or_default());
            outputs.push((code, stdout, artifact));
        }
        let label = args[..2].join(" ");
        if outputs[0] != outputs[1] {
            failures.push(format!("{label}: output differs between runs"));
        }
        if outputs[0].0 != 0 {
            failures.push(format!("{label}: exit {}", outputs[0].0));
        }
        let emitted = outputs[0].2.as_ref().unwrap_or(&outputs[0].1);
        artifacts += 1;
        if !reparses(kind, emitted) {
            failures.push(format!("{label}: emitted output does not re-parse to an equal value"));
        }
        if file.is_some() && !reparses(&Kind::JsonLines, &outputs[0].1) {
            failures.push(format!("{label}: invariants line is not JSON"));
        }
    }
    let ok = failures.is_empty();
    let mut s = format!("{} invocations run twice, {artifacts} outputs re-parsed", runs.len());
    if !ok {
        s += &format!(", failed: {}", failures.join("; "));
    }
    outcome(ok, s)
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("operad axioms", operad_axioms),
        ("ordering permutations", orderings),
        ("kappa well-defined and equivariant", kappa),
        ("framing oracle and additivity", framing),
        ("phi-hat consistency", phi_hat),
        ("mu operadic compatibility", mu),
        ("pi0 structure", pi0),
        ("linking oracle", linking),
        ("determinism and round-trip", determinism),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let status = if o.passed { "PASS" } else { "FAIL" };
        println!("criterion {} [{status}] {name}: {} ({:.1} s)", n + 1, o.detail, start.elapsed().as_secs_f64());
        failed += usize::from(!o.passed);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
