//! Exhaustive comparisons between components of free cube-operad algebras,
//! free algebras over the component operads, and the link monoid.

use serde_json::{json, Value};

use super::{CheckReport, Recorder, TrialConfig};
use crate::pi0::{
    compare_free_models, compare_link_monoid, enumerate_links, phi, pi0_of_free_c1, pi0_of_free_c2, pi0_of_free_scl,
    As, Com, Generators, KnotWord, Pi0Scl,
};
use crate::cubes::Color;

const MAX_ARITY: usize = 3;
const MAX_WORD: usize = 4;

pub fn check_pi0_theorems(cfg: &TrialConfig) -> CheckReport {
    let mut rec = Recorder::new("pi0", cfg.seed);
    let arity = MAX_ARITY.min(cfg.max_arity.max(1));
    let two = Generators::uncolored(["x", "y"]);
    let colored = Generators::numbered([2, 1, 1, 1]);
    let show = |v: Value| move || v.clone();

    let outcome = |ok: Result<bool, String>, what: String| match ok {
        Ok(true) => Ok(()),
        Ok(false) => Err(what),
        Err(e) => Err(e),
    };
    let r = pi0_of_free_c1(&two, arity).map_err(|e| e.to_string());
    let detail = format!("{r:?}");
    rec.record("components_c1", 0, outcome(r.map(|r| r.ok()), detail), show(json!({"max_arity": arity})));
    let r = pi0_of_free_c2(&two, arity).map_err(|e| e.to_string());
    let detail = format!("{r:?}");
    rec.record("components_c2", 0, outcome(r.map(|r| r.ok()), detail), show(json!({"max_arity": arity})));
    let r = pi0_of_free_scl(&colored, arity).map_err(|e| e.to_string());
    let detail = format!("{r:?}");
    rec.record("components_scl", 0, outcome(r.map(|r| r.ok()), detail), show(json!({"max_arity": arity})));

    for r in [
        compare_free_models(&Com, &two, MAX_WORD, MAX_ARITY),
        compare_free_models(&As, &two, MAX_WORD, MAX_ARITY),
        compare_free_models(&Pi0Scl, &colored, MAX_ARITY, 2),
    ] {
        let name = format!("normal_forms_{}", r.operad.to_ascii_lowercase());
        rec.check(&name, 0, r.ok(), || format!("{r:?}"), show(Value::Null));
    }

    let q: Vec<String> = vec!["q1".into(), "q2".into()];
    let k: Vec<String> = vec!["3_1".into()];
    let r = compare_link_monoid(&q, &k, MAX_WORD);
    rec.check("link_monoid", 0, r.ok(), || format!("{r:?}"), show(json!({"q": q, "knots": k, "max_len": MAX_WORD})));
    let r = compare_link_monoid(&[], &[], MAX_WORD);
    rec.check("link_monoid_empty", 0, r.ok() && r.elements == 1, || format!("{r:?}"), show(Value::Null));
    let unary = enumerate_links(&["q".to_string()], &[], MAX_WORD);
    let ok = unary.len() == MAX_WORD + 1 && unary.iter().all(|l| l.qword.iter().all(|x| x == "q"));
    rec.check("link_monoid_unary", 0, ok, || format!("{} elements", unary.len()), show(Value::Null));

    // central elements commute with everything
    let links = enumerate_links(&q, &k, 3);
    let central: Vec<_> = Color::CLOSED
        .iter()
        .filter_map(|&s| phi(s, &KnotWord::from_labels(["3_1"])).ok())
        .collect();
    let ok = links.iter().all(|x| central.iter().all(|c| x.mul(c) == c.mul(x)));
    rec.check("central_commutes", 0, ok, || "a central word fails to commute".into(), show(Value::Null));

    // knots under connected sum: commutative and associative on words
    let words: Vec<KnotWord> = [vec![], vec!["3_1"], vec!["4_1"], vec!["3_1", "4_1"], vec!["4_1", "4_1"]]
        .into_iter()
        .map(KnotWord::from_labels)
        .collect();
    let ok = words.iter().all(|a| {
        words.iter().all(|b| a.mul(b) == b.mul(a) && words.iter().all(|c| a.mul(b).mul(c) == a.mul(&b.mul(c))))
    });
    rec.check("knot_monoid", 0, ok, || "connected sum is not commutative on words".into(), show(Value::Null));
    rec.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi0_suite_passes() {
        let r = check_pi0_theorems(&TrialConfig::default());
        assert!(r.passed(), "{}", r.to_json_lines());
    }
}
