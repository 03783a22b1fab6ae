//! Suites for the geometric actions: order independence and equivariance of
//! `κ`, additivity of the invariants, `φ̂` against `μ`, operadic
//! compatibility of `μ`, and the linking number oracle.

use rand::seq::SliceRandom;
use rand::Rng;
use serde_json::{json, Value};

use super::gen::{gen_config, gen_perm, gen_scl, slabs};
use super::{trial_rng, CheckReport, Recorder, TrialConfig};
use crate::cubes::format::{config_to_json, scl_to_json};
use crate::cubes::{
    ordering_order, ordering_permutations, Color, ColorSort, CubeConfig, Direction,
    LittleCube, Mode, SclElement,
};
use crate::perm::Perm;
use crate::pl::catalog::{load_knot, load_link};
use crate::pl::{
    close_above, close_below, framing_number, kappa_act, kappa_act_with_order, knot_deviation, lambda_act,
    link_deviation, link_invariants, linking_number, linking_number_with_shear, materialize_link, mu_act,
    mu_act_with_sort, phi_hat, twist, Fat, FatKnot, FatLink, LinkInvariants, CHORD_TOLERANCE,
};

type Named<T> = (String, T);

fn knot_pool() -> Result<Vec<Named<FatKnot>>, String> {
    let mut pool = Vec::new();
    for name in ["trefoil", "figure-eight"] {
        pool.push((name.to_string(), load_knot(name).map_err(|e| e.to_string())?));
    }
    pool.push(("twist(1)".into(), twist(1)));
    pool.push(("twist(-2)".into(), twist(-2)));
    Ok(pool)
}

fn link_pool() -> Result<Vec<Named<FatLink>>, String> {
    let mut pool = Vec::new();
    for name in ["clasp", "split"] {
        pool.push((name.to_string(), load_link(name).map_err(|e| e.to_string())?));
    }
    let eight = load_knot("figure-eight").map_err(|e| e.to_string())?;
    pool.push(("phi-hat(updown, figure-eight)".into(), phi_hat(Color::UpDown, &eight).map_err(|e| e.to_string())?));
    pool.push(("phi-hat(up, twist(1))".into(), phi_hat(Color::Up, &twist(1)).map_err(|e| e.to_string())?));
    Ok(pool)
}

fn config_value(c: &CubeConfig) -> Value {
    serde_json::from_str(&config_to_json(c)).unwrap_or(Value::Null)
}

fn scl_value(e: &SclElement) -> Value {
    serde_json::from_str(&scl_to_json(e)).unwrap_or(Value::Null)
}

fn within(deviation: Result<f64, impl ToString>, tol: f64) -> Result<(), String> {
    match deviation {
        Ok(d) if d <= tol => Ok(()),
        Ok(d) => Err(format!("sampled deviation {d:e} exceeds {tol:e}")),
        Err(e) => Err(e.to_string()),
    }
}

fn equal<T: PartialEq + std::fmt::Debug, E: ToString>(a: Result<T, E>, b: Result<T, E>) -> Result<(), String> {
    match (a, b) {
        (Ok(x), Ok(y)) if x == y => Ok(()),
        (Ok(x), Ok(y)) => Err(format!("{x:?} != {y:?}")),
        (Err(e), _) | (_, Err(e)) => Err(e.to_string()),
    }
}

fn load_failure(suite: &str, cfg: &TrialConfig, e: String) -> CheckReport {
    let mut rec = Recorder::new(suite, cfg.seed);
    rec.record("catalog", 0, Err(e), || Value::Null);
    rec.finish()
}

const MAX_ORDERS: usize = 6;

/// A 2-configuration with at least two ordering permutations.
fn ambiguous_config(rng: &mut impl Rng, k: usize) -> CubeConfig {
    for _ in 0..50 {
        let c = gen_config(rng, 2, k, Mode::Disjoint);
        if ordering_order(&c, Direction::Standard).is_ok_and(|o| o.linear_extensions().take(2).count() == 2) {
            return c;
        }
    }
    slabs(2, k, Mode::Disjoint)
}

/// All ordering permutations give the same composite, and
/// `κ(Lτ, f̲) = κ(L, τf̲)`.
pub fn check_kappa_well_defined(cfg: &TrialConfig) -> CheckReport {
    let suite = "kappa";
    let pool = match knot_pool() {
        Ok(p) => p,
        Err(e) => return load_failure(suite, cfg, e),
    };
    let mut rec = Recorder::new(suite, cfg.seed);
    for trial in 0..cfg.trials {
        let rng = &mut trial_rng(cfg.seed, suite, trial);
        let k = rng.gen_range(2..=cfg.max_arity.clamp(2, 4));
        let config = ambiguous_config(rng, k);
        let chosen: Vec<&Named<FatKnot>> = (0..k).map(|_| pool.choose(rng).expect("nonempty")).collect();
        let names: Vec<&str> = chosen.iter().map(|(n, _)| n.as_str()).collect();
        let knots: Vec<&FatKnot> = chosen.iter().map(|(_, f)| f).collect();
        let orders: Vec<Vec<usize>> = ordering_permutations(&config, Direction::Standard)
            .unwrap_or_default()
            .into_iter()
            .take(MAX_ORDERS)
            .collect();
        let payload = || json!({"config": config_value(&config), "knots": names, "orders": orders});
        rec.check("has_several_orders", trial, orders.len() >= 2, || "one linear extension".into(), payload);
        let Some(first) = orders.first() else { continue };
        let base = match kappa_act_with_order(&config, &knots, first) {
            Ok(b) => b,
            Err(e) => {
                rec.record("orders_agree", trial, Err(e.to_string()), payload);
                continue;
            }
        };
        let base_w = framing_number(&base);
        for order in &orders[1..] {
            let other = kappa_act_with_order(&config, &knots, order);
            let dev = other.as_ref().map_err(|e| e.to_string()).and_then(|o| knot_deviation(&base, o).map_err(|e| e.to_string()));
            rec.record("orders_agree", trial, within(dev, cfg.tolerance), payload);
            let w = other.map_err(|e| e.to_string()).and_then(|o| framing_number(&o).map_err(|e| e.to_string()));
            rec.record("orders_framing", trial, equal(base_w.clone().map_err(|e| e.to_string()), w), payload);
        }

        let tau = gen_perm(rng, k);
        let inv = tau.inverse();
        let permuted: Vec<&FatKnot> = (0..k).map(|j| knots[inv.apply(j)]).collect();
        let lhs = config.act(&tau).map_err(|e| e.to_string()).and_then(|c| {
            kappa_act(&c, &knots, Direction::Standard).map_err(|e| e.to_string())
        });
        let rhs = kappa_act(&config, &permuted, Direction::Standard).map_err(|e| e.to_string());
        let payload = || json!({"config": config_value(&config), "knots": names, "tau": tau.images()});
        match (&lhs, &rhs) {
            (Ok(l), Ok(r)) => {
                rec.record("equivariance", trial, within(knot_deviation(l, r), cfg.tolerance), payload);
                rec.record("equivariance_framing", trial, equal(framing_number(l), framing_number(r)), payload);
            }
            (Err(e), _) | (_, Err(e)) => rec.record("equivariance", trial, Err(e.clone()), payload),
        }
    }
    rec.finish()
}

fn square(x: &LittleCube, y: &LittleCube) -> LittleCube {
    LittleCube::new(vec![x.factor(0).clone(), y.factor(0).clone()])
}

/// `ω(rⁿ) = n`, and additivity of `ω` and `lk` under `κ` and `λ`.
pub fn check_framing(cfg: &TrialConfig) -> CheckReport {
    let suite = "framing";
    let mut rec = Recorder::new(suite, cfg.seed);
    for (trial, n) in (-3..=3).enumerate() {
        rec.record("twist", trial, equal(framing_number(&twist(n)).map_err(|e| e.to_string()), Ok(n)), || json!({"n": n}));
    }
    let (knots, links) = match (knot_pool(), link_pool()) {
        (Ok(k), Ok(l)) => (k, l),
        (Err(e), _) | (_, Err(e)) => return load_failure(suite, cfg, e),
    };
    let knot_w: Vec<i64> = knots.iter().map(|(_, k)| framing_number(k).unwrap_or(i64::MIN)).collect();
    let link_inv: Vec<Option<LinkInvariants>> = links.iter().map(|(_, l)| link_invariants(l).ok()).collect();
    for trial in 0..cfg.trials {
        let rng = &mut trial_rng(cfg.seed, suite, trial);
        // side by side squares
        let xs = gen_config(rng, 1, 2, Mode::Disjoint);
        let ys = gen_config(rng, 1, 2, Mode::Overlapping);
        let config = CubeConfig::new(2, Mode::Disjoint, vec![square(xs.cube(0), ys.cube(0)), square(xs.cube(1), ys.cube(1))])
            .expect("x-disjoint squares");
        let (a, b) = (rng.gen_range(-3..=3), rng.gen_range(0..knots.len()));
        let (fa, fb) = (twist(a), &knots[b].1);
        let w = kappa_act(&config, &[&fa, fb], Direction::Standard).map_err(|e| e.to_string()).and_then(|k| framing_number(&k).map_err(|e| e.to_string()));
        rec.record("kappa_additivity", trial, equal(w, Ok(a + knot_w[b])), || {
            json!({"config": config_value(&config), "twist": a, "knot": knots[b].0})
        });

        let k = rng.gen_range(2..=3);
        let intervals = gen_config(rng, 1, k, Mode::Disjoint);
        let picks: Vec<usize> = (0..k).map(|_| rng.gen_range(0..links.len())).collect();
        let payload = || json!({"config": config_value(&intervals), "links": picks.iter().map(|&i| links[i].0.clone()).collect::<Vec<_>>()});
        let parts: Option<Vec<LinkInvariants>> = picks.iter().map(|&i| link_inv[i]).collect();
        let Some(parts) = parts else {
            rec.record("lambda_additivity", trial, Err("invariants of an input failed".into()), payload);
            continue;
        };
        let expected = parts.iter().fold(LinkInvariants { framing: (0, 0), linking: 0 }, |acc, p| LinkInvariants {
            framing: (acc.framing.0 + p.framing.0, acc.framing.1 + p.framing.1),
            linking: acc.linking + p.linking,
        });
        let inputs: Vec<&FatLink> = picks.iter().map(|&i| &links[i].1).collect();
        let got = lambda_act(&intervals, &inputs).map_err(|e| e.to_string()).and_then(|l| link_invariants(&l).map_err(|e| e.to_string()));
        rec.record("lambda_additivity", trial, equal(got, Ok(expected)), payload);
    }
    rec.finish()
}

/// `μ` on the identity square of color `s` into `o` is `φ̂^s`.
pub fn check_phi_hat(cfg: &TrialConfig) -> CheckReport {
    let suite = "phi-hat";
    let pool = match knot_pool() {
        Ok(p) => p,
        Err(e) => return load_failure(suite, cfg, e),
    };
    let mut rec = Recorder::new(suite, cfg.seed);
    let mut trial = 0;
    for (name, f) in &pool {
        for s in Color::CLOSED {
            let payload = || json!({"knot": name, "color": s});
            let e = SclElement::new(vec![s], Color::O, CubeConfig::unit(2, Mode::Overlapping)).expect("identity square");
            let mu = mu_act(&e, &[Fat::Knot(f.clone())]).map_err(|e| e.to_string());
            let phi = phi_hat(s, f).map_err(|e| e.to_string());
            match (&mu, &phi) {
                (Ok(Fat::Link(m)), Ok(p)) => {
                    rec.record("points", trial, within(link_deviation(m, p), cfg.tolerance), payload);
                    rec.record("invariants", trial, equal(link_invariants(m), link_invariants(p)), payload);
                }
                (Ok(Fat::Knot(_)), _) => rec.record("points", trial, Err("μ returned a knot".into()), payload),
                (Err(e), _) | (_, Err(e)) => rec.record("points", trial, Err(e.clone()), payload),
            }
            let unit = mu_act(&SclElement::identity(s), &[Fat::Knot(f.clone())]).map_err(|e| e.to_string());
            let outcome = match unit {
                Ok(Fat::Knot(k)) => within(knot_deviation(&k, f), cfg.tolerance),
                Ok(Fat::Link(_)) => Err("μ returned a link".into()),
                Err(e) => Err(e),
            };
            rec.record("closed_unit", trial, outcome, payload);
            trial += 1;
        }
    }
    rec.finish()
}

fn compare_fat(
    rec: &mut Recorder,
    trial: usize,
    tol: f64,
    a: &Fat,
    b: &Fat,
    payload: impl Fn() -> Value,
    invariants: bool,
) {
    match (a, b) {
        (Fat::Knot(x), Fat::Knot(y)) => {
            rec.record("points", trial, within(knot_deviation(x, y), tol), &payload);
            if invariants {
                rec.record("invariants", trial, equal(framing_number(x), framing_number(y)), &payload);
            }
        }
        (Fat::Link(x), Fat::Link(y)) => {
            rec.record("points", trial, within(link_deviation(x, y), tol), &payload);
            if invariants {
                rec.record("invariants", trial, equal(link_invariants(x), link_invariants(y)), &payload);
            }
        }
        _ => rec.record("points", trial, Err("outputs of different kinds".into()), payload),
    }
}

/// `μ(A ∘ᵢ B, x̲)` against the nested evaluation, and independence of the
/// color sort.
pub fn check_mu_compatibility(cfg: &TrialConfig) -> CheckReport {
    let suite = "mu";
    let (knots, links) = match (knot_pool(), link_pool()) {
        (Ok(k), Ok(l)) => (k, l),
        (Err(e), _) | (_, Err(e)) => return load_failure(suite, cfg, e),
    };
    let max_total = cfg.max_arity.clamp(1, 4);
    let mut rec = Recorder::new(suite, cfg.seed);
    for trial in 0..cfg.trials {
        let rng = &mut trial_rng(cfg.seed, suite, trial);
        let output = if rng.gen_bool(0.75) { Color::O } else { Color::CLOSED[rng.gen_range(0..3)] };
        let a_ar = rng.gen_range(1..=max_total.min(3));
        let b_ar = rng.gen_range(0..=(max_total + 1 - a_ar).min(3));
        let a = gen_scl(rng, a_ar, output);
        let i = rng.gen_range(0..a_ar);
        let b = gen_scl(rng, b_ar, a.input_colors()[i]);
        let ab = match a.compose_at(i, &b) {
            Ok(ab) => ab,
            Err(e) => {
                rec.record("points", trial, Err(e.to_string()), || json!({"a": scl_value(&a), "i": i, "b": scl_value(&b)}));
                continue;
            }
        };
        let mut names = Vec::new();
        let inputs: Vec<Fat> = ab
            .input_colors()
            .iter()
            .map(|&c| {
                if c == Color::O {
                    let (n, l) = links.choose(rng).expect("nonempty");
                    names.push(n.clone());
                    Fat::Link(l.clone())
                } else {
                    let (n, k) = knots.choose(rng).expect("nonempty");
                    names.push(n.clone());
                    Fat::Knot(k.clone())
                }
            })
            .collect();
        let payload = || json!({"a": scl_value(&a), "i": i, "b": scl_value(&b), "inputs": names});
        let nested = mu_act(&b, &inputs[i..i + b_ar]).and_then(|inner| {
            let mut outer: Vec<Fat> = inputs[..i].to_vec();
            outer.push(inner);
            outer.extend(inputs[i + b_ar..].iter().cloned());
            mu_act(&a, &outer)
        });
        let flat = mu_act(&ab, &inputs);
        let (nested, flat) = match (nested, flat) {
            (Ok(n), Ok(f)) => (n, f),
            (Err(e), _) | (_, Err(e)) => {
                rec.record("points", trial, Err(e.to_string()), payload);
                continue;
            }
        };
        compare_fat(&mut rec, trial, cfg.tolerance, &nested, &flat, payload, true);

        let perms: [Perm; 4] = Color::ALL.map(|c| gen_perm(rng, ab.input_colors().iter().filter(|&&x| x == c).count()));
        let sort = ColorSort::canonical(ab.input_colors()).permuted(&perms);
        match mu_act_with_sort(&ab, &inputs, &sort) {
            Ok(other) => {
                let mut sub = Recorder::new(suite, cfg.seed);
                compare_fat(&mut sub, trial, cfg.tolerance, &other, &flat, payload, false);
                let outcome = match sub.finish().properties.into_iter().find(|p| !p.passed) {
                    None => Ok(()),
                    Some(p) => Err(p.counterexample.map(|c| c.message).unwrap_or_default()),
                };
                rec.record("color_sort", trial, outcome, payload);
            }
            Err(e) => rec.record("color_sort", trial, Err(e.to_string()), payload),
        }
    }
    rec.finish()
}

const SHEAR_REDRAWS: usize = 8;

/// Clasp and split links against their linking numbers, reversal, and
/// stability under random shears of the projection.
pub fn check_linking(cfg: &TrialConfig) -> CheckReport {
    let suite = "linking";
    let mut rec = Recorder::new(suite, cfg.seed);
    let mut curves = Vec::new();
    for (n, (name, expected)) in [("clasp", None), ("split", Some(0))].into_iter().enumerate() {
        let payload = || json!({"link": name});
        let tubes = load_link(name)
            .map_err(|e| e.to_string())
            .and_then(|l| materialize_link(&l, CHORD_TOLERANCE).map_err(|e| e.to_string()));
        let [up, down] = match tubes {
            Ok(t) => t,
            Err(e) => {
                rec.record(name, n, Err(e), payload);
                continue;
            }
        };
        let a = close_above(up.core());
        let b = close_below(down.core());
        let lk = linking_number(&a, &b).map_err(|e| e.to_string());
        let ok = match (&lk, expected) {
            (Ok(v), None) => v.abs() == 1,
            (Ok(v), Some(e)) => *v == e,
            (Err(_), _) => false,
        };
        rec.check(name, n, ok, || format!("linking number {lk:?}"), payload);
        let reversed: Vec<_> = b.iter().rev().copied().collect();
        let rev = linking_number(&a, &reversed).map_err(|e| e.to_string());
        rec.record("reversal", n, equal(rev, lk.clone().map(|v| -v)), payload);
        curves.push((name, a, b, lk));
    }
    for trial in 0..cfg.trials {
        let rng = &mut trial_rng(cfg.seed, suite, trial);
        for (name, a, b, lk) in &curves {
            let Ok(lk) = lk else { continue };
            let mut outcome = Err("no generic shear found".to_string());
            let mut shear = (0.0, 0.0);
            for _ in 0..SHEAR_REDRAWS {
                shear = (rng.gen_range(-0.2..0.2), rng.gen_range(-0.2..0.2));
                if let Some(v) = linking_number_with_shear(a, b, shear) {
                    outcome = if v == *lk { Ok(()) } else { Err(format!("{v} under shear, {lk} by default")) };
                    break;
                }
            }
            rec.record("shear_stability", trial, outcome, || json!({"link": name, "shear": [shear.0, shear.1]}));
        }
    }
    rec.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(trials: usize) -> TrialConfig {
        TrialConfig {
            trials,
            max_arity: 4,
            ..Default::default()
        }
    }

    #[test]
    fn kappa_suite_passes() {
        let r = check_kappa_well_defined(&cfg(6));
        assert!(r.passed(), "{}", r.to_json_lines());
    }

    #[test]
    fn framing_suite_passes() {
        let r = check_framing(&cfg(4));
        assert!(r.passed(), "{}", r.to_json_lines());
    }

    #[test]
    fn phi_hat_suite_passes() {
        let r = check_phi_hat(&cfg(1));
        assert!(r.passed(), "{}", r.to_json_lines());
    }

    #[test]
    fn mu_suite_passes() {
        let r = check_mu_compatibility(&cfg(8));
        assert!(r.passed(), "{}", r.to_json_lines());
    }

    #[test]
    fn linking_suite_passes() {
        let r = check_linking(&cfg(10));
        assert!(r.passed(), "{}", r.to_json_lines());
    }
}
