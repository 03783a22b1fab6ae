//! Ordering permutations against a filter over all permutations.

use rand::Rng;
use serde_json::json;

use super::gen::gen_config;
use super::{trial_rng, CheckReport, Recorder, TrialConfig};
use crate::cubes::format::config_to_json;
use crate::cubes::{ordering_permutations, CubeConfig, Direction, Mode};
use crate::perm::Perm;
use crate::rational::Rational;

/// Orderings listed as `[σ(1), .., σ(k)]`, found by testing every
/// permutation against each pair of cubes directly.
pub fn brute_force_orderings(config: &CubeConfig, direction: Direction) -> Vec<Vec<usize>> {
    let k = config.arity();
    let minus_one = Rational::from_integer(-1);
    let mut below = Vec::new();
    for i in 0..k {
        for j in 0..k {
            let (xi, xj) = (config.cube(i).factor(0).image(), config.cube(j).factor(0).image());
            let overlap = xi.0 < xj.1 && xj.0 < xi.1;
            let hi = config.cube(i).factor(1).apply(&minus_one);
            let hj = config.cube(j).factor(1).apply(&minus_one);
            if overlap && hi < hj {
                below.push((i, j));
            }
        }
    }
    let mut out: Vec<Vec<usize>> = Perm::all(k)
        .map(|p| p.images().to_vec())
        .filter(|seq| {
            let mut pos = vec![0; k];
            for (n, &c) in seq.iter().enumerate() {
                pos[c] = n;
            }
            below.iter().all(|&(i, j)| match direction {
                Direction::Standard => pos[i] < pos[j],
                Direction::Reverse => pos[j] < pos[i],
            })
        })
        .collect();
    out.sort();
    out
}

pub fn check_orderings(cfg: &TrialConfig) -> CheckReport {
    let suite = "orderings";
    let mut rec = Recorder::new(suite, cfg.seed);
    for trial in 0..cfg.trials {
        let rng = &mut trial_rng(cfg.seed, suite, trial);
        let k = rng.gen_range(0..=cfg.max_arity.min(6));
        let config = gen_config(rng, 2, k, Mode::Disjoint);
        for (name, direction) in [("standard", Direction::Standard), ("reverse", Direction::Reverse)] {
            let expected = brute_force_orderings(&config, direction);
            let outcome = ordering_permutations(&config, direction)
                .map_err(|e| e.to_string())
                .and_then(|mut got| {
                    got.sort();
                    if got == expected {
                        Ok(())
                    } else {
                        Err(format!("{} orderings, expected {}", got.len(), expected.len()))
                    }
                });
            rec.record(&format!("matches_brute_force_{name}"), trial, outcome, || {
                json!({"config": serde_json::from_str::<serde_json::Value>(&config_to_json(&config)).ok()})
            });
        }
    }
    rec.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orderings_match() {
        let cfg = TrialConfig {
            trials: 40,
            max_arity: 6,
            ..Default::default()
        };
        let r = check_orderings(&cfg);
        assert!(r.passed(), "{}", r.to_json_lines());
    }
}
