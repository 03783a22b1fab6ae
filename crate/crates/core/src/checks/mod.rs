//! Seeded property suites tying the modules together. Every suite reports
//! one result per property; a failure carries the trial index and seed that
//! reproduce it.

mod axioms;
mod gen;
mod geometry;
mod orderings;
mod pi0;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

pub use axioms::{check_operad_axioms, check_operad_axioms_mutated, Mutation, OperadName};
pub use gen::{gen_config, gen_perm, gen_scl, gen_scl_with_colors, DENOMINATOR};
pub use geometry::{
    check_framing, check_kappa_well_defined, check_linking, check_mu_compatibility, check_phi_hat,
};
pub use orderings::{brute_force_orderings, check_orderings};
pub use pi0::check_pi0_theorems;

#[derive(Debug, Error, PartialEq)]
pub enum CheckError {
    #[error("trials must be at least 1")]
    NoTrials,
    #[error("max arity must be at least 1")]
    NoArity,
    #[error("tolerance must be positive and finite")]
    Tolerance,
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialConfig {
    pub seed: u64,
    pub trials: usize,
    pub max_arity: usize,
    /// Largest accepted distance between sampled points.
    pub tolerance: f64,
}

impl Default for TrialConfig {
    fn default() -> Self {
        TrialConfig {
            seed: 42,
            trials: 100,
            max_arity: 5,
            tolerance: 1e-6,
        }
    }
}

impl TrialConfig {
    pub fn validate(&self) -> Result<(), CheckError> {
        if self.trials == 0 {
            return Err(CheckError::NoTrials);
        }
        if self.max_arity == 0 {
            return Err(CheckError::NoArity);
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(CheckError::Tolerance);
        }
        Ok(())
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

fn fnv1a(s: &str) -> u64 {
    s.bytes()
        .fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3))
}

/// The seed of trial `index` of `suite` in a run seeded with `seed`.
pub fn trial_seed(seed: u64, suite: &str, index: usize) -> u64 {
    splitmix64(splitmix64(seed ^ fnv1a(suite)).wrapping_add(index as u64))
}

pub fn trial_rng(seed: u64, suite: &str, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(trial_seed(seed, suite, index))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub trial: usize,
    pub seed: u64,
    pub message: String,
    pub inputs: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyResult {
    pub suite: String,
    pub property: String,
    pub passed: bool,
    pub trials: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub properties: Vec<PropertyResult>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(|p| p.passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &PropertyResult> {
        self.properties.iter().filter(|p| !p.passed)
    }

    /// One JSON object per property, each on its own line.
    pub fn to_json_lines(&self) -> String {
        self.properties
            .iter()
            .map(|p| serde_json::to_string(p).expect("reports serialize") + "\n")
            .collect()
    }
}

/// Collects property outcomes in first-seen order.
pub(crate) struct Recorder {
    suite: String,
    seed: u64,
    properties: Vec<PropertyResult>,
}

impl Recorder {
    pub(crate) fn new(suite: &str, seed: u64) -> Self {
        Recorder {
            suite: suite.to_string(),
            seed,
            properties: Vec::new(),
        }
    }

    fn entry(&mut self, property: &str) -> &mut PropertyResult {
        let pos = match self.properties.iter().position(|p| p.property == property) {
            Some(p) => p,
            None => {
                self.properties.push(PropertyResult {
                    suite: self.suite.clone(),
                    property: property.to_string(),
                    passed: true,
                    trials: 0,
                    failures: 0,
                    counterexample: None,
                });
                self.properties.len() - 1
            }
        };
        &mut self.properties[pos]
    }

    /// Records one trial of `property`; `inputs` is only built on failure.
    pub(crate) fn record(
        &mut self,
        property: &str,
        trial: usize,
        outcome: Result<(), String>,
        inputs: impl FnOnce() -> Value,
    ) {
        let seed = trial_seed(self.seed, &self.suite, trial);
        let entry = self.entry(property);
        entry.trials += 1;
        if let Err(message) = outcome {
            entry.passed = false;
            entry.failures += 1;
            if entry.counterexample.is_none() {
                entry.counterexample = Some(Counterexample {
                    trial,
                    seed,
                    message,
                    inputs: inputs(),
                });
            }
        }
    }

    pub(crate) fn check(&mut self, property: &str, trial: usize, ok: bool, message: impl FnOnce() -> String, inputs: impl FnOnce() -> Value) {
        let outcome = if ok { Ok(()) } else { Err(message()) };
        self.record(property, trial, outcome, inputs);
    }

    pub(crate) fn finish(self) -> CheckReport {
        CheckReport {
            suite: self.suite,
            properties: self.properties,
        }
    }
}

/// Every suite name accepted by [`run_suite`].
pub const SUITES: [&str; 11] = [
    "axioms-c1",
    "axioms-c2",
    "axioms-scl",
    "orderings",
    "kappa",
    "framing",
    "phi-hat",
    "mu",
    "linking",
    "pi0",
    "self-test",
];

/// The trial budget a suite runs with when none is given.
pub fn suite_defaults(name: &str) -> Option<TrialConfig> {
    let (trials, max_arity) = match name {
        "axioms-c1" | "axioms-c2" | "axioms-scl" => (1000, 5),
        "orderings" => (200, 6),
        "kappa" => (50, 4),
        "framing" => (20, 5),
        "phi-hat" | "pi0" => (1, 3),
        "mu" => (25, 4),
        "linking" => (10, 5),
        "self-test" => (50, 5),
        _ => return None,
    };
    Some(TrialConfig {
        trials,
        max_arity,
        ..Default::default()
    })
}

/// Runs a suite by name.
pub fn run_suite(name: &str, cfg: &TrialConfig) -> Result<CheckReport, CheckError> {
    cfg.validate()?;
    Ok(match name {
        "axioms-c1" => check_operad_axioms(cfg, OperadName::C1),
        "axioms-c2" => check_operad_axioms(cfg, OperadName::C2),
        "axioms-scl" => check_operad_axioms(cfg, OperadName::Scl),
        "orderings" => check_orderings(cfg),
        "kappa" => check_kappa_well_defined(cfg),
        "framing" => check_framing(cfg),
        "phi-hat" => check_phi_hat(cfg),
        "mu" => check_mu_compatibility(cfg),
        "linking" => check_linking(cfg),
        "pi0" => check_pi0_theorems(cfg),
        "self-test" => axioms::self_test(cfg),
        other => return Err(CheckError::UnknownSuite(other.to_string())),
    })
}
