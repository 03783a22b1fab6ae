//! Unit, associativity and equivariance of the cube operads, evaluated
//! exactly on random elements.

use std::str::FromStr;

use rand::Rng;
use serde_json::{json, Value};

use super::gen::{gen_config, gen_perm, gen_scl};
use super::{trial_rng, CheckError, CheckReport, Recorder, TrialConfig};
use crate::cubes::format::{config_to_json, scl_to_json};
use crate::cubes::{count_color, splice_colors, Color, CubeConfig, Mode, SclElement};
use crate::error::CubeError;
use crate::perm::Perm;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperadName {
    C1,
    C2,
    Scl,
}

impl OperadName {
    pub fn suite(self) -> &'static str {
        match self {
            OperadName::C1 => "axioms-c1",
            OperadName::C2 => "axioms-c2",
            OperadName::Scl => "axioms-scl",
        }
    }
}

impl FromStr for OperadName {
    type Err = CheckError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "c1" => Ok(OperadName::C1),
            "c2" => Ok(OperadName::C2),
            "scl" => Ok(OperadName::Scl),
            other => Err(CheckError::UnknownSuite(other.to_string())),
        }
    }
}

/// A deliberate defect in composition, for checking that the suites can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    None,
    /// `a ∘ᵢ b` computed as `b ∘ᵢ a` whenever that makes sense.
    SwapOperands,
}

/// An operad under test. Uncolored operads use `o` as their only color.
trait Subject {
    type Elem: Clone + PartialEq;
    fn random_color(&self, rng: &mut impl Rng) -> Color;
    fn gen(&self, rng: &mut impl Rng, arity: usize, output: Color) -> Self::Elem;
    fn arity(&self, e: &Self::Elem) -> usize;
    fn input(&self, e: &Self::Elem, i: usize) -> Color;
    fn output(&self, e: &Self::Elem) -> Color;
    fn compose(&self, a: &Self::Elem, i: usize, b: &Self::Elem) -> Result<Self::Elem, CubeError>;
    fn act(&self, e: &Self::Elem, sigma: &Perm) -> Result<Self::Elem, CubeError>;
    fn unit(&self, c: Color) -> Self::Elem;
    fn payload(&self, e: &Self::Elem) -> Value;
    fn colors(&self, e: &Self::Elem) -> Vec<Color> {
        (0..self.arity(e)).map(|i| self.input(e, i)).collect()
    }
}

struct Cubes {
    dim: usize,
}

impl Subject for Cubes {
    type Elem = CubeConfig;
    fn random_color(&self, _: &mut impl Rng) -> Color {
        Color::O
    }
    fn gen(&self, rng: &mut impl Rng, arity: usize, _: Color) -> CubeConfig {
        gen_config(rng, self.dim, arity, Mode::Disjoint)
    }
    fn arity(&self, e: &CubeConfig) -> usize {
        e.arity()
    }
    fn input(&self, _: &CubeConfig, _: usize) -> Color {
        Color::O
    }
    fn output(&self, _: &CubeConfig) -> Color {
        Color::O
    }
    fn compose(&self, a: &CubeConfig, i: usize, b: &CubeConfig) -> Result<CubeConfig, CubeError> {
        a.compose_at(i, b)
    }
    fn act(&self, e: &CubeConfig, sigma: &Perm) -> Result<CubeConfig, CubeError> {
        e.act(sigma)
    }
    fn unit(&self, _: Color) -> CubeConfig {
        CubeConfig::unit(self.dim, Mode::Disjoint)
    }
    fn payload(&self, e: &CubeConfig) -> Value {
        serde_json::from_str(&config_to_json(e)).unwrap_or(Value::Null)
    }
}

struct Scl;

impl Subject for Scl {
    type Elem = SclElement;
    fn random_color(&self, rng: &mut impl Rng) -> Color {
        // output o is where the colors interact, so it is drawn most often
        if rng.gen_bool(0.7) {
            Color::O
        } else {
            Color::CLOSED[rng.gen_range(0..3)]
        }
    }
    fn gen(&self, rng: &mut impl Rng, arity: usize, output: Color) -> SclElement {
        gen_scl(rng, arity, output)
    }
    fn arity(&self, e: &SclElement) -> usize {
        e.arity()
    }
    fn input(&self, e: &SclElement, i: usize) -> Color {
        e.input_colors()[i]
    }
    fn output(&self, e: &SclElement) -> Color {
        e.output_color()
    }
    fn compose(&self, a: &SclElement, i: usize, b: &SclElement) -> Result<SclElement, CubeError> {
        a.compose_at(i, b)
    }
    fn act(&self, e: &SclElement, sigma: &Perm) -> Result<SclElement, CubeError> {
        e.act(sigma)
    }
    fn unit(&self, c: Color) -> SclElement {
        SclElement::identity(c)
    }
    fn payload(&self, e: &SclElement) -> Value {
        serde_json::from_str(&scl_to_json(e)).unwrap_or(Value::Null)
    }
}

struct Mutant<S>(S);

impl<S: Subject> Subject for Mutant<S> {
    type Elem = S::Elem;
    fn random_color(&self, rng: &mut impl Rng) -> Color {
        self.0.random_color(rng)
    }
    fn gen(&self, rng: &mut impl Rng, arity: usize, output: Color) -> S::Elem {
        self.0.gen(rng, arity, output)
    }
    fn arity(&self, e: &S::Elem) -> usize {
        self.0.arity(e)
    }
    fn input(&self, e: &S::Elem, i: usize) -> Color {
        self.0.input(e, i)
    }
    fn output(&self, e: &S::Elem) -> Color {
        self.0.output(e)
    }
    fn compose(&self, a: &S::Elem, i: usize, b: &S::Elem) -> Result<S::Elem, CubeError> {
        let k = self.0.arity(b);
        if k == 0 {
            return self.0.compose(a, i, b);
        }
        self.0.compose(b, i % k, a)
    }
    fn act(&self, e: &S::Elem, sigma: &Perm) -> Result<S::Elem, CubeError> {
        self.0.act(e, sigma)
    }
    fn unit(&self, c: Color) -> S::Elem {
        self.0.unit(c)
    }
    fn payload(&self, e: &S::Elem) -> Value {
        self.0.payload(e)
    }
}

fn same<E: PartialEq>(lhs: Result<E, CubeError>, rhs: Result<E, CubeError>) -> Result<(), String> {
    match (lhs, rhs) {
        (Ok(l), Ok(r)) if l == r => Ok(()),
        (Ok(_), Ok(_)) => Err("the two sides differ".into()),
        (Err(e), _) | (_, Err(e)) => Err(e.to_string()),
    }
}

fn sample_arities(rng: &mut impl Rng, max_arity: usize) -> (usize, usize, usize) {
    loop {
        let a = rng.gen_range(1..=3);
        let b = rng.gen_range(0..=2);
        let c = rng.gen_range(0..=2);
        if a.max(b).max(c) <= max_arity && a + b + c <= max_arity + 2 {
            return (a, b, c);
        }
    }
}

fn run<S: Subject>(s: &S, cfg: &TrialConfig, suite: &str) -> CheckReport {
    let mut rec = Recorder::new(suite, cfg.seed);
    for trial in 0..cfg.trials {
        let rng = &mut trial_rng(cfg.seed, suite, trial);
        let (a_ar, b_ar, c_ar) = sample_arities(rng, cfg.max_arity);
        let out = s.random_color(rng);
        let a = s.gen(rng, a_ar, out);
        let i = rng.gen_range(0..a_ar);
        let b = s.gen(rng, b_ar, s.input(&a, i));
        let j = (b_ar > 0).then(|| rng.gen_range(0..b_ar));
        let c = j.map(|j| s.gen(rng, c_ar, s.input(&b, j)));
        let p = |e: &S::Elem| s.payload(e);
        let base = || json!({"a": p(&a), "i": i, "b": p(&b), "j": j, "c": c.as_ref().map(p)});

        let ab = s.compose(&a, i, &b);
        rec.record("closure", trial, ab.as_ref().map(|_| ()).map_err(|e| e.to_string()), base);

        for k in 0..a_ar {
            let lhs = s.compose(&a, k, &s.unit(s.input(&a, k)));
            rec.record("unit_right", trial, same(lhs, Ok(a.clone())), base);
        }
        let lhs = s.compose(&s.unit(s.output(&a)), 0, &a);
        rec.record("unit_left", trial, same(lhs, Ok(a.clone())), base);

        if let (Some(j), Some(c), Ok(ab)) = (j, &c, &ab) {
            let lhs = s.compose(ab, i + j, c);
            let rhs = s.compose(&b, j, c).and_then(|bc| s.compose(&a, i, &bc));
            rec.record("associativity_sequential", trial, same(lhs, rhs), base);
        }

        if a_ar >= 2 {
            let (i1, i2) = {
                let x = rng.gen_range(0..a_ar);
                let y = (x + rng.gen_range(1..a_ar)) % a_ar;
                (x.min(y), x.max(y))
            };
            let b2 = s.gen(rng, b_ar, s.input(&a, i1));
            let c2 = s.gen(rng, c_ar, s.input(&a, i2));
            let lhs = s.compose(&a, i1, &b2).and_then(|x| s.compose(&x, i2 + b_ar - 1, &c2));
            let rhs = s.compose(&a, i2, &c2).and_then(|x| s.compose(&x, i1, &b2));
            rec.record("associativity_parallel", trial, same(lhs, rhs), || {
                json!({"a": p(&a), "i": i1, "b": p(&b2), "j": i2, "c": p(&c2)})
            });
        }

        let sigma = gen_perm(rng, a_ar);
        let bs = s.gen(rng, b_ar, s.input(&a, sigma.apply(i)));
        let lhs = s.act(&a, &sigma).and_then(|x| s.compose(&x, i, &bs));
        let rhs = s
            .compose(&a, sigma.apply(i), &bs)
            .and_then(|x| s.act(&x, &sigma.compose_at(i, &Perm::identity(b_ar))));
        rec.record("equivariance_outer", trial, same(lhs, rhs), || {
            json!({"a": p(&a), "sigma": sigma.images(), "i": i, "b": p(&bs)})
        });

        let tau = gen_perm(rng, b_ar);
        let lhs = s.act(&b, &tau).and_then(|x| s.compose(&a, i, &x));
        let rhs = ab
            .clone()
            .and_then(|x| s.act(&x, &Perm::identity(a_ar).compose_at(i, &tau)));
        rec.record("equivariance_inner", trial, same(lhs, rhs), || {
            json!({"a": p(&a), "i": i, "b": p(&b), "tau": tau.images()})
        });

        let rho = gen_perm(rng, a_ar);
        let lhs = s.act(&a, &sigma).and_then(|x| s.act(&x, &rho));
        let rhs = s.act(&a, &sigma.then_after(&rho));
        rec.record("action", trial, same(lhs, rhs), || {
            json!({"a": p(&a), "sigma": sigma.images(), "rho": rho.images()})
        });
        rec.record("action_identity", trial, same(s.act(&a, &Perm::identity(a_ar)), Ok(a.clone())), base);

        if let Ok(ab) = &ab {
            let expected = splice_colors(&s.colors(&a), i, &s.colors(&b));
            let got = s.colors(ab);
            let counts_ok = Color::ALL.iter().all(|&col| {
                let was = count_color(&s.colors(&a), col) - usize::from(s.input(&a, i) == col);
                count_color(&got, col) == was + count_color(&s.colors(&b), col)
            });
            let ok = got == expected && counts_ok && s.arity(ab) == a_ar + b_ar - 1 && s.output(ab) == s.output(&a);
            rec.check("color_bookkeeping", trial, ok, || "spliced colors disagree".into(), base);
        }
    }
    rec.finish()
}

/// Unit, both associativity patterns, equivariance and color bookkeeping.
pub fn check_operad_axioms(cfg: &TrialConfig, operad: OperadName) -> CheckReport {
    check_operad_axioms_mutated(cfg, operad, Mutation::None)
}

pub fn check_operad_axioms_mutated(cfg: &TrialConfig, operad: OperadName, mutation: Mutation) -> CheckReport {
    let suite = operad.suite();
    match (operad, mutation) {
        (OperadName::C1, Mutation::None) => run(&Cubes { dim: 1 }, cfg, suite),
        (OperadName::C2, Mutation::None) => run(&Cubes { dim: 2 }, cfg, suite),
        (OperadName::Scl, Mutation::None) => run(&Scl, cfg, suite),
        (OperadName::C1, Mutation::SwapOperands) => run(&Mutant(Cubes { dim: 1 }), cfg, suite),
        (OperadName::C2, Mutation::SwapOperands) => run(&Mutant(Cubes { dim: 2 }), cfg, suite),
        (OperadName::Scl, Mutation::SwapOperands) => run(&Mutant(Scl), cfg, suite),
    }
}

/// Passes when every axiom suite catches the swapped-operand mutation.
pub(crate) fn self_test(cfg: &TrialConfig) -> CheckReport {
    let mut rec = Recorder::new("self-test", cfg.seed);
    for (n, operad) in [OperadName::C1, OperadName::C2, OperadName::Scl].into_iter().enumerate() {
        let report = check_operad_axioms_mutated(cfg, operad, Mutation::SwapOperands);
        let caught: Vec<String> = report.failed().map(|p| p.property.clone()).collect();
        rec.check(
            &format!("{}_detects_swapped_operands", operad.suite()),
            n,
            !caught.is_empty(),
            || "the mutated composition passed every property".into(),
            || Value::Null,
        );
    }
    rec.finish()
}
