#![allow(dead_code)]

use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;
use stablecount_core::program::{Lit, Program, Var};

pub struct Shape {
    pub max_vars: usize,
    pub max_rules: usize,
    pub max_constraints: usize,
    /// Probability that a body literal is negated.
    pub negation: f64,
    pub weights: bool,
}

impl Default for Shape {
    fn default() -> Shape {
        Shape { max_vars: 10, max_rules: 12, max_constraints: 4, negation: 0.35, weights: true }
    }
}

pub fn random_program(rng: &mut impl Rng, shape: &Shape) -> Program {
    let n = rng.gen_range(1..=shape.max_vars);
    let mut b = Program::builder();
    let mut founded = Vec::new();
    let mut all = Vec::new();
    for i in 0..n {
        let v = if rng.gen_bool(0.5) {
            let v = b.founded(&format!("f{i}")).unwrap();
            founded.push(v);
            v
        } else {
            let v = b.standard(&format!("s{i}")).unwrap();
            if shape.weights && rng.gen_bool(0.7) {
                let w = BigRational::new(rng.gen_range(0..=10).into(), 10.into());
                b.set_weight(v, w).unwrap();
            }
            v
        };
        all.push(v);
    }
    if !founded.is_empty() {
        for _ in 0..rng.gen_range(0..=shape.max_rules) {
            let head = *founded.choose(rng).unwrap();
            let len = rng.gen_range(0..=3.min(n));
            let body: Vec<Lit> = all
                .choose_multiple(rng, len)
                .map(|&v| Lit::new(v, !rng.gen_bool(shape.negation)))
                .collect();
            b.add_rule(head, body).unwrap();
        }
    }
    for _ in 0..rng.gen_range(0..=shape.max_constraints) {
        let len = rng.gen_range(1..=3.min(n));
        let lits: Vec<Lit> = all.choose_multiple(rng, len).map(|&v| Lit::new(v, rng.gen_bool(0.5))).collect();
        b.add_clause(lits).unwrap();
    }
    b.build()
}

/// Random consistent set of literals over the first `n` variables.
pub fn random_literals(rng: &mut impl Rng, n: usize, max: usize) -> Vec<Lit> {
    let mut vars: Vec<Var> = (0..n as u32).map(Var).collect();
    vars.shuffle(rng);
    let k = rng.gen_range(0..=max.min(n));
    vars[..k].iter().map(|&v| Lit::new(v, rng.gen_bool(0.5))).collect()
}

/// Same program with rules and constraints in shuffled order.
pub fn shuffled(p: &Program, rng: &mut impl Rng) -> Program {
    let mut b = Program::builder();
    for v in p.vars() {
        if p.is_founded(v) {
            b.founded(p.name(v)).unwrap();
        } else {
            b.standard(p.name(v)).unwrap();
            if let Some(w) = p.weight(v) {
                b.set_weight(v, w.clone()).unwrap();
            }
        }
    }
    let mut rules = p.rules().to_vec();
    rules.shuffle(rng);
    for r in rules {
        let mut body = r.body.clone();
        body.shuffle(rng);
        b.add_rule(r.head, body).unwrap();
    }
    let mut cs = p.constraints().to_vec();
    cs.shuffle(rng);
    for c in cs {
        b.add_clause(c.lits).unwrap();
    }
    b.build()
}

pub fn rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}
