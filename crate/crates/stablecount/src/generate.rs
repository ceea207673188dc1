//! Seeded generators for the reachability (GraphRel) and smokers-and-friends
//! benchmark families, plus a generic random-program source for fuzzing.

use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stablecount_core::program::{Lit, Program, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    GraphRel,
    Smokers,
}

#[derive(Clone, Debug)]
pub struct GenSpec {
    pub family: Family,
    /// Nodes or persons, numbered from 1.
    pub n: usize,
    /// Probability of each directed edge `u -> v`, `u != v`.
    pub p: f64,
    pub seed: u64,
    /// `in(v)` for GraphRel, `stress(x)` for smokers.
    pub node_prob: BigRational,
    /// `influences(x_y)` (smokers only).
    pub edge_prob: BigRational,
    /// Query node; GraphRel defaults to `n`, smokers to every person.
    pub query: Option<usize>,
    pub evidence: Option<usize>,
    /// Keep only this many random variables; the others are fixed from the
    /// seed stream and compiled away.
    pub fix_random: Option<usize>,
}

impl GenSpec {
    pub fn new(family: Family, n: usize, p: f64, seed: u64) -> GenSpec {
        let half = BigRational::new(1.into(), 2.into());
        GenSpec {
            family,
            n,
            p,
            seed,
            node_prob: half.clone(),
            edge_prob: half,
            query: None,
            evidence: None,
            fix_random: None,
        }
    }
}

/// Ordered pairs `(u, v)`, `u != v`, each kept with probability `p`.
pub fn random_digraph(n: usize, p: f64, rng: &mut impl Rng) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in 1..=n {
            if u != v && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// Program under construction, by name, before random variables are fixed.
#[derive(Default)]
struct Draft {
    standard: Vec<(String, BigRational)>,
    founded: Vec<String>,
    rules: Vec<(String, Vec<String>)>,
    queries: Vec<String>,
    evidence: Vec<String>,
}

impl Draft {
    /// Fixes all but `keep` standard variables. A variable fixed true
    /// disappears from rule bodies; one fixed false removes its rules.
    fn fix_random(&mut self, keep: usize, rng: &mut impl Rng) {
        if keep >= self.standard.len() {
            return;
        }
        let mut order: Vec<usize> = (0..self.standard.len()).collect();
        order.shuffle(rng);
        let mut fixed = std::collections::BTreeMap::new();
        for &i in &order[keep..] {
            fixed.insert(self.standard[i].0.clone(), rng.gen_bool(0.5));
        }
        self.standard.retain(|(name, _)| !fixed.contains_key(name));
        self.rules.retain_mut(|(_, body)| {
            if body.iter().any(|b| fixed.get(b) == Some(&false)) {
                return false;
            }
            body.retain(|b| !fixed.contains_key(b));
            true
        });
    }

    fn build(self) -> Program {
        let mut b = Program::builder();
        for (name, _) in &self.standard {
            b.standard(name).unwrap();
        }
        for name in &self.founded {
            b.founded(name).unwrap();
        }
        for (name, w) in &self.standard {
            b.prob(name, w.clone()).unwrap();
        }
        for (head, body) in &self.rules {
            let body: Vec<&str> = body.iter().map(String::as_str).collect();
            b.rule(head, &body).unwrap();
        }
        for q in &self.queries {
            b.query(q).unwrap();
        }
        for e in &self.evidence {
            b.evidence(e).unwrap();
        }
        b.build()
    }
}

/// `in(v)` standard, `reach(v)` founded; `reach(1) <- in(1)` and
/// `reach(y) <- in(y), reach(x)` per edge `x -> y`; query `reach(n)`.
pub fn gen_graphrel(spec: &GenSpec) -> Program {
    assert!(spec.n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let edges = random_digraph(spec.n, spec.p, &mut rng);
    let mut d = Draft::default();
    for v in 1..=spec.n {
        d.standard.push((format!("in({v})"), spec.node_prob.clone()));
        d.founded.push(format!("reach({v})"));
    }
    d.rules.push(("reach(1)".into(), vec!["in(1)".into()]));
    for (x, y) in edges {
        d.rules.push((format!("reach({y})"), vec![format!("in({y})"), format!("reach({x})")]));
    }
    d.queries.push(format!("reach({})", spec.query.unwrap_or(spec.n)));
    if let Some(e) = spec.evidence {
        d.evidence.push(format!("reach({e})"));
    }
    if let Some(k) = spec.fix_random {
        d.fix_random(k, &mut rng);
    }
    d.build()
}

/// `stress(x)` and `influences(x_y)` standard, `smokes(x)` founded;
/// `smokes(x) <- stress(x)` and `smokes(y) <- influences(x_y), smokes(x)` per
/// friendship edge `x -> y`.
pub fn gen_smokers(spec: &GenSpec) -> Program {
    assert!(spec.n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let edges = random_digraph(spec.n, spec.p, &mut rng);
    let mut d = Draft::default();
    for x in 1..=spec.n {
        d.standard.push((format!("stress({x})"), spec.node_prob.clone()));
    }
    for &(x, y) in &edges {
        d.standard.push((format!("influences({x}_{y})"), spec.edge_prob.clone()));
    }
    for x in 1..=spec.n {
        d.founded.push(format!("smokes({x})"));
        d.rules.push((format!("smokes({x})"), vec![format!("stress({x})")]));
    }
    for &(x, y) in &edges {
        d.rules.push((format!("smokes({y})"), vec![format!("influences({x}_{y})"), format!("smokes({x})")]));
    }
    match spec.query {
        Some(q) => d.queries.push(format!("smokes({q})")),
        None => d.queries.extend((1..=spec.n).map(|x| format!("smokes({x})"))),
    }
    if let Some(e) = spec.evidence {
        d.evidence.push(format!("smokes({e})"));
    }
    if let Some(k) = spec.fix_random {
        d.fix_random(k, &mut rng);
    }
    d.build()
}

pub fn generate(spec: &GenSpec) -> Program {
    match spec.family {
        Family::GraphRel => gen_graphrel(spec),
        Family::Smokers => gen_smokers(spec),
    }
}

/// Bounds for [`random_program`].
#[derive(Clone, Debug)]
pub struct RandomShape {
    pub max_vars: usize,
    pub max_rules: usize,
    pub max_constraints: usize,
    /// Probability that a body literal is negated.
    pub negation: f64,
}

impl Default for RandomShape {
    fn default() -> RandomShape {
        RandomShape { max_vars: 10, max_rules: 12, max_constraints: 4, negation: 0.35 }
    }
}

/// Unstructured program: each variable founded or standard with equal odds,
/// rule bodies of up to three literals, clauses of one to three literals,
/// probabilities in tenths on most standard variables.
pub fn random_program(seed: u64, shape: &RandomShape) -> Program {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=shape.max_vars.max(1));
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
            if rng.gen_bool(0.7) {
                b.set_weight(v, BigRational::new(rng.gen_range(0..=10).into(), 10.into())).unwrap();
            }
            v
        };
        all.push(v);
    }
    if !founded.is_empty() {
        for _ in 0..rng.gen_range(0..=shape.max_rules) {
            let head = *founded.choose(&mut rng).unwrap();
            let len = rng.gen_range(0..=3.min(n));
            let body: Vec<Lit> = all
                .choose_multiple(&mut rng, len)
                .map(|&v: &Var| Lit::new(v, !rng.gen_bool(shape.negation)))
                .collect::<Vec<_>>();
            b.add_rule(head, body).unwrap();
        }
    }
    for _ in 0..rng.gen_range(0..=shape.max_constraints) {
        let len = rng.gen_range(1..=3.min(n));
        let lits: Vec<Lit> = all.choose_multiple(&mut rng, len).map(|&v| Lit::new(v, rng.gen_bool(0.5))).collect();
        b.add_clause(lits).unwrap();
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use stablecount_core::program::check_stratified;

    #[test]
    fn graphrel_shape() {
        let p = gen_graphrel(&GenSpec::new(Family::GraphRel, 4, 0.5, 1));
        assert_eq!(p.num_vars(), 8);
        assert!(check_stratified(&p).is_stratified());
        assert_eq!(p.lit_name(p.queries()[0]), "reach(4)");
    }

    #[test]
    fn forced_edges() {
        let p = gen_graphrel(&GenSpec::new(Family::GraphRel, 2, 1.0, 0));
        assert_eq!(p.rules().len(), 3);
        let s = gen_smokers(&GenSpec::new(Family::Smokers, 2, 1.0, 0));
        assert_eq!(s.standard().count(), 4);
        assert_eq!(s.rules().len(), 4);
    }

    #[test]
    fn fixing_keeps_requested_randomness() {
        let mut spec = GenSpec::new(Family::Smokers, 5, 0.5, 3);
        spec.fix_random = Some(6);
        let p = gen_smokers(&spec);
        assert_eq!(p.standard().count(), 6);
        assert_eq!(p.founded().count(), 5);
    }
}
