mod common;

use common::{random_literals, random_program, rng, shuffled, Shape};
use proptest::prelude::*;
use rand::Rng;
use stablecount_core::program::{
    check_stratified, dependency_graph, residual_formula, Assignment, Clause, EdgeSign, Lit, Program, Rule,
    Stratification, Var,
};
use stablecount_core::propagation::{justified_assignment, least_model, Instance, PropagationState};
use stablecount_core::Mode;

fn graph_shape() -> Shape {
    Shape { max_vars: 12, max_rules: 16, max_constraints: 0, negation: 0.3, weights: false }
}

/// Reachability closure over the dependency graph.
fn reaches(p: &Program) -> Vec<Vec<bool>> {
    let n = p.num_vars();
    let mut r = vec![vec![false; n]; n];
    for (from, to, _) in dependency_graph(p).edges {
        r[from.index()][to.index()] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if r[i][k] {
                let via = r[k].clone();
                for (j, &edge) in via.iter().enumerate() {
                    if edge {
                        r[i][j] = true;
                    }
                }
            }
        }
    }
    r
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn stratification_matches_negative_cycles(seed in any::<u64>()) {
        let p = random_program(&mut rng(seed), &graph_shape());
        let g = dependency_graph(&p);
        let r = reaches(&p);
        let has_negative_cycle = g
            .edges
            .iter()
            .any(|&(from, to, s)| s == EdgeSign::Negative && (from == to || r[to.index()][from.index()]));
        match check_stratified(&p) {
            Stratification::Stratified(levels) => {
                prop_assert!(!has_negative_cycle);
                for &(from, to, s) in &g.edges {
                    let (lf, lt) = (levels.level[&from], levels.level[&to]);
                    match s {
                        EdgeSign::Positive => prop_assert!(lt >= lf),
                        EdgeSign::Negative => prop_assert!(lt > lf),
                    }
                }
            }
            Stratification::NotStratified { cycle } => {
                prop_assert!(has_negative_cycle);
                let mut negative = false;
                for (i, &v) in cycle.iter().enumerate() {
                    let next = cycle[(i + 1) % cycle.len()];
                    let pos = g.has_edge(v, next, EdgeSign::Positive);
                    let neg = g.has_edge(v, next, EdgeSign::Negative);
                    prop_assert!(pos || neg);
                    negative |= neg;
                }
                prop_assert!(negative);
            }
        }
    }

    #[test]
    fn residual_agrees_with_truth_table(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let n = rng.gen_range(1..=6usize);
        let mut b = Program::builder();
        for i in 0..n {
            b.standard(&format!("x{i}")).unwrap();
        }
        for _ in 0..rng.gen_range(0..=6) {
            let lits = random_literals(&mut rng, n, 3);
            if !lits.is_empty() {
                b.add_clause(lits).unwrap();
            }
        }
        let p = b.build();
        let theta_lits = random_literals(&mut rng, n, n);
        let theta = Assignment::from_lits(n, &theta_lits).unwrap();
        let res = residual_formula(p.constraints(), &theta);
        if let Ok(r) = &res {
            let again = residual_formula(r, &theta);
            prop_assert_eq!(again.as_ref(), Ok(r));
        }
        for mask in 0u32..(1 << n) {
            let sigma: Vec<Lit> = (0..n as u32).map(|i| Lit::new(Var(i), mask >> i & 1 == 1)).collect();
            if theta_lits.iter().any(|l| !sigma.contains(l)) {
                continue;
            }
            let holds = |cs: &[Clause]| cs.iter().all(|c| c.lits.iter().any(|l| sigma.contains(l)));
            let full = holds(p.constraints());
            match &res {
                Ok(r) => prop_assert_eq!(full, holds(r)),
                Err(_) => prop_assert!(!full),
            }
        }
    }

    #[test]
    fn least_model_is_the_smallest_model(seed in any::<u64>()) {
        let shape = Shape { max_vars: 8, negation: 0.0, max_constraints: 0, weights: false, ..Shape::default() };
        let p = random_program(&mut rng(seed), &shape);
        let rules: Vec<Rule> = p
            .rules()
            .iter()
            .map(|r| Rule::new(r.head, r.body.iter().copied().filter(|l| p.is_founded(l.var())).collect()))
            .collect();
        let least = least_model(&p, &rules);
        let founded: Vec<Var> = p.founded().collect();
        let closed = |m: &dyn Fn(Var) -> bool| {
            rules.iter().all(|r| m(r.head) || !r.body.iter().all(|l| m(l.var())))
        };
        prop_assert!(closed(&|v| least.is_true(v.pos())));
        for mask in 0u32..(1 << founded.len()) {
            let m = |v: Var| founded.iter().position(|&f| f == v).is_some_and(|i| mask >> i & 1 == 1);
            if closed(&m) {
                for &v in &founded {
                    prop_assert!(!least.is_true(v.pos()) || m(v));
                }
            }
        }
    }

    #[test]
    fn propagation_is_order_independent(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let p = random_program(&mut rng, &Shape::default());
        let q = shuffled(&p, &mut rng);
        let assumptions = random_literals(&mut rng, p.num_vars(), 4);
        for mode in [Mode::Copy, Mode::StandardSearch] {
            let run = |p: &Program| {
                let mut st = PropagationState::new(Instance::new(p, mode, &[]));
                let ok = assumptions.iter().all(|&l| st.assume(l))
                    && st.initial_scan().is_ok()
                    && st.propagate().is_ok();
                let mut lits: Vec<Lit> = st.assignment().literals().collect();
                lits.sort();
                ok.then_some(lits)
            };
            prop_assert_eq!(run(&p), run(&q));
        }
    }

    #[test]
    fn justified_assignment_is_monotone_and_agrees(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let p = random_program(&mut rng, &Shape::default());
        let mut st = PropagationState::new(Instance::new(&p, Mode::Copy, &[]));
        if st.initial_scan().is_err() || st.propagate().is_err() {
            return Ok(());
        }
        let mut previous: Option<Assignment> = None;
        for v in p.vars().collect::<Vec<_>>() {
            let theta = st.assignment().restrict_to(p.num_vars());
            let ja = justified_assignment(&p, &theta);
            for l in ja.literals() {
                prop_assert!(theta.is_true(l));
            }
            let mut direct: Vec<Var> = p.founded().filter(|&f| ja.is_true(f.pos())).collect();
            direct.sort();
            prop_assert_eq!(st.justified(), direct);
            if let Some(prev) = &previous {
                for l in prev.literals() {
                    prop_assert!(ja.is_true(l));
                }
            }
            previous = Some(ja);
            if st.assignment().is_fixed(v) {
                continue;
            }
            st.decide(Lit::new(v, rng.gen_bool(0.5)));
            if st.propagate().is_err() {
                break;
            }
        }
    }
}
