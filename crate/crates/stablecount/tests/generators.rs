use num_rational::BigRational;
use stablecount::format::{parse_program, print_program};
use stablecount::generate::{gen_graphrel, gen_smokers, generate, random_program, Family, GenSpec, RandomShape};
use stablecount_core::inference::{marginal, InferenceTask};
use stablecount_core::oracle::oracle_marginal;
use stablecount_core::program::check_stratified;
use stablecount_core::Mode;

fn ratio(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

fn marginals_all_ways(p: &stablecount_core::Program) -> Vec<BigRational> {
    let expected: Vec<BigRational> = oracle_marginal(p).unwrap().into_iter().map(|(_, r)| r).collect();
    for mode in [Mode::Copy, Mode::StandardSearch] {
        let got: Vec<BigRational> =
            marginal(&InferenceTask::from_program(p, mode)).unwrap().into_iter().map(|(_, r)| r).collect();
        assert_eq!(got, expected, "{mode:?}");
    }
    expected
}

#[test]
fn two_node_reachability() {
    // edge 1 -> 2 forced; reach(2) needs in(1) and in(2)
    let p = gen_graphrel(&GenSpec::new(Family::GraphRel, 2, 1.0, 0));
    assert_eq!(marginals_all_ways(&p), [ratio(1, 4)]);
}

#[test]
fn single_node_reachability_is_the_node_probability() {
    let mut spec = GenSpec::new(Family::GraphRel, 1, 0.5, 0);
    spec.node_prob = ratio(3, 10);
    assert_eq!(marginals_all_ways(&gen_graphrel(&spec)), [ratio(3, 10)]);
}

#[test]
fn single_smoker_is_the_stress_probability() {
    let mut spec = GenSpec::new(Family::Smokers, 1, 0.5, 0);
    spec.node_prob = ratio(1, 5);
    assert_eq!(marginals_all_ways(&gen_smokers(&spec)), [ratio(1, 5)]);
}

#[test]
fn two_mutual_friends() {
    // smokes(1) = stress(1) ∨ (influences(2_1) ∧ stress(2)) = 1/2 + 1/2 · 1/4
    let p = gen_smokers(&GenSpec::new(Family::Smokers, 2, 1.0, 0));
    assert_eq!(marginals_all_ways(&p), [ratio(5, 8), ratio(5, 8)]);
}

#[test]
fn evidence_on_reachability() {
    let mut spec = GenSpec::new(Family::GraphRel, 3, 1.0, 0);
    spec.evidence = Some(2);
    let m = marginals_all_ways(&gen_graphrel(&spec));
    // reach(2) forces in(1), in(2); reach(3) then needs in(3)
    assert_eq!(m, [ratio(1, 2)]);
}

#[test]
fn generation_is_deterministic() {
    for family in [Family::GraphRel, Family::Smokers] {
        for seed in 0..5 {
            let mut spec = GenSpec::new(family, 7, 0.4, seed);
            spec.fix_random = Some(9);
            assert_eq!(print_program(&generate(&spec)), print_program(&generate(&spec)));
        }
    }
}

#[test]
fn generated_programs_are_stratified_and_round_trip() {
    for family in [Family::GraphRel, Family::Smokers] {
        for seed in 0..20 {
            let p = generate(&GenSpec::new(family, 8, 0.3, seed));
            assert!(check_stratified(&p).is_stratified());
            let text = print_program(&p);
            let q = parse_program(&text).unwrap();
            assert_eq!(print_program(&q), text);
        }
    }
}

#[test]
fn random_programs_round_trip() {
    for seed in 0..500 {
        let p = random_program(seed, &RandomShape::default());
        let text = print_program(&p);
        let q = parse_program(&text).unwrap_or_else(|e| panic!("{e}\n{text}"));
        assert_eq!(q.rules(), p.rules());
        assert_eq!(q.constraints(), p.constraints());
        assert_eq!(q.num_vars(), p.num_vars());
        for v in p.vars() {
            assert_eq!(q.name(v), p.name(v));
            assert_eq!(q.kind(v), p.kind(v));
            assert_eq!(q.weight(v), p.weight(v));
        }
        assert_eq!(print_program(&q), text);
    }
}
