//! Marginal probabilities `P(q | e)` as ratios of weighted stable-model
//! counts.

use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use crate::counter::{CountOptions, Counter, Mode};
use crate::error::InferenceError;
use crate::program::{check_stratified, Lit, Program};

#[derive(Clone, Debug)]
pub struct InferenceTask {
    pub program: Program,
    pub mode: Mode,
    pub queries: Vec<Lit>,
    pub evidence: Vec<Lit>,
}

impl InferenceTask {
    /// Task with the queries and evidence declared in the program.
    pub fn from_program(program: &Program, mode: Mode) -> InferenceTask {
        InferenceTask {
            program: program.clone(),
            mode,
            queries: program.queries().to_vec(),
            evidence: program.evidence().to_vec(),
        }
    }
}

pub fn marginal(task: &InferenceTask) -> Result<Vec<(Lit, BigRational)>, InferenceError> {
    marginal_with(task, &CountOptions::default())
}

/// Like [`marginal`] with explicit search options; `weighted` is forced on.
/// Every count runs with a fresh cache.
pub fn marginal_with(task: &InferenceTask, options: &CountOptions) -> Result<Vec<(Lit, BigRational)>, InferenceError> {
    if !check_stratified(&task.program).is_stratified() {
        return Err(InferenceError::NotStratified);
    }
    let program = task.program.with_task(task.queries.clone(), task.evidence.clone());
    let options = CountOptions { weighted: true, keep_cache: false, ..options.clone() };
    let weight = |assumptions: &[Lit]| -> Result<BigRational, InferenceError> {
        let mut counter = Counter::new(&program, task.mode, options.clone())?;
        Ok(counter.count(assumptions)?.weight.expect("weighted count"))
    };
    let denom = weight(&[])?;
    if denom.is_zero() {
        return Err(InferenceError::ZeroEvidenceWeight);
    }
    task.queries
        .iter()
        .map(|&q| Ok((q, weight(&[q])? / &denom)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::example2;
    use alloc::vec;
    use num_traits::One;

    fn ratio(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn weighted_p1() -> Program {
        let mut b = Program::builder();
        b.founded("a").unwrap();
        b.founded("b").unwrap();
        b.standard("s").unwrap();
        b.rule("a", &["b"]).unwrap();
        b.rule("b", &["a"]).unwrap();
        b.rule("a", &["s"]).unwrap();
        b.prob("s", ratio(3, 10)).unwrap();
        b.build()
    }

    #[test]
    fn p1_given_b() {
        let p = weighted_p1();
        for mode in [Mode::Copy, Mode::StandardSearch] {
            let task = InferenceTask {
                program: p.clone(),
                mode,
                queries: vec![p.parse_lit("a").unwrap(), p.parse_lit("-a").unwrap()],
                evidence: vec![p.parse_lit("b").unwrap()],
            };
            let m = marginal(&task).unwrap();
            assert_eq!(m[0].1, BigRational::one());
            assert_eq!(m[1].1, BigRational::zero());
        }
    }

    #[test]
    fn p1_without_evidence() {
        let p = weighted_p1();
        let a = p.parse_lit("a").unwrap();
        let task = InferenceTask { program: p, mode: Mode::Copy, queries: vec![a, a.negate()], evidence: vec![] };
        let m = marginal(&task).unwrap();
        assert_eq!(m[0].1, ratio(3, 10));
        assert_eq!(m[1].1, ratio(7, 10));
    }

    #[test]
    fn zero_evidence() {
        let p = weighted_p1();
        let task = InferenceTask {
            program: p.clone(),
            mode: Mode::Copy,
            queries: vec![p.parse_lit("a").unwrap()],
            evidence: vec![p.parse_lit("-a").unwrap(), p.parse_lit("s").unwrap()],
        };
        assert_eq!(marginal(&task), Err(InferenceError::ZeroEvidenceWeight));
    }

    #[test]
    fn unstratified_rejected() {
        let task = InferenceTask::from_program(&example2(), Mode::Copy);
        assert_eq!(marginal(&task), Err(InferenceError::NotStratified));
    }
}
