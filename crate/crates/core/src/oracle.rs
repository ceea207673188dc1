//! Brute-force stable-model enumeration straight from the definition, used
//! as the reference for everything the counter computes.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::OracleError;
use crate::program::{Assignment, Lit, Program, Var};
use crate::propagation::{least_model, reduct};

pub const DEFAULT_BOUND: usize = 22;

/// Complete stable assignments in enumeration order: standard variables are
/// the outer bits, founded the inner ones.
#[derive(Clone, Debug, Default)]
pub struct StableModelSet {
    pub models: Vec<Assignment>,
}

impl StableModelSet {
    pub fn len(&self) -> usize {
        self.models.len()
    }

    pub fn is_empty(&self) -> bool {
        self.models.is_empty()
    }

    /// Models that make every literal of `lits` true.
    pub fn extending<'a>(&'a self, lits: &'a [Lit]) -> impl Iterator<Item = &'a Assignment> + 'a {
        self.models.iter().filter(move |m| lits.iter().all(|&l| m.is_true(l)))
    }
}

pub fn enumerate_stable(p: &Program) -> Result<StableModelSet, OracleError> {
    enumerate_stable_bounded(p, DEFAULT_BOUND)
}

pub fn enumerate_stable_bounded(p: &Program, bound: usize) -> Result<StableModelSet, OracleError> {
    let n = p.num_vars();
    if n > bound || n >= 63 {
        return Err(OracleError::SizeLimit { vars: n, bound });
    }
    let standard: Vec<Var> = p.standard().collect();
    let founded: Vec<Var> = p.founded().collect();
    let mut values = vec![false; n];
    let mut models = Vec::new();
    for smask in 0u64..(1 << standard.len()) {
        for (i, v) in standard.iter().enumerate() {
            values[v.index()] = smask >> i & 1 == 1;
        }
        for fmask in 0u64..(1 << founded.len()) {
            for (i, v) in founded.iter().enumerate() {
                values[v.index()] = fmask >> i & 1 == 1;
            }
            if is_stable(p, &values) {
                let lits: Vec<Lit> = (0..n as u32).map(|i| Lit::new(Var(i), values[i as usize])).collect();
                let model = Assignment::from_lits(n, &lits).expect("complete assignment");
                recheck(p, &model);
                models.push(model);
            }
        }
    }
    Ok(StableModelSet { models })
}

fn holds(values: &[bool], l: Lit) -> bool {
    values[l.var().index()] == l.is_positive()
}

/// Constraints hold and the founded part equals the least model of the
/// reduct, computed here by naive iteration.
fn is_stable(p: &Program, values: &[bool]) -> bool {
    if !p.constraints().iter().all(|c| c.lits.iter().any(|&l| holds(values, l))) {
        return false;
    }
    let kept: Vec<_> = p
        .rules()
        .iter()
        .filter(|r| {
            r.body
                .iter()
                .all(|&l| (l.is_positive() && p.is_founded(l.var())) || holds(values, l))
        })
        .collect();
    let mut derived = vec![false; p.num_vars()];
    let mut changed = true;
    while changed {
        changed = false;
        for r in &kept {
            if derived[r.head.index()] {
                continue;
            }
            let fires = r
                .body
                .iter()
                .filter(|l| l.is_positive() && p.is_founded(l.var()))
                .all(|l| derived[l.var().index()]);
            if fires {
                derived[r.head.index()] = true;
                changed = true;
            }
        }
    }
    p.founded().all(|v| derived[v.index()] == values[v.index()])
}

/// Second opinion through the propagation module's reduct and least model.
fn recheck(p: &Program, model: &Assignment) {
    let least = least_model(p, &reduct(p, model));
    for v in p.founded() {
        assert_eq!(least.value(v), model.value(v), "stable-model re-check failed on {}", p.name(v));
    }
}

/// `Π p(v)` over true and `1 − p(v)` over false standard variables;
/// variables without a probability weigh 1/2.
pub fn model_weight(p: &Program, model: &Assignment) -> BigRational {
    let half = BigRational::new(1.into(), 2.into());
    let mut w = BigRational::one();
    for v in p.standard() {
        let pv = p.weight(v).cloned().unwrap_or_else(|| half.clone());
        w *= if model.is_true(v.pos()) { pv } else { BigRational::one() - pv };
    }
    w
}

/// Stable models extending `assumptions` and the program's evidence.
pub fn oracle_count(p: &Program, assumptions: &[Lit]) -> Result<BigUint, OracleError> {
    let set = enumerate_stable(p)?;
    let mut lits = p.evidence().to_vec();
    lits.extend_from_slice(assumptions);
    Ok(BigUint::from(set.extending(&lits).count()))
}

/// Weight of the stable models extending `assumptions` and the evidence.
pub fn oracle_weight(p: &Program, assumptions: &[Lit]) -> Result<BigRational, OracleError> {
    let set = enumerate_stable(p)?;
    let mut lits = p.evidence().to_vec();
    lits.extend_from_slice(assumptions);
    Ok(set.extending(&lits).map(|m| model_weight(p, m)).fold(BigRational::zero(), |a, b| a + b))
}

/// `P(q | e)` for each query of the program, in query order.
pub fn oracle_marginal(p: &Program) -> Result<Vec<(Lit, BigRational)>, OracleError> {
    let set = enumerate_stable(p)?;
    let evidence = p.evidence();
    let denom: BigRational = set.extending(evidence).map(|m| model_weight(p, m)).fold(BigRational::zero(), |a, b| a + b);
    if denom.is_zero() {
        return Err(OracleError::ZeroEvidenceWeight);
    }
    Ok(p.queries()
        .iter()
        .map(|&q| {
            let num = set
                .extending(evidence)
                .filter(|m| m.is_true(q))
                .map(|m| model_weight(p, m))
                .fold(BigRational::zero(), |a, b| a + b);
            (q, num / &denom)
        })
        .collect())
}

/// Model as the list of its literals in variable order.
pub fn model_literals(model: &Assignment) -> Vec<Lit> {
    let mut lits: Vec<Lit> = model.literals().collect();
    lits.sort_by_key(|l| l.var());
    lits
}
