//! Unit propagation over clauses and rules, unfounded-set propagation, and
//! the reduct / least-model / justified-assignment definitions.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::One;

use crate::counter::Mode;
use crate::program::{Assignment, Lit, Program, Reason, Rule, Var};
use crate::transform::{copy_transform, CopyOrigin, CopyProgram};

/// `P^θ`: drops rules with a body literal `¬c` where `c ∈ θ` or a standard
/// `b` where `¬b ∈ θ`; strips negative and standard literals from the rest.
pub fn reduct(p: &Program, theta: &Assignment) -> Vec<Rule> {
    p.rules()
        .iter()
        .filter(|r| {
            !r.body.iter().any(|&l| {
                if l.is_positive() {
                    p.is_standard(l.var()) && theta.is_false(l)
                } else {
                    theta.is_false(l)
                }
            })
        })
        .map(|r| {
            let body = r.body
                .iter()
                .copied()
                .filter(|l| l.is_positive() && p.is_founded(l.var()))
                .collect();
            Rule::new(r.head, body)
        })
        .collect()
}

/// Forward chaining over positive rules. The result assigns every founded
/// variable of `p`: true iff derivable.
pub fn least_model(p: &Program, rules: &[Rule]) -> Assignment {
    debug_assert!(rules.iter().all(|r| p.is_positive_rule(r)));
    let derived = forward_chain(p.num_vars(), rules.iter().map(|r| (r.head, &r.body[..])));
    let mut a = Assignment::new(p.num_vars());
    for v in p.founded() {
        a.assign(Lit::new(v, derived[v.index()]), Reason::Assumption);
    }
    a
}

/// Least fixpoint of `head <- body` where every body literal must already be
/// derived (all bodies here are positive).
fn forward_chain<'r>(n: usize, rules: impl Iterator<Item = (Var, &'r [Lit])>) -> Vec<bool> {
    let rules: Vec<(Var, &[Lit])> = rules.collect();
    let mut missing: Vec<usize> = rules.iter().map(|r| r.1.len()).collect();
    let mut watchers: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, (_, body)) in rules.iter().enumerate() {
        for l in body.iter() {
            watchers[l.var().index()].push(i);
        }
    }
    let mut derived = vec![false; n];
    let mut queue: Vec<Var> = Vec::new();
    for (i, &(head, _)) in rules.iter().enumerate() {
        if missing[i] == 0 && !derived[head.index()] {
            derived[head.index()] = true;
            queue.push(head);
        }
    }
    while let Some(v) = queue.pop() {
        for &i in &watchers[v.index()] {
            missing[i] -= 1;
            let head = rules[i].0;
            if missing[i] == 0 && !derived[head.index()] {
                derived[head.index()] = true;
                queue.push(head);
            }
        }
    }
    derived
}

/// `JA(P, θ) = J₀(θ) ∪ {v ∈ θ founded | v ∈ Least(R|J₀(θ))}` with
/// `J₀(θ) = θ⁻ ∪ (θ⁺ ∩ standard)`.
pub fn justified_assignment(p: &Program, theta: &Assignment) -> Assignment {
    let mut j0 = Assignment::new(p.num_vars());
    for l in theta.literals() {
        if !l.is_positive() || p.is_standard(l.var()) {
            j0.assign(l, Reason::Assumption);
        }
    }
    // R|J₀ as rules: drop those with a body literal false under J₀, remove the
    // literals true under J₀. Only rules left with a purely positive founded
    // body can fire.
    let residual: Vec<Rule> = p
        .rules()
        .iter()
        .filter(|r| !r.body.iter().any(|&l| j0.is_false(l)))
        .map(|r| {
            Rule::new(r.head, r.body.iter().copied().filter(|&l| !j0.is_true(l)).collect())
        })
        .filter(|r| p.is_positive_rule(r))
        .collect();
    let least = least_model(p, &residual);

    let mut ja = j0;
    for v in p.founded() {
        if theta.is_true(v.pos()) && least.is_true(v.pos()) {
            ja.assign(v.pos(), Reason::Assumption);
        }
    }
    ja
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VarClass {
    Standard,
    Founded,
    /// Copy twin of a founded variable; never decided, weight-neutral.
    Copy,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClauseOrigin {
    Constraint(u32),
    /// Evidence or assumption turned into a unit clause.
    Unit,
    Copy(CopyOrigin),
}

#[derive(Clone, Debug)]
pub struct InstanceClause {
    pub lits: Vec<Lit>,
    pub origin: ClauseOrigin,
    /// May only propagate onto a standard variable.
    pub check_only: bool,
}

/// Everything the propagators need, flattened and indexed. Variables are
/// numbered as in the program, copies (if any) following the originals.
#[derive(Clone, Debug)]
pub struct Instance {
    pub(crate) mode: Mode,
    pub(crate) classes: Vec<VarClass>,
    pub(crate) names: Vec<alloc::string::String>,
    pub(crate) num_original: usize,
    pub(crate) clauses: Vec<InstanceClause>,
    pub(crate) rules: Vec<Rule>,
    pub(crate) rule_lits: Vec<Vec<Lit>>,
    /// Per literal code: clauses containing that literal.
    pub(crate) clause_occ: Vec<Vec<u32>>,
    /// Per literal code: rules whose clause form contains that literal.
    pub(crate) rule_occ: Vec<Vec<u32>>,
    /// Per variable: rules with that variable as a positive body literal.
    pub(crate) pos_body: Vec<Vec<u32>>,
    pub(crate) weights: Vec<Option<BigRational>>,
    pub(crate) defaulted_weights: Vec<Var>,
}

impl Instance {
    /// `units` are extra unit clauses (evidence). In standard-search mode any
    /// clause mentioning a founded variable only checks, never propagates.
    pub fn new(p: &Program, mode: Mode, units: &[Lit]) -> Instance {
        match mode {
            Mode::StandardSearch => Instance::build(p, None, mode, units),
            Mode::Copy => {
                let q = copy_transform(p);
                Instance::build(p, Some(&q), mode, units)
            }
        }
    }

    pub fn from_copy(q: &CopyProgram, units: &[Lit]) -> Instance {
        Instance::build(q.base(), Some(q), Mode::Copy, units)
    }

    fn build(p: &Program, q: Option<&CopyProgram>, mode: Mode, units: &[Lit]) -> Instance {
        let n = q.map_or(p.num_vars(), |q| q.num_vars());
        let mut classes = Vec::with_capacity(n);
        let mut names = Vec::with_capacity(n);
        for v in (0..n as u32).map(Var) {
            if v.index() >= p.num_vars() {
                classes.push(VarClass::Copy);
                names.push(q.unwrap().name(v));
            } else {
                classes.push(if p.is_founded(v) { VarClass::Founded } else { VarClass::Standard });
                names.push(p.name(v).into());
            }
        }

        let check = mode == Mode::StandardSearch;
        let mentions_founded = |lits: &[Lit]| lits.iter().any(|l| classes[l.var().index()] == VarClass::Founded);
        let mut clauses = Vec::new();
        for (i, c) in p.constraints().iter().enumerate() {
            clauses.push(InstanceClause {
                lits: c.lits.clone(),
                origin: ClauseOrigin::Constraint(i as u32),
                check_only: check && mentions_founded(&c.lits),
            });
        }
        for &u in units {
            clauses.push(InstanceClause {
                lits: vec![u],
                origin: ClauseOrigin::Unit,
                check_only: check && mentions_founded(&[u]),
            });
        }
        if let Some(q) = q {
            for cc in q.copy_clauses() {
                clauses.push(InstanceClause {
                    lits: cc.lits.clone(),
                    origin: ClauseOrigin::Copy(cc.origin),
                    check_only: false,
                });
            }
        }

        let rules: Vec<Rule> = p.rules().to_vec();
        let rule_lits: Vec<Vec<Lit>> = rules.iter().map(Rule::clause_form).collect();

        let mut clause_occ = vec![Vec::new(); 2 * n];
        for (i, c) in clauses.iter().enumerate() {
            for l in &c.lits {
                clause_occ[l.code() as usize].push(i as u32);
            }
        }
        let mut rule_occ = vec![Vec::new(); 2 * n];
        let mut pos_body = vec![Vec::new(); n];
        for (i, lits) in rule_lits.iter().enumerate() {
            for l in lits {
                rule_occ[l.code() as usize].push(i as u32);
            }
        }
        for (i, r) in rules.iter().enumerate() {
            for l in &r.body {
                if l.is_positive() && p.is_founded(l.var()) {
                    pos_body[l.var().index()].push(i as u32);
                }
            }
        }

        let half = BigRational::new(1.into(), 2.into());
        let mut weights = vec![None; n];
        let mut defaulted_weights = Vec::new();
        for v in p.standard() {
            weights[v.index()] = Some(match p.weight(v) {
                Some(w) => w.clone(),
                None => {
                    defaulted_weights.push(v);
                    half.clone()
                }
            });
        }

        Instance {
            mode,
            classes,
            names,
            num_original: p.num_vars(),
            clauses,
            rules,
            rule_lits,
            clause_occ,
            rule_occ,
            pos_body,
            weights,
            defaulted_weights,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.classes.len()
    }

    pub fn class(&self, v: Var) -> VarClass {
        self.classes[v.index()]
    }

    pub fn name(&self, v: Var) -> &str {
        &self.names[v.index()]
    }

    pub fn clauses(&self) -> &[InstanceClause] {
        &self.clauses
    }

    /// Whether the search may branch on `v` in this instance's mode.
    pub fn decidable(&self, v: Var) -> bool {
        !matches!(
            (self.mode, self.class(v)),
            (_, VarClass::Copy) | (Mode::StandardSearch, VarClass::Founded)
        )
    }

    /// Weight of a fixed literal: `p(v)` or `1 − p(v)` for standard variables,
    /// one otherwise.
    pub fn literal_weight(&self, l: Lit) -> Option<BigRational> {
        self.weights[l.var().index()].as_ref().map(|w| {
            if l.is_positive() {
                w.clone()
            } else {
                BigRational::one() - w
            }
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Conflict {
    Clause(u32),
    Rule(u32),
    /// A true founded variable belongs to an unfounded set.
    Unfounded(Var),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TraceKind {
    Decide,
    Unit,
    Unfounded,
    Conflict,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TraceReason {
    Decision,
    Assumption,
    Clause(ClauseOrigin),
    Rule(u32),
    Unfounded,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TraceEvent {
    pub level: u32,
    pub kind: TraceKind,
    pub lit: Lit,
    pub reason: TraceReason,
}

enum Scan {
    Satisfied,
    Open,
    Unit(Lit),
    Falsified,
}

/// Assignment plus propagation machinery for one search.
#[derive(Clone, Debug)]
pub struct PropagationState {
    inst: Instance,
    assignment: Assignment,
    qhead: usize,
    unfounded_events: u64,
    trace: Option<Vec<TraceEvent>>,
}

impl PropagationState {
    pub fn new(inst: Instance) -> PropagationState {
        let n = inst.num_vars();
        PropagationState {
            inst,
            assignment: Assignment::new(n),
            qhead: 0,
            unfounded_events: 0,
            trace: None,
        }
    }

    pub fn enable_trace(&mut self) {
        self.trace = Some(Vec::new());
    }

    pub fn take_trace(&mut self) -> Vec<TraceEvent> {
        self.trace.as_mut().map(core::mem::take).unwrap_or_default()
    }

    pub fn instance(&self) -> &Instance {
        &self.inst
    }

    pub fn assignment(&self) -> &Assignment {
        &self.assignment
    }

    pub fn unfounded_events(&self) -> u64 {
        self.unfounded_events
    }

    fn record(&mut self, kind: TraceKind, lit: Lit, reason: TraceReason) {
        if let Some(t) = &mut self.trace {
            t.push(TraceEvent { level: self.assignment.decision_level(), kind, lit, reason });
        }
    }

    fn set(&mut self, l: Lit, reason: Reason, kind: TraceKind, why: TraceReason) {
        self.assignment.assign(l, reason);
        self.record(kind, l, why);
    }

    /// Fixes `l` at the current level. Returns `false` if `l` is already false.
    pub fn assume(&mut self, l: Lit) -> bool {
        match self.assignment.lit_value(l) {
            Some(v) => v,
            None => {
                self.set(l, Reason::Assumption, TraceKind::Unit, TraceReason::Assumption);
                true
            }
        }
    }

    /// Opens a decision level with `l`, which must be unfixed.
    pub fn decide(&mut self, l: Lit) {
        debug_assert!(self.inst.decidable(l.var()), "decision on a non-decidable variable");
        self.assignment.decide(l);
        self.record(TraceKind::Decide, l, TraceReason::Decision);
    }

    pub fn backtrack(&mut self, level: u32) {
        self.assignment.backtrack_to(level);
        self.qhead = self.qhead.min(self.assignment.len());
    }

    fn scan(&self, lits: &[Lit], check_only: bool) -> Scan {
        let mut unit = None;
        let mut open = 0;
        for &l in lits {
            match self.assignment.lit_value(l) {
                Some(true) => return Scan::Satisfied,
                Some(false) => {}
                None => {
                    open += 1;
                    unit = Some(l);
                }
            }
        }
        match (open, unit) {
            (0, _) => Scan::Falsified,
            (1, Some(l)) if !check_only || self.inst.class(l.var()) == VarClass::Standard => Scan::Unit(l),
            _ => Scan::Open,
        }
    }

    fn conflict(&mut self, c: Conflict, lit: Lit) -> Conflict {
        let why = match c {
            Conflict::Clause(i) => TraceReason::Clause(self.inst.clauses[i as usize].origin),
            Conflict::Rule(i) => TraceReason::Rule(i),
            Conflict::Unfounded(_) => TraceReason::Unfounded,
        };
        self.record(TraceKind::Conflict, lit, why);
        c
    }

    fn visit_clause(&mut self, ci: u32, trigger: Lit) -> Result<(), Conflict> {
        let c = &self.inst.clauses[ci as usize];
        match self.scan(&c.lits, c.check_only) {
            Scan::Falsified => Err(self.conflict(Conflict::Clause(ci), trigger)),
            Scan::Unit(l) => {
                let origin = c.origin;
                self.set(l, Reason::Clause(ci), TraceKind::Unit, TraceReason::Clause(origin));
                Ok(())
            }
            _ => Ok(()),
        }
    }

    fn visit_rule(&mut self, ri: u32, trigger: Lit) -> Result<(), Conflict> {
        match self.scan(&self.inst.rule_lits[ri as usize], false) {
            Scan::Falsified => Err(self.conflict(Conflict::Rule(ri), trigger)),
            Scan::Unit(l) => {
                self.set(l, Reason::Rule(ri), TraceKind::Unit, TraceReason::Rule(ri));
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// Scans every clause and rule once; needed before the first call to
    /// [`unit_propagate`](Self::unit_propagate) so that initial unit clauses
    /// and facts fire.
    pub fn initial_scan(&mut self) -> Result<(), Conflict> {
        for ci in 0..self.inst.clauses.len() as u32 {
            let l = self.inst.clauses[ci as usize].lits.first().copied().unwrap_or(Var(0).pos());
            self.visit_clause(ci, l)?;
        }
        for ri in 0..self.inst.rules.len() as u32 {
            let l = self.inst.rules[ri as usize].head.pos();
            self.visit_rule(ri, l)?;
        }
        Ok(())
    }

    /// Propagates clause and rule units until nothing changes.
    pub fn unit_propagate(&mut self) -> Result<(), Conflict> {
        while self.qhead < self.assignment.len() {
            let l = self.assignment.trail()[self.qhead].lit;
            self.qhead += 1;
            let falsified = (!l).code() as usize;
            for k in 0..self.inst.clause_occ[falsified].len() {
                let ci = self.inst.clause_occ[falsified][k];
                self.visit_clause(ci, l)?;
            }
            for k in 0..self.inst.rule_occ[falsified].len() {
                let ri = self.inst.rule_occ[falsified][k];
                self.visit_rule(ri, l)?;
            }
        }
        Ok(())
    }

    /// Founded variables that could still be derived if every unfixed
    /// literal went their way: rules with no false body literal, chained
    /// through positive founded body atoms.
    pub fn supported(&self) -> Vec<bool> {
        let inst = &self.inst;
        let n = inst.num_vars();
        let mut missing: Vec<usize> = Vec::with_capacity(inst.rules.len());
        let mut usable: Vec<bool> = Vec::with_capacity(inst.rules.len());
        let mut supported = vec![false; n];
        let mut queue = Vec::new();
        for r in &inst.rules {
            let ok = !r.body.iter().any(|&l| self.assignment.is_false(l));
            let m = r.body
                .iter()
                .filter(|l| l.is_positive() && inst.class(l.var()) == VarClass::Founded)
                .count();
            usable.push(ok);
            missing.push(m);
            if ok && m == 0 && !supported[r.head.index()] {
                supported[r.head.index()] = true;
                queue.push(r.head);
            }
        }
        while let Some(v) = queue.pop() {
            for &ri in &inst.pos_body[v.index()] {
                let ri = ri as usize;
                if !usable[ri] {
                    continue;
                }
                missing[ri] -= 1;
                let h = inst.rules[ri].head;
                if missing[ri] == 0 && !supported[h.index()] {
                    supported[h.index()] = true;
                    queue.push(h);
                }
            }
        }
        supported
    }

    /// Sets every member of the greatest unfounded set false. Returns the
    /// number of literals fixed.
    pub fn unfounded_propagate(&mut self) -> Result<usize, Conflict> {
        let supported = self.supported();
        let mut fixed = 0;
        for (i, &ok) in supported.iter().enumerate().take(self.inst.num_vars()) {
            let v = Var(i as u32);
            if self.inst.class(v) != VarClass::Founded || ok {
                continue;
            }
            match self.assignment.value(v) {
                Some(true) => {
                    self.unfounded_events += 1;
                    return Err(self.conflict(Conflict::Unfounded(v), v.pos()));
                }
                Some(false) => {}
                None => {
                    self.set(v.neg(), Reason::Unfounded, TraceKind::Unfounded, TraceReason::Unfounded);
                    fixed += 1;
                }
            }
        }
        if fixed > 0 {
            self.unfounded_events += 1;
        }
        Ok(fixed)
    }

    /// Alternates both propagators until neither fixes anything.
    pub fn propagate(&mut self) -> Result<(), Conflict> {
        loop {
            self.unit_propagate()?;
            if self.unfounded_propagate()? == 0 {
                return Ok(());
            }
        }
    }

    /// True founded variables derivable from `J₀` by forward chaining,
    /// computed with per-rule counters over the current assignment.
    pub fn justified(&self) -> Vec<Var> {
        let inst = &self.inst;
        let a = &self.assignment;
        let heads_bodies = inst.rules.iter().filter_map(|r| {
            let fires = r.body.iter().all(|&l| {
                (l.is_positive() && inst.class(l.var()) == VarClass::Founded) || a.is_true(l)
            });
            fires.then_some((r.head, &r.body[..]))
        });
        // only the positive founded literals remain as prerequisites
        let owned: Vec<(Var, Vec<Lit>)> = heads_bodies
            .map(|(h, b)| {
                (h, b.iter().copied().filter(|l| l.is_positive() && inst.class(l.var()) == VarClass::Founded).collect())
            })
            .collect();
        let derived = forward_chain(inst.num_vars(), owned.iter().map(|(h, b)| (*h, &b[..])));
        (0..inst.num_original as u32)
            .map(Var)
            .filter(|&v| inst.class(v) == VarClass::Founded && derived[v.index()] && a.is_true(v.pos()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{assignment, example2, p1};

    fn state(p: &Program, mode: Mode) -> PropagationState {
        PropagationState::new(Instance::new(p, mode, &[]))
    }

    #[test]
    fn unit_chain_and_conflict() {
        let mut b = Program::builder();
        b.standard("a").unwrap();
        b.standard("b").unwrap();
        b.clause(&["a"]).unwrap();
        b.clause(&["-a", "b"]).unwrap();
        let p = b.build();
        let mut st = state(&p, Mode::Copy);
        st.initial_scan().unwrap();
        st.unit_propagate().unwrap();
        assert!(st.assignment().is_true(Var(0).pos()));
        assert!(st.assignment().is_true(Var(1).pos()));

        let mut b = Program::builder();
        b.standard("a").unwrap();
        b.clause(&["a"]).unwrap();
        b.clause(&["-a"]).unwrap();
        let p = b.build();
        let mut st = state(&p, Mode::Copy);
        let r = st.initial_scan().and_then(|_| st.unit_propagate());
        assert!(r.is_err());
    }

    #[test]
    fn copy_p1_decision_s_propagates_copies() {
        let p = p1();
        let mut st = state(&p, Mode::Copy);
        st.initial_scan().unwrap();
        st.decide(Var(2).pos());
        st.unit_propagate().unwrap();
        let a = st.assignment();
        for v in 0..5 {
            assert_eq!(a.value(Var(v)), Some(true), "var {v}");
        }
    }

    #[test]
    fn reduct_of_p1() {
        let p = p1();
        let r = reduct(&p, &assignment(&p, &["-s"]));
        assert_eq!(r, vec![Rule::new(Var(0), vec![Var(1).pos()]), Rule::new(Var(1), vec![Var(0).pos()])]);
        let r = reduct(&p, &assignment(&p, &["s"]));
        assert_eq!(r.len(), 3);
        assert_eq!(r[2], Rule::new(Var(0), vec![]));
    }

    #[test]
    fn least_models() {
        let p = p1();
        let loop_only = vec![Rule::new(Var(0), vec![Var(1).pos()]), Rule::new(Var(1), vec![Var(0).pos()])];
        let m = least_model(&p, &loop_only);
        assert!(m.is_false(Var(0).pos()) && m.is_false(Var(1).pos()));
        let chain = vec![Rule::new(Var(0), vec![]), Rule::new(Var(1), vec![Var(0).pos()])];
        let m = least_model(&p, &chain);
        assert!(m.is_true(Var(0).pos()) && m.is_true(Var(1).pos()));
    }

    #[test]
    fn example2_reduct_under_u_not_e() {
        let p = example2();
        let theta = assignment(&p, &["u", "-e"]);
        let m = least_model(&p, &reduct(&p, &theta));
        for v in ["d", "f", "c"] {
            assert!(m.is_true(p.lookup(v).unwrap().pos()), "{v}");
        }
    }

    #[test]
    fn example2_justified_assignment() {
        let p = example2();
        let theta = assignment(&p, &["a", "b", "d", "u", "-e", "c", "f"]);
        let ja = justified_assignment(&p, &theta);
        let mut got: Vec<Lit> = ja.literals().collect();
        got.sort();
        let mut expect: Vec<Lit> =
            ["u", "-e", "d", "f", "c"].iter().map(|t| p.parse_lit(t).unwrap()).collect();
        expect.sort();
        assert_eq!(got, expect);
        assert!(justified_assignment(&p, &Assignment::new(p.num_vars())).is_empty());
    }

    #[test]
    fn p1_everything_justified_from_s() {
        let p = p1();
        let theta = assignment(&p, &["s", "a", "b"]);
        assert_eq!(justified_assignment(&p, &theta).len(), 3);
    }

    #[test]
    fn positive_loop_without_support_is_unfounded() {
        let mut b = Program::builder();
        b.founded("a").unwrap();
        b.founded("b").unwrap();
        b.rule("a", &["b"]).unwrap();
        b.rule("b", &["a"]).unwrap();
        let p = b.build();
        let mut st = state(&p, Mode::Copy);
        st.initial_scan().unwrap();
        st.propagate().unwrap();
        assert!(st.assignment().is_false(Var(0).pos()));
        assert!(st.assignment().is_false(Var(1).pos()));
        assert_eq!(st.unfounded_events(), 1);
    }

    #[test]
    fn p1_not_s_reaches_second_stable_model() {
        let p = p1();
        let mut st = state(&p, Mode::StandardSearch);
        st.initial_scan().unwrap();
        st.propagate().unwrap();
        st.decide(Var(2).neg());
        st.propagate().unwrap();
        let a = st.assignment();
        assert!(a.is_false(Var(0).pos()) && a.is_false(Var(1).pos()));
    }

    #[test]
    fn p1_a_without_s_conflicts() {
        let p = p1();
        let mut st = state(&p, Mode::Copy);
        st.initial_scan().unwrap();
        st.decide(Var(0).pos());
        st.decide(Var(2).neg());
        assert_eq!(st.propagate(), Err(Conflict::Unfounded(Var(0))));
    }

    #[test]
    fn standard_search_constraints_do_not_propagate_founded() {
        let p = p1().with_constraints([crate::program::Clause::new(vec![Var(0).pos()])]);
        let mut st = state(&p, Mode::StandardSearch);
        st.initial_scan().unwrap();
        st.unit_propagate().unwrap();
        assert!(!st.assignment().is_fixed(Var(0)));
        let mut st = state(&p, Mode::Copy);
        st.initial_scan().unwrap();
        st.unit_propagate().unwrap();
        assert!(st.assignment().is_true(Var(0).pos()));
    }
}
