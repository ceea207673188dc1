//! Ground ASP-SAT programs: variables split into founded and standard
//! partitions, rules defining founded heads, and disjunctive constraints.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Not;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::ProgramError;

/// Dense variable identifier, assigned in declaration order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Var(pub u32);

impl Var {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn pos(self) -> Lit {
        Lit::new(self, true)
    }

    #[inline]
    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> Lit {
        Lit::new(self, false)
    }
}

/// A variable together with a polarity, packed as `2 * var + negated`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lit(u32);

impl Lit {
    #[inline]
    pub fn new(var: Var, positive: bool) -> Lit {
        Lit(var.0 << 1 | (!positive) as u32)
    }

    #[inline]
    pub fn from_code(code: u32) -> Lit {
        Lit(code)
    }

    #[inline]
    pub fn code(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn var(self) -> Var {
        Var(self.0 >> 1)
    }

    #[inline]
    pub fn is_positive(self) -> bool {
        self.0 & 1 == 0
    }

    #[inline]
    pub fn negate(self) -> Lit {
        Lit(self.0 ^ 1)
    }
}

impl Not for Lit {
    type Output = Lit;

    fn not(self) -> Lit {
        self.negate()
    }
}

impl fmt::Debug for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_positive() {
            write!(f, "+{}", self.var().0)
        } else {
            write!(f, "-{}", self.var().0)
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VarKind {
    /// Must be derived by a rule to be true.
    Founded,
    /// Free choice; carries a probability in weighted counting.
    Standard,
}

/// `head <- body`. The head is always a founded variable.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Rule {
    pub head: Var,
    pub body: Vec<Lit>,
}

impl Rule {
    pub fn new(head: Var, body: Vec<Lit>) -> Rule {
        Rule { head, body }
    }

    /// The clause `head ∨ ¬b₁ ∨ … ∨ cₘ` equivalent to the rule.
    pub fn clause_form(&self) -> Vec<Lit> {
        let mut lits = Vec::with_capacity(self.body.len() + 1);
        lits.push(self.head.pos());
        lits.extend(self.body.iter().map(|&l| !l));
        lits
    }
}

/// Disjunctive clause. Nonempty and tautology-free when it comes out of a
/// [`ProgramBuilder`]; residuals may shrink it to empty.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Clause {
    pub lits: Vec<Lit>,
}

impl Clause {
    pub fn new(lits: Vec<Lit>) -> Clause {
        Clause { lits }
    }

    pub fn is_empty(&self) -> bool {
        self.lits.is_empty()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Warning {
    DuplicateRule(String),
    DuplicateConstraint,
    /// A founded variable without rules; it is false in every stable model.
    NoRules(String),
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::DuplicateRule(h) => write!(f, "duplicate rule for `{h}` dropped"),
            Warning::DuplicateConstraint => write!(f, "duplicate constraint dropped"),
            Warning::NoRules(v) => write!(f, "founded variable `{v}` has no rules and is always false"),
        }
    }
}

/// A validated ground program. Immutable once built.
#[derive(Clone, Debug)]
pub struct Program {
    names: Vec<String>,
    kinds: Vec<VarKind>,
    index: BTreeMap<String, Var>,
    rules: Vec<Rule>,
    constraints: Vec<Clause>,
    weights: Vec<Option<BigRational>>,
    queries: Vec<Lit>,
    evidence: Vec<Lit>,
    warnings: Vec<Warning>,
}

impl Program {
    pub fn builder() -> ProgramBuilder {
        ProgramBuilder::default()
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        (0..self.names.len() as u32).map(Var)
    }

    pub fn kind(&self, v: Var) -> VarKind {
        self.kinds[v.index()]
    }

    pub fn is_founded(&self, v: Var) -> bool {
        self.kinds[v.index()] == VarKind::Founded
    }

    pub fn is_standard(&self, v: Var) -> bool {
        self.kinds[v.index()] == VarKind::Standard
    }

    pub fn founded(&self) -> impl Iterator<Item = Var> + '_ {
        self.vars().filter(move |&v| self.is_founded(v))
    }

    pub fn standard(&self) -> impl Iterator<Item = Var> + '_ {
        self.vars().filter(move |&v| self.is_standard(v))
    }

    pub fn name(&self, v: Var) -> &str {
        &self.names[v.index()]
    }

    pub fn lookup(&self, name: &str) -> Option<Var> {
        self.index.get(name).copied()
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn constraints(&self) -> &[Clause] {
        &self.constraints
    }

    pub fn weight(&self, v: Var) -> Option<&BigRational> {
        self.weights[v.index()].as_ref()
    }

    pub fn queries(&self) -> &[Lit] {
        &self.queries
    }

    pub fn evidence(&self) -> &[Lit] {
        &self.evidence
    }

    pub fn warnings(&self) -> &[Warning] {
        &self.warnings
    }

    /// True iff the body holds only positive founded literals.
    pub fn is_positive_rule(&self, rule: &Rule) -> bool {
        rule.body
            .iter()
            .all(|l| l.is_positive() && self.is_founded(l.var()))
    }

    /// Parses `x`, `-x` or `not x` against this program's variables.
    pub fn parse_lit(&self, text: &str) -> Option<Lit> {
        let text = text.trim();
        let (positive, name) = if let Some(rest) = text.strip_prefix('-') {
            (false, rest.trim())
        } else if let Some(rest) = text.strip_prefix("not ") {
            (false, rest.trim())
        } else {
            (true, text)
        };
        self.lookup(name).map(|v| Lit::new(v, positive))
    }

    pub fn lit_name(&self, lit: Lit) -> String {
        if lit.is_positive() {
            self.name(lit.var()).to_string()
        } else {
            let mut s = String::from("-");
            s.push_str(self.name(lit.var()));
            s
        }
    }

    /// A copy of this program with query and evidence lists replaced.
    pub fn with_task(&self, queries: Vec<Lit>, evidence: Vec<Lit>) -> Program {
        let mut p = self.clone();
        p.queries = queries;
        p.evidence = evidence;
        p
    }

    /// A copy of this program with extra constraints appended.
    pub fn with_constraints(&self, extra: impl IntoIterator<Item = Clause>) -> Program {
        let mut p = self.clone();
        p.constraints.extend(extra);
        p
    }

    /// A copy of this program in which every standard variable carries the
    /// given weight.
    pub fn with_uniform_weight(&self, w: BigRational) -> Program {
        let mut p = self.clone();
        for v in self.standard() {
            p.weights[v.index()] = Some(w.clone());
        }
        p
    }
}

/// Incremental, validating constructor for [`Program`].
#[derive(Default, Debug)]
pub struct ProgramBuilder {
    names: Vec<String>,
    kinds: Vec<VarKind>,
    index: BTreeMap<String, Var>,
    rules: Vec<Rule>,
    constraints: Vec<Clause>,
    weights: BTreeMap<Var, BigRational>,
    queries: Vec<Lit>,
    evidence: Vec<Lit>,
}

impl ProgramBuilder {
    fn declare(&mut self, name: &str, kind: VarKind) -> Result<Var, ProgramError> {
        if self.index.contains_key(name) {
            return Err(ProgramError::DuplicateDeclaration(name.to_string()));
        }
        let v = Var(self.names.len() as u32);
        self.names.push(name.to_string());
        self.kinds.push(kind);
        self.index.insert(name.to_string(), v);
        Ok(v)
    }

    pub fn standard(&mut self, name: &str) -> Result<Var, ProgramError> {
        self.declare(name, VarKind::Standard)
    }

    pub fn founded(&mut self, name: &str) -> Result<Var, ProgramError> {
        self.declare(name, VarKind::Founded)
    }

    pub fn var(&self, name: &str) -> Result<Var, ProgramError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| ProgramError::Undeclared(name.to_string()))
    }

    /// Resolves `x`, `-x` or `not x`.
    pub fn lit(&self, text: &str) -> Result<Lit, ProgramError> {
        let text = text.trim();
        if let Some(rest) = text.strip_prefix('-') {
            Ok(self.var(rest.trim())?.neg())
        } else if let Some(rest) = text.strip_prefix("not ") {
            Ok(self.var(rest.trim())?.neg())
        } else {
            Ok(self.var(text)?.pos())
        }
    }

    fn check_var(&self, v: Var) -> Result<(), ProgramError> {
        if v.index() < self.names.len() {
            Ok(())
        } else {
            Err(ProgramError::Undeclared(alloc::format!("#{}", v.0)))
        }
    }

    pub fn add_rule(&mut self, head: Var, body: Vec<Lit>) -> Result<(), ProgramError> {
        self.check_var(head)?;
        for l in &body {
            self.check_var(l.var())?;
        }
        if self.kinds[head.index()] != VarKind::Founded {
            return Err(ProgramError::HeadNotFounded(self.names[head.index()].clone()));
        }
        let mut body = body;
        body.sort();
        body.dedup();
        self.rules.push(Rule { head, body });
        Ok(())
    }

    /// `rule("a", &["b", "not c"])`.
    pub fn rule(&mut self, head: &str, body: &[&str]) -> Result<(), ProgramError> {
        let head = self.var(head)?;
        let body = body.iter().map(|t| self.lit(t)).collect::<Result<Vec<_>, _>>()?;
        self.add_rule(head, body)
    }

    pub fn add_clause(&mut self, lits: Vec<Lit>) -> Result<(), ProgramError> {
        for l in &lits {
            self.check_var(l.var())?;
        }
        if lits.is_empty() {
            return Err(ProgramError::EmptyClause);
        }
        let mut lits = lits;
        lits.sort();
        lits.dedup();
        if lits.windows(2).any(|w| w[0].var() == w[1].var()) {
            return Err(ProgramError::TautologicalClause);
        }
        self.constraints.push(Clause { lits });
        Ok(())
    }

    /// Disjunctive clause over literal texts, e.g. `clause(&["-s", "-t"])`.
    pub fn clause(&mut self, lits: &[&str]) -> Result<(), ProgramError> {
        let lits = lits.iter().map(|t| self.lit(t)).collect::<Result<Vec<_>, _>>()?;
        self.add_clause(lits)
    }

    pub fn set_weight(&mut self, v: Var, p: BigRational) -> Result<(), ProgramError> {
        self.check_var(v)?;
        let name = self.names[v.index()].clone();
        if self.kinds[v.index()] != VarKind::Standard {
            return Err(ProgramError::WeightOnFounded(name));
        }
        if p < BigRational::zero() || p > BigRational::one() {
            return Err(ProgramError::ProbabilityOutOfRange(name));
        }
        if self.weights.insert(v, p).is_some() {
            return Err(ProgramError::DuplicateWeight(name));
        }
        Ok(())
    }

    pub fn prob(&mut self, name: &str, p: BigRational) -> Result<(), ProgramError> {
        let v = self.var(name)?;
        self.set_weight(v, p)
    }

    pub fn add_query(&mut self, l: Lit) -> Result<(), ProgramError> {
        self.check_var(l.var())?;
        self.queries.push(l);
        Ok(())
    }

    pub fn add_evidence(&mut self, l: Lit) -> Result<(), ProgramError> {
        self.check_var(l.var())?;
        self.evidence.push(l);
        Ok(())
    }

    pub fn query(&mut self, text: &str) -> Result<(), ProgramError> {
        let l = self.lit(text)?;
        self.add_query(l)
    }

    pub fn evidence(&mut self, text: &str) -> Result<(), ProgramError> {
        let l = self.lit(text)?;
        self.add_evidence(l)
    }

    pub fn build(self) -> Program {
        let mut warnings = Vec::new();

        let mut rules = Vec::with_capacity(self.rules.len());
        let mut seen = alloc::collections::BTreeSet::new();
        for r in self.rules {
            if seen.insert(r.clone()) {
                rules.push(r);
            } else {
                warnings.push(Warning::DuplicateRule(self.names[r.head.index()].clone()));
            }
        }
        let mut constraints = Vec::with_capacity(self.constraints.len());
        let mut seen = alloc::collections::BTreeSet::new();
        for c in self.constraints {
            if seen.insert(c.clone()) {
                constraints.push(c);
            } else {
                warnings.push(Warning::DuplicateConstraint);
            }
        }

        let mut has_rule = vec![false; self.names.len()];
        for r in &rules {
            has_rule[r.head.index()] = true;
        }
        for (i, kind) in self.kinds.iter().enumerate() {
            if *kind == VarKind::Founded && !has_rule[i] {
                warnings.push(Warning::NoRules(self.names[i].clone()));
            }
        }

        let mut weights = vec![None; self.names.len()];
        for (v, w) in self.weights {
            weights[v.index()] = Some(w);
        }

        Program {
            names: self.names,
            kinds: self.kinds,
            index: self.index,
            rules,
            constraints,
            weights,
            queries: self.queries,
            evidence: self.evidence,
            warnings,
        }
    }
}

/// Reason a literal entered an [`Assignment`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Reason {
    Assumption,
    Decision,
    /// Unit propagation on a clause of the propagation instance.
    Clause(u32),
    /// Unit propagation on the clause form of a rule.
    Rule(u32),
    /// Member of an unfounded set.
    Unfounded,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TrailEntry {
    pub lit: Lit,
    pub level: u32,
    pub reason: Reason,
}

/// The literals `{v, ¬v}` were both requested.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Inconsistent(pub Var);

/// Partial truth assignment with a trail and decision levels.
#[derive(Clone, Debug, Default)]
pub struct Assignment {
    values: Vec<Option<bool>>,
    trail: Vec<TrailEntry>,
    level_starts: Vec<usize>,
}

impl Assignment {
    pub fn new(num_vars: usize) -> Assignment {
        Assignment {
            values: vec![None; num_vars],
            trail: Vec::new(),
            level_starts: Vec::new(),
        }
    }

    /// Builds a level-0 assignment; rejects complementary literals.
    pub fn from_lits(num_vars: usize, lits: &[Lit]) -> Result<Assignment, Inconsistent> {
        let mut a = Assignment::new(num_vars);
        for &l in lits {
            match a.lit_value(l) {
                Some(true) => {}
                Some(false) => return Err(Inconsistent(l.var())),
                None => a.assign(l, Reason::Assumption),
            }
        }
        Ok(a)
    }

    pub fn num_vars(&self) -> usize {
        self.values.len()
    }

    #[inline]
    pub fn value(&self, v: Var) -> Option<bool> {
        self.values[v.index()]
    }

    #[inline]
    pub fn lit_value(&self, l: Lit) -> Option<bool> {
        self.values[l.var().index()].map(|b| b == l.is_positive())
    }

    #[inline]
    pub fn is_true(&self, l: Lit) -> bool {
        self.lit_value(l) == Some(true)
    }

    #[inline]
    pub fn is_false(&self, l: Lit) -> bool {
        self.lit_value(l) == Some(false)
    }

    #[inline]
    pub fn is_fixed(&self, v: Var) -> bool {
        self.values[v.index()].is_some()
    }

    pub fn decision_level(&self) -> u32 {
        self.level_starts.len() as u32
    }

    /// Assigns an unfixed variable at the current level.
    pub fn assign(&mut self, l: Lit, reason: Reason) {
        debug_assert!(self.values[l.var().index()].is_none());
        self.values[l.var().index()] = Some(l.is_positive());
        let level = self.decision_level();
        self.trail.push(TrailEntry { lit: l, level, reason });
    }

    /// Opens a new decision level and assigns `l` as its decision.
    pub fn decide(&mut self, l: Lit) {
        self.level_starts.push(self.trail.len());
        self.assign(l, Reason::Decision);
    }

    /// Undoes every level above `level`.
    pub fn backtrack_to(&mut self, level: u32) {
        while self.decision_level() > level {
            let start = self.level_starts.pop().unwrap();
            for e in self.trail.drain(start..) {
                self.values[e.lit.var().index()] = None;
            }
        }
    }

    pub fn trail(&self) -> &[TrailEntry] {
        &self.trail
    }

    pub fn literals(&self) -> impl Iterator<Item = Lit> + '_ {
        self.trail.iter().map(|e| e.lit)
    }

    pub fn len(&self) -> usize {
        self.trail.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trail.is_empty()
    }

    /// The literals on variables `< n`, as a fresh level-0 assignment over `n`
    /// variables.
    pub fn restrict_to(&self, n: usize) -> Assignment {
        let mut a = Assignment::new(n);
        for l in self.literals() {
            if l.var().index() < n {
                a.assign(l, Reason::Assumption);
            }
        }
        a
    }
}

/// Signal that a clause lost all of its literals.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Falsified {
    pub clause: usize,
}

/// `F|θ`: drops satisfied clauses and deletes falsified literals.
pub fn residual_formula(clauses: &[Clause], theta: &Assignment) -> Result<Vec<Clause>, Falsified> {
    let mut out = Vec::with_capacity(clauses.len());
    for (i, c) in clauses.iter().enumerate() {
        if c.lits.iter().any(|&l| theta.is_true(l)) {
            continue;
        }
        let lits: Vec<Lit> = c.lits.iter().copied().filter(|&l| !theta.is_false(l)).collect();
        if lits.is_empty() {
            return Err(Falsified { clause: i });
        }
        out.push(Clause { lits });
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EdgeSign {
    Positive,
    Negative,
}

/// Dependency edges `body var -> head var` between founded variables.
#[derive(Clone, Debug, Default)]
pub struct DependencyGraph {
    pub edges: Vec<(Var, Var, EdgeSign)>,
    succ: Vec<Vec<(Var, EdgeSign)>>,
}

impl DependencyGraph {
    pub fn successors(&self, v: Var) -> &[(Var, EdgeSign)] {
        &self.succ[v.index()]
    }

    pub fn has_edge(&self, from: Var, to: Var, sign: EdgeSign) -> bool {
        self.succ[from.index()].contains(&(to, sign))
    }
}

pub fn dependency_graph(p: &Program) -> DependencyGraph {
    let mut succ: Vec<Vec<(Var, EdgeSign)>> = vec![Vec::new(); p.num_vars()];
    let mut edges = Vec::new();
    for r in p.rules() {
        for l in &r.body {
            if !p.is_founded(l.var()) {
                continue;
            }
            let sign = if l.is_positive() { EdgeSign::Positive } else { EdgeSign::Negative };
            if !succ[l.var().index()].contains(&(r.head, sign)) {
                succ[l.var().index()].push((r.head, sign));
                edges.push((l.var(), r.head, sign));
            }
        }
    }
    DependencyGraph { edges, succ }
}

/// Level assignment witnessing stratification.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LevelMap {
    pub level: BTreeMap<Var, u32>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Stratification {
    Stratified(LevelMap),
    /// Cycle `v₀ → v₁ → … → v₀` (closing edge implicit) through a negative edge.
    NotStratified { cycle: Vec<Var> },
}

impl Stratification {
    pub fn is_stratified(&self) -> bool {
        matches!(self, Stratification::Stratified(_))
    }
}

pub fn check_stratified(p: &Program) -> Stratification {
    let g = dependency_graph(p);
    let n = p.num_vars();
    let comp = strongly_connected(n, &g);

    for &(from, to, sign) in &g.edges {
        if sign == EdgeSign::Negative && comp[from.index()] == comp[to.index()] {
            // path to -> ... -> from inside the component, closed by the negative edge.
            let mut cycle = vec![from];
            cycle.extend(path_within(&g, &comp, to, from));
            cycle.pop();
            return Stratification::NotStratified { cycle };
        }
    }

    // Longest-path levels over the condensation; components are numbered in
    // reverse topological order by Tarjan.
    let num_comps = comp.iter().copied().max().map_or(0, |m| m + 1);
    let mut comp_level = vec![0u32; num_comps];
    let mut members: Vec<Vec<Var>> = vec![Vec::new(); num_comps];
    for v in p.founded() {
        members[comp[v.index()]].push(v);
    }
    for c in (0..num_comps).rev() {
        for &v in &members[c] {
            for &(w, sign) in g.successors(v) {
                let cw = comp[w.index()];
                if cw == c {
                    continue;
                }
                let need = comp_level[c] + u32::from(sign == EdgeSign::Negative);
                if comp_level[cw] < need {
                    comp_level[cw] = need;
                }
            }
        }
    }
    let level = p.founded().map(|v| (v, comp_level[comp[v.index()]])).collect();
    Stratification::Stratified(LevelMap { level })
}

/// Tarjan's algorithm; returns component ids in reverse topological order
/// (sinks first).
fn strongly_connected(n: usize, g: &DependencyGraph) -> Vec<usize> {
    const NONE: usize = usize::MAX;
    let mut index = vec![NONE; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comp = vec![NONE; n];
    let mut next_index = 0;
    let mut next_comp = 0;

    for root in 0..n {
        if index[root] != NONE {
            continue;
        }
        // explicit DFS: (vertex, next successor position)
        let mut work: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut pos)) = work.last_mut() {
            let succ = &g.succ[v];
            if *pos < succ.len() {
                let w = succ[*pos].0.index();
                *pos += 1;
                if index[w] == NONE {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    work.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                work.pop();
                if let Some(&(parent, _)) = work.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp[w] = next_comp;
                        if w == v {
                            break;
                        }
                    }
                    next_comp += 1;
                }
            }
        }
    }
    comp
}

/// BFS path `from -> ... -> to` using only vertices of `from`'s component.
fn path_within(g: &DependencyGraph, comp: &[usize], from: Var, to: Var) -> Vec<Var> {
    let c = comp[from.index()];
    let mut prev: BTreeMap<Var, Var> = BTreeMap::new();
    let mut queue = alloc::collections::VecDeque::new();
    queue.push_back(from);
    prev.insert(from, from);
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for &(w, _) in g.successors(v) {
            if comp[w.index()] == c && !prev.contains_key(&w) {
                prev.insert(w, v);
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = prev[&cur];
        path.push(cur);
    }
    path.reverse();
    path
}
