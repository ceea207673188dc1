//! The copy transformation and the projection of its residuals back onto the
//! original program.
//!
//! Every founded `v` gets a fresh standard twin `v'` that the search may never
//! decide. The clauses `¬v' ∨ v` and `a' ∨ ¬f₁' ∨ … ∨ ¬snₘ` (one per rule)
//! make `v'` true exactly when `v` is justified, so the plain residual of the
//! transformed clause set tracks the justified residual program.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::program::{Assignment, Clause, Lit, Program, Rule, Var};
use crate::propagation::justified_assignment;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CopyOrigin {
    /// `¬v' ∨ v`
    Link(Var),
    /// Copy of the rule with this index.
    Rule(u32),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CopyClause {
    pub lits: Vec<Lit>,
    pub origin: CopyOrigin,
}

/// `copy(P)`. Copy variables are numbered after all original variables.
#[derive(Clone, Debug)]
pub struct CopyProgram {
    base: Program,
    copy_of: Vec<Option<Var>>,
    original_of: Vec<Var>,
    copy_clauses: Vec<CopyClause>,
}

impl CopyProgram {
    pub fn base(&self) -> &Program {
        &self.base
    }

    /// Original plus copy variables.
    pub fn num_vars(&self) -> usize {
        self.base.num_vars() + self.original_of.len()
    }

    pub fn num_copies(&self) -> usize {
        self.original_of.len()
    }

    pub fn is_copy(&self, v: Var) -> bool {
        v.index() >= self.base.num_vars()
    }

    pub fn copy_of(&self, v: Var) -> Option<Var> {
        self.copy_of.get(v.index()).copied().flatten()
    }

    /// The founded variable a copy variable stands for; identity otherwise.
    pub fn original(&self, v: Var) -> Var {
        if self.is_copy(v) {
            self.original_of[v.index() - self.base.num_vars()]
        } else {
            v
        }
    }

    pub fn copy_clauses(&self) -> &[CopyClause] {
        &self.copy_clauses
    }

    pub fn name(&self, v: Var) -> alloc::string::String {
        let mut s = alloc::string::String::from(self.base.name(self.original(v)));
        if self.is_copy(v) {
            s.push('\'');
        }
        s
    }
}

pub fn copy_transform(p: &Program) -> CopyProgram {
    let n = p.num_vars() as u32;
    let mut copy_of = vec![None; p.num_vars()];
    let mut original_of = Vec::new();
    for v in p.founded() {
        copy_of[v.index()] = Some(Var(n + original_of.len() as u32));
        original_of.push(v);
    }

    let mut copy_clauses = Vec::with_capacity(original_of.len() + p.rules().len());
    for &v in &original_of {
        let vc = copy_of[v.index()].unwrap();
        copy_clauses.push(CopyClause {
            lits: vec![vc.neg(), v.pos()],
            origin: CopyOrigin::Link(v),
        });
    }
    for (i, r) in p.rules().iter().enumerate() {
        let mut lits = Vec::with_capacity(r.body.len() + 1);
        lits.push(copy_of[r.head.index()].unwrap().pos());
        for &l in &r.body {
            if l.is_positive() && p.is_founded(l.var()) {
                lits.push(copy_of[l.var().index()].unwrap().neg());
            } else {
                lits.push(!l);
            }
        }
        copy_clauses.push(CopyClause { lits, origin: CopyOrigin::Rule(i as u32) });
    }

    CopyProgram { base: p.clone(), copy_of, original_of, copy_clauses }
}

/// A bare `(rules, constraints)` pair over the variables of some program.
/// Its variable set is whatever occurs in it.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Subprogram {
    pub rules: Vec<Rule>,
    pub constraints: Vec<Clause>,
}

impl Subprogram {
    pub fn is_empty(&self) -> bool {
        self.rules.is_empty() && self.constraints.is_empty()
    }

    /// Sorted bodies, clauses and lists, so that equality is structural.
    pub fn normalized(mut self) -> Subprogram {
        for r in &mut self.rules {
            r.body.sort();
        }
        for c in &mut self.constraints {
            c.lits.sort();
        }
        self.rules.sort();
        self.constraints.sort();
        self
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        let mut vs = BTreeSet::new();
        for r in &self.rules {
            vs.insert(r.head);
            vs.extend(r.body.iter().map(|l| l.var()));
        }
        for c in &self.constraints {
            vs.extend(c.lits.iter().map(|l| l.var()));
        }
        vs
    }

    /// Variable-disjoint pieces, each normalized, ordered by smallest member.
    /// An empty clause forms a piece of its own.
    pub fn components(&self) -> Vec<Subprogram> {
        let vars: Vec<Var> = self.vars().into_iter().collect();
        let pos = |v: Var| vars.binary_search(&v).unwrap();
        let mut uf = UnionFind::new(vars.len());
        for r in &self.rules {
            for l in &r.body {
                uf.union(pos(r.head), pos(l.var()));
            }
        }
        for c in &self.constraints {
            for w in c.lits.windows(2) {
                uf.union(pos(w[0].var()), pos(w[1].var()));
            }
        }
        let mut groups: alloc::collections::BTreeMap<usize, Subprogram> = Default::default();
        for r in &self.rules {
            groups.entry(uf.find(pos(r.head))).or_default().rules.push(r.clone());
        }
        let mut out = Vec::new();
        for c in &self.constraints {
            match c.lits.first() {
                Some(l) => groups.entry(uf.find(pos(l.var()))).or_default().constraints.push(c.clone()),
                None => out.push(Subprogram { rules: Vec::new(), constraints: vec![c.clone()] }),
            }
        }
        out.extend(groups.into_values().map(Subprogram::normalized));
        out.sort_by_key(|s| s.vars().into_iter().next());
        out
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// `P‖θ`: rules simplified by the justified part of `θ`, constraints by all of
/// `θ`, plus a unit constraint for each true founded variable that is not
/// justified. A rule whose head is false under the justified part becomes the
/// constraint `¬b₁ ∨ … ∨ ¬bₖ` over its remaining body.
pub fn justified_residual(p: &Program, theta: &Assignment) -> Subprogram {
    let j = justified_assignment(p, theta);
    let mut out = Subprogram::default();

    for r in p.rules() {
        if j.is_true(r.head.pos()) || r.body.iter().any(|&l| j.is_false(l)) {
            continue;
        }
        let body: Vec<Lit> = r.body.iter().copied().filter(|&l| !j.is_true(l)).collect();
        if j.is_false(r.head.pos()) {
            out.constraints.push(Clause::new(body.into_iter().map(|l| !l).collect()));
        } else {
            out.rules.push(Rule::new(r.head, body));
        }
    }
    for c in p.constraints() {
        if c.lits.iter().any(|&l| theta.is_true(l)) {
            continue;
        }
        out.constraints
            .push(Clause::new(c.lits.iter().copied().filter(|&l| !theta.is_false(l)).collect()));
    }
    for v in p.founded() {
        if theta.is_true(v.pos()) && !j.is_true(v.pos()) {
            out.constraints.push(Clause::new(vec![v.pos()]));
        }
    }
    out.normalized()
}

/// Value of a copy-clause literal under the justified part of `π`: a true
/// founded variable counts as true only once its copy is true.
fn justified_value(q: &CopyProgram, pi: &Assignment, l: Lit) -> Option<bool> {
    let v = l.var();
    if !q.is_copy(v) && q.base().is_founded(v) && pi.is_true(v.pos()) && !pi.is_true(q.copy_of(v).unwrap().pos()) {
        return None;
    }
    pi.lit_value(l)
}

/// `prj(Q, π)`: maps the residual of `copy(P)` under `π` back to a program over
/// the original variables. `π` ranges over original and copy variables and is
/// expected to be closed under both propagators.
pub fn prj(q: &CopyProgram, pi: &Assignment) -> Subprogram {
    let base = q.base();
    let mut out = Subprogram::default();

    for c in base.constraints() {
        if c.lits.iter().any(|&l| pi.is_true(l)) {
            continue;
        }
        out.constraints
            .push(Clause::new(c.lits.iter().copied().filter(|&l| !pi.is_false(l)).collect()));
    }
    for cc in q.copy_clauses() {
        let CopyOrigin::Rule(ri) = cc.origin else { continue };
        if cc.lits.iter().any(|&l| justified_value(q, pi, l) == Some(true)) {
            continue;
        }
        let head_lit = cc.lits[0];
        let rest: Vec<Lit> = cc.lits[1..]
            .iter()
            .copied()
            .filter(|&l| justified_value(q, pi, l) != Some(false))
            .map(|l| Lit::new(q.original(l.var()), l.is_positive()))
            .collect();
        if pi.is_false(head_lit) {
            out.constraints.push(Clause::new(rest));
        } else {
            let head = base.rules()[ri as usize].head;
            out.rules.push(Rule::new(head, rest.into_iter().map(|l| !l).collect()));
        }
    }
    for v in base.founded() {
        let vc = q.copy_of(v).unwrap();
        if pi.is_true(v.pos()) && !pi.is_fixed(vc) {
            out.constraints.push(Clause::new(vec![v.pos()]));
        }
    }
    out.normalized()
}

/// `prj` restricted to the residual clauses that mention `vars` (a component
/// of the residual of `copy(P)`).
pub fn prj_component(q: &CopyProgram, pi: &Assignment, vars: &BTreeSet<Var>) -> Subprogram {
    let base = q.base();
    let mut out = Subprogram::default();
    let touches = |lits: &[Lit]| {
        lits.iter().any(|&l| {
            let v = l.var();
            let via_copy = !q.is_copy(v) && base.is_founded(v) && vars.contains(&q.copy_of(v).unwrap());
            justified_value(q, pi, l).is_none() && (vars.contains(&v) || via_copy)
        })
    };

    for c in base.constraints() {
        if c.lits.iter().any(|&l| pi.is_true(l)) || !touches(&c.lits) {
            continue;
        }
        out.constraints
            .push(Clause::new(c.lits.iter().copied().filter(|&l| !pi.is_false(l)).collect()));
    }
    for cc in q.copy_clauses() {
        let CopyOrigin::Rule(ri) = cc.origin else { continue };
        if cc.lits.iter().any(|&l| justified_value(q, pi, l) == Some(true)) || !touches(&cc.lits) {
            continue;
        }
        let rest: Vec<Lit> = cc.lits[1..]
            .iter()
            .copied()
            .filter(|&l| justified_value(q, pi, l) != Some(false))
            .map(|l| Lit::new(q.original(l.var()), l.is_positive()))
            .collect();
        if pi.is_false(cc.lits[0]) {
            out.constraints.push(Clause::new(rest));
        } else {
            let head = base.rules()[ri as usize].head;
            out.rules.push(Rule::new(head, rest.into_iter().map(|l| !l).collect()));
        }
    }
    for v in base.founded() {
        let vc = q.copy_of(v).unwrap();
        if pi.is_true(v.pos()) && !pi.is_fixed(vc) && vars.contains(&vc) {
            out.constraints.push(Clause::new(vec![v.pos()]));
        }
    }
    out.normalized()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{example2, p1};

    #[test]
    fn copy_of_p1() {
        let p = p1();
        let q = copy_transform(&p);
        let (a, b, s) = (Var(0), Var(1), Var(2));
        let (ac, bc) = (q.copy_of(a).unwrap(), q.copy_of(b).unwrap());
        assert_eq!((ac, bc), (Var(3), Var(4)));
        let got: Vec<Vec<Lit>> = q.copy_clauses().iter().map(|c| c.lits.clone()).collect();
        let expect = vec![
            vec![ac.neg(), a.pos()],
            vec![bc.neg(), b.pos()],
            vec![ac.pos(), bc.neg()],
            vec![bc.pos(), ac.neg()],
            vec![ac.pos(), s.neg()],
        ];
        assert_eq!(got, expect);
        assert_eq!(q.copy_clauses().len(), p.rules().len() + 2);
        assert_eq!(q.name(ac), "a'");
    }

    #[test]
    fn negative_founded_literals_are_not_copied() {
        let mut b = Program::builder();
        b.founded("a").unwrap();
        b.founded("c").unwrap();
        b.rule("a", &["not c"]).unwrap();
        b.rule("c", &[]).unwrap();
        let q = copy_transform(&b.build());
        let ac = q.copy_of(Var(0)).unwrap();
        assert_eq!(q.copy_clauses()[2].lits, vec![ac.pos(), Var(1).pos()]);
    }

    #[test]
    fn no_founded_no_copies() {
        let mut b = Program::builder();
        b.standard("s").unwrap();
        b.clause(&["s"]).unwrap();
        let q = copy_transform(&b.build());
        assert_eq!(q.num_copies(), 0);
        assert!(q.copy_clauses().is_empty());
    }

    #[test]
    fn example2_justified_residual() {
        let p = example2();
        let theta = crate::fixtures::assignment(&p, &["a", "b", "d", "u", "-e", "c", "f"]);
        let jr = justified_residual(&p, &theta);
        let expect = crate::fixtures::subprogram(
            &p,
            &[("a", &["b"]), ("b", &["a"]), ("a", &["s"]), ("b", &["t"])],
            &[&["-s", "-t"], &["a"], &["b"]],
        );
        assert_eq!(jr, expect);
        assert_eq!(jr.components().len(), 1);
    }

    #[test]
    fn prj_on_empty_assignment_without_rules_keeps_constraints() {
        let mut b = Program::builder();
        b.standard("x").unwrap();
        b.standard("y").unwrap();
        b.clause(&["x", "-y"]).unwrap();
        let p = b.build();
        let q = copy_transform(&p);
        let got = prj(&q, &Assignment::new(q.num_vars()));
        assert!(got.rules.is_empty());
        assert_eq!(got.constraints, p.constraints().to_vec());
    }
}
