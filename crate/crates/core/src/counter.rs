//! DPLL-style stable-model counting with cube detection, component caching
//! and dynamic decomposition.
//!
//! Two search modes are supported. [`Mode::StandardSearch`] branches on
//! standard variables only and needs a stratified program; constraints that
//! mention founded variables are checked but never propagate. [`Mode::Copy`]
//! runs on `copy(P)` and may branch on any original variable; the residual of
//! the copied clause set then stands in for the justified residual program,
//! so cubes, cache keys and components all come from plain residuals.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::CountError;
use crate::program::{check_stratified, Assignment, Lit, Program, Var};
use crate::propagation::{Instance, PropagationState, TraceEvent, VarClass};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Mode {
    /// Branch on standard variables only; requires stratification.
    StandardSearch,
    /// Branch on any original variable of `copy(P)`.
    #[default]
    Copy,
}

#[derive(Clone, Debug)]
pub struct CountOptions {
    pub cache: bool,
    pub decomposition: bool,
    /// Also compute the weighted count.
    pub weighted: bool,
    /// Rank per original variable; the decidable variable of lowest rank in a
    /// component is branched on first. `None` uses the occurrence heuristic.
    pub decision_priority: Option<Vec<u32>>,
    /// Approximate cache size in bytes; least recently used entries are
    /// evicted beyond it.
    pub cache_budget: Option<usize>,
    /// Keep cache entries between calls to [`Counter::count`].
    pub keep_cache: bool,
    pub trace: bool,
}

impl Default for CountOptions {
    fn default() -> CountOptions {
        CountOptions {
            cache: true,
            decomposition: true,
            weighted: false,
            decision_priority: None,
            cache_budget: None,
            keep_cache: false,
            trace: false,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    /// D
    pub decisions: u64,
    pub backtracks: u64,
    pub backtrack_level_sum: u64,
    /// L: unfounded-set detections that fixed literals or conflicted.
    pub unfounded_events: u64,
    pub cache_hits: u64,
    pub components: u64,
}

impl Stats {
    /// A: mean decision level of backtracks (conflict or satisfaction).
    pub fn average_backtrack_level(&self) -> Option<f64> {
        (self.backtracks > 0).then(|| self.backtrack_level_sum as f64 / self.backtracks as f64)
    }
}

#[derive(Clone, Debug)]
pub struct CountResult {
    pub count: BigUint,
    pub weight: Option<BigRational>,
    pub stats: Stats,
    pub trace: Vec<TraceEvent>,
    /// Standard variables without a probability; weighted as 1/2.
    pub defaulted_weights: Vec<Var>,
}

/// Count and (optionally) weight of a residual component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheEntry {
    pub count: BigUint,
    pub weight: Option<BigRational>,
}

impl CacheEntry {
    fn zero(weighted: bool) -> CacheEntry {
        CacheEntry { count: BigUint::zero(), weight: weighted.then(BigRational::zero) }
    }

    fn one(weighted: bool) -> CacheEntry {
        CacheEntry { count: BigUint::one(), weight: weighted.then(BigRational::one) }
    }

    fn mul(&mut self, other: &CacheEntry) {
        self.count *= &other.count;
        if let (Some(w), Some(o)) = (&mut self.weight, &other.weight) {
            *w *= o;
        }
    }

    fn add(&mut self, other: &CacheEntry) {
        self.count += &other.count;
        if let (Some(w), Some(o)) = (&mut self.weight, &other.weight) {
            *w += o;
        }
    }

    fn approx_bytes(&self) -> usize {
        64 + (self.count.bits() as usize) / 8
            + self.weight.as_ref().map_or(0, |w| (w.numer().bits() + w.denom().bits()) as usize / 8)
    }
}

struct Slot {
    entry: CacheEntry,
    tick: u64,
}

/// Residual-keyed component cache with optional LRU eviction.
#[derive(Default)]
pub struct ComponentCache {
    map: BTreeMap<Vec<u32>, Slot>,
    lru: BTreeMap<u64, Vec<u32>>,
    tick: u64,
    bytes: usize,
    budget: Option<usize>,
}

impl ComponentCache {
    pub fn new(budget: Option<usize>) -> ComponentCache {
        ComponentCache { budget, ..Default::default() }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn clear(&mut self) {
        self.map.clear();
        self.lru.clear();
        self.bytes = 0;
    }

    pub fn lookup(&mut self, key: &[u32]) -> Option<CacheEntry> {
        self.tick += 1;
        let tick = self.tick;
        let slot = self.map.get_mut(key)?;
        let old = core::mem::replace(&mut slot.tick, tick);
        let k = self.lru.remove(&old).unwrap();
        self.lru.insert(tick, k);
        Some(slot.entry.clone())
    }

    pub fn store(&mut self, key: Vec<u32>, entry: CacheEntry) {
        if self.map.contains_key(&key) {
            return;
        }
        self.tick += 1;
        self.bytes += key.len() * 4 + entry.approx_bytes();
        self.lru.insert(self.tick, key.clone());
        self.map.insert(key, Slot { entry, tick: self.tick });
        if let Some(budget) = self.budget {
            while self.bytes > budget {
                let Some((_, k)) = self.lru.pop_first() else { break };
                let slot = self.map.remove(&k).unwrap();
                self.bytes -= k.len() * 4 + slot.entry.approx_bytes();
            }
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&[u32], &CacheEntry)> {
        self.map.iter().map(|(k, s)| (&k[..], &s.entry))
    }
}

/// A variable-disjoint piece of the residual program.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Unfixed variables, ascending.
    pub vars: Vec<Var>,
    /// Canonical serialization: variables, then sorted residual clauses and
    /// rules. Equal keys mean identical residuals.
    pub key: Vec<u32>,
    occurrences: Vec<u32>,
}

const TAG_CLAUSE: u32 = u32::MAX - 2;
const TAG_RULE: u32 = u32::MAX - 1;
const NO_HEAD: u32 = u32::MAX;

/// Splits the residual restricted to `scope` into components. Returns them
/// together with the unfixed variables of `scope` that occur in no residual
/// clause or rule.
pub fn find_components(state: &PropagationState, scope: &[Var], decompose: bool) -> (Vec<Component>, Vec<Var>) {
    let inst = state.instance();
    let a = state.assignment();
    let n = inst.num_vars();

    let mut pos = vec![usize::MAX; n];
    let mut live: Vec<Var> = Vec::new();
    for &v in scope {
        if !a.is_fixed(v) {
            pos[v.index()] = live.len();
            live.push(v);
        }
    }
    let mut uf = crate::transform::UnionFind::new(live.len());
    let mut in_residual = vec![false; live.len()];
    let mut occurrences = vec![0u32; live.len()];

    // (owner position, serialized record)
    let mut records: Vec<(usize, Vec<u32>)> = Vec::new();
    let mut seen_clause = BTreeMap::new();
    let mut seen_rule = BTreeMap::new();

    for &v in &live {
        for l in [v.pos(), v.neg()] {
            for &ci in &inst.clause_occ[l.code() as usize] {
                if seen_clause.insert(ci, ()).is_some() {
                    continue;
                }
                let lits = &inst.clauses[ci as usize].lits;
                if let Some(rec) = residual_record(a, lits, TAG_CLAUSE, None) {
                    let owner = link(&rec, &pos, &mut uf, &mut in_residual, &mut occurrences);
                    records.push((owner, rec));
                }
            }
            for &ri in &inst.rule_occ[l.code() as usize] {
                if seen_rule.insert(ri, ()).is_some() {
                    continue;
                }
                let head = inst.rules[ri as usize].head;
                let lits = &inst.rule_lits[ri as usize];
                if let Some(rec) = residual_record(a, lits, TAG_RULE, Some(head)) {
                    let owner = link(&rec, &pos, &mut uf, &mut in_residual, &mut occurrences);
                    records.push((owner, rec));
                }
            }
        }
    }

    let mut free = Vec::new();
    let mut groups: BTreeMap<usize, (Vec<usize>, Vec<Vec<u32>>)> = BTreeMap::new();
    for (i, &v) in live.iter().enumerate() {
        if !in_residual[i] {
            free.push(v);
            continue;
        }
        let root = if decompose { uf.find(i) } else { 0 };
        groups.entry(root).or_default().0.push(i);
    }
    for (owner, rec) in records {
        let root = if decompose { uf.find(owner) } else { 0 };
        groups.get_mut(&root).expect("record without variables").1.push(rec);
    }

    let comps = groups
        .into_values()
        .map(|(members, mut recs)| {
            recs.sort();
            let vars: Vec<Var> = members.iter().map(|&i| live[i]).collect();
            let mut key = Vec::with_capacity(1 + vars.len() + recs.iter().map(Vec::len).sum::<usize>());
            key.push(vars.len() as u32);
            key.extend(vars.iter().map(|v| v.0));
            for r in recs {
                key.extend(r);
            }
            Component { occurrences: members.iter().map(|&i| occurrences[i]).collect(), vars, key }
        })
        .collect();
    (comps, free)
}

/// `[tag, head-or-marker, len, sorted unfixed literal codes]`, or `None` for a
/// satisfied clause.
fn residual_record(a: &Assignment, lits: &[Lit], tag: u32, head: Option<Var>) -> Option<Vec<u32>> {
    let mut rest = Vec::with_capacity(lits.len());
    for &l in lits {
        match a.lit_value(l) {
            Some(true) => return None,
            Some(false) => {}
            None => rest.push(l.code()),
        }
    }
    rest.sort_unstable();
    let marker = match head {
        Some(h) if !a.is_fixed(h) => h.0,
        _ => NO_HEAD,
    };
    let mut rec = Vec::with_capacity(rest.len() + 3);
    rec.push(tag);
    rec.push(marker);
    rec.push(rest.len() as u32);
    rec.extend(rest);
    Some(rec)
}

fn link(
    rec: &[u32],
    pos: &[usize],
    uf: &mut crate::transform::UnionFind,
    in_residual: &mut [bool],
    occurrences: &mut [u32],
) -> usize {
    let lits = &rec[3..];
    let mut first = usize::MAX;
    for &code in lits {
        let p = pos[Lit::from_code(code).var().index()];
        debug_assert!(p != usize::MAX, "residual clause leaves the scope");
        in_residual[p] = true;
        occurrences[p] += 1;
        if first == usize::MAX {
            first = p;
        } else {
            uf.union(first, p);
        }
    }
    first
}

/// Solutions of a clause set `F` below `θ` given `count(F|θ)`:
/// `2^(|vars(F)| − |vars(θ)| − |vars(F|θ)|) · count(F|θ)`.
pub fn subtree_count(formula: &[crate::program::Clause], theta: &Assignment, residual_count: &BigUint) -> BigUint {
    use alloc::collections::BTreeSet;
    let vars_f: BTreeSet<Var> = formula.iter().flat_map(|c| c.lits.iter().map(|l| l.var())).collect();
    let vars_theta = theta.literals().filter(|l| vars_f.contains(&l.var())).count();
    let vars_res: BTreeSet<Var> = crate::program::residual_formula(formula, theta)
        .map(|r| r.iter().flat_map(|c| c.lits.iter().map(|l| l.var())).collect())
        .unwrap_or_default();
    let free = vars_f.len() - vars_theta - vars_res.len();
    (BigUint::one() << free) * residual_count
}

pub struct Counter {
    program: Program,
    mode: Mode,
    options: CountOptions,
    cache: ComponentCache,
}

impl Counter {
    pub fn new(p: &Program, mode: Mode, options: CountOptions) -> Result<Counter, CountError> {
        if mode == Mode::StandardSearch && !check_stratified(p).is_stratified() {
            return Err(CountError::UnsupportedMode);
        }
        let cache = ComponentCache::new(options.cache_budget);
        Ok(Counter { program: p.clone(), mode, options, cache })
    }

    pub fn program(&self) -> &Program {
        &self.program
    }

    pub fn cache(&self) -> &ComponentCache {
        &self.cache
    }

    /// Stable models (and their weight) that extend `assumptions` and satisfy
    /// the program's evidence.
    pub fn count(&mut self, assumptions: &[Lit]) -> Result<CountResult, CountError> {
        let p = &self.program;
        Assignment::from_lits(p.num_vars(), assumptions)
            .map_err(|e| CountError::InconsistentAssumptions(e.0 .0))?;
        if !self.options.keep_cache {
            self.cache.clear();
        }

        let mut units: Vec<Lit> = p.evidence().to_vec();
        let mut fixed: Vec<Lit> = Vec::new();
        for &l in assumptions {
            if self.mode == Mode::StandardSearch && p.is_founded(l.var()) {
                units.push(l);
            } else {
                fixed.push(l);
            }
        }
        let inst = Instance::new(p, self.mode, &units);
        let defaulted_weights = if self.options.weighted { inst.defaulted_weights.clone() } else { Vec::new() };
        let mut state = PropagationState::new(inst);
        if self.options.trace {
            state.enable_trace();
        }

        let weighted = self.options.weighted;
        let mut search = Search {
            state,
            options: &self.options,
            cache: &mut self.cache,
            stats: Stats::default(),
        };

        let consistent = fixed.iter().all(|&l| search.state.assume(l));
        let root_ok = consistent && search.state.initial_scan().is_ok() && search.state.propagate().is_ok();
        let value = if root_ok {
            let mut v = search.weight_since(0);
            let all: Vec<Var> = (0..search.state.instance().num_vars() as u32).map(Var).collect();
            let rest = search.solve_scope(&all)?;
            v.mul(&rest);
            v
        } else {
            CacheEntry::zero(weighted)
        };

        search.stats.unfounded_events = search.state.unfounded_events();
        Ok(CountResult {
            count: value.count,
            weight: value.weight,
            stats: search.stats,
            trace: search.state.take_trace(),
            defaulted_weights,
        })
    }
}

struct Search<'a> {
    state: PropagationState,
    options: &'a CountOptions,
    cache: &'a mut ComponentCache,
    stats: Stats,
}

impl Search<'_> {
    fn weighted(&self) -> bool {
        self.options.weighted
    }

    /// Product of literal weights on the trail from position `start`.
    fn weight_since(&self, start: usize) -> CacheEntry {
        let mut v = CacheEntry::one(self.weighted());
        if let Some(w) = &mut v.weight {
            let inst = self.state.instance();
            for e in &self.state.assignment().trail()[start..] {
                if let Some(lw) = inst.literal_weight(e.lit) {
                    *w *= lw;
                }
            }
        }
        v
    }

    fn solve_scope(&mut self, scope: &[Var]) -> Result<CacheEntry, CountError> {
        let (comps, free) = find_components(&self.state, scope, self.options.decomposition);
        let mut value = CacheEntry::one(self.weighted());
        for v in free {
            // An unfixed founded or copy variable outside every residual
            // clause would make the cube unsound.
            if self.state.instance().class(v) != VarClass::Standard {
                return Err(CountError::Stuck);
            }
            value.count <<= 1;
        }
        self.stats.components += comps.len() as u64;
        for c in comps {
            let sub = self.solve_component(&c)?;
            if sub.count.is_zero() {
                return Ok(CacheEntry::zero(self.weighted()));
            }
            value.mul(&sub);
        }
        Ok(value)
    }

    fn pick(&self, c: &Component) -> Option<Var> {
        let inst = self.state.instance();
        let candidates = c.vars.iter().zip(&c.occurrences).filter(|(v, _)| inst.decidable(**v));
        match &self.options.decision_priority {
            Some(rank) => candidates
                .min_by_key(|(v, _)| (rank.get(v.index()).copied().unwrap_or(u32::MAX), v.0))
                .map(|(v, _)| *v),
            None => candidates
                .max_by_key(|(v, occ)| (**occ, core::cmp::Reverse(v.0)))
                .map(|(v, _)| *v),
        }
    }

    fn solve_component(&mut self, c: &Component) -> Result<CacheEntry, CountError> {
        if self.options.cache {
            if let Some(hit) = self.cache.lookup(&c.key) {
                self.stats.cache_hits += 1;
                return Ok(hit);
            }
        }
        let var = self.pick(c).ok_or(CountError::Stuck)?;
        let level = self.state.assignment().decision_level();
        let mut total = CacheEntry::zero(self.weighted());
        for lit in [var.pos(), var.neg()] {
            self.stats.decisions += 1;
            let start = self.state.assignment().len();
            self.state.decide(lit);
            let branch = match self.state.propagate() {
                Err(_) => None,
                Ok(()) => {
                    let mut v = self.weight_since(start);
                    let rest = self.solve_scope(&c.vars);
                    match rest {
                        Ok(r) => {
                            v.mul(&r);
                            Some(v)
                        }
                        Err(e) => {
                            self.state.backtrack(level);
                            return Err(e);
                        }
                    }
                }
            };
            self.stats.backtracks += 1;
            self.stats.backtrack_level_sum += u64::from(self.state.assignment().decision_level());
            self.state.backtrack(level);
            if let Some(b) = branch {
                total.add(&b);
            }
        }
        if self.options.cache {
            self.cache.store(c.key.clone(), total.clone());
        }
        Ok(total)
    }
}

/// Unweighted count with default options.
pub fn count_stable(p: &Program, mode: Mode, assumptions: &[Lit]) -> Result<CountResult, CountError> {
    Counter::new(p, mode, CountOptions::default())?.count(assumptions)
}

/// Count plus weight: the sum over stable models of `Π p(v)` for true and
/// `1 − p(v)` for false standard variables.
pub fn weighted_count(p: &Program, mode: Mode, assumptions: &[Lit]) -> Result<CountResult, CountError> {
    let options = CountOptions { weighted: true, ..CountOptions::default() };
    Counter::new(p, mode, options)?.count(assumptions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{example2, f1, f2, p1, p2};
    use alloc::vec::Vec;

    fn lits(p: &Program, ts: &[&str]) -> Vec<Lit> {
        ts.iter().map(|t| p.parse_lit(t).unwrap()).collect()
    }

    #[test]
    fn p1_has_two_stable_models() {
        let p = p1();
        assert_eq!(count_stable(&p, Mode::Copy, &[]).unwrap().count, 2u32.into());
        assert_eq!(count_stable(&p, Mode::StandardSearch, &[]).unwrap().count, 2u32.into());
    }

    #[test]
    fn p2_has_eight_stable_models() {
        let p = p2();
        assert_eq!(count_stable(&p, Mode::Copy, &[]).unwrap().count, 8u32.into());
        assert_eq!(count_stable(&p, Mode::StandardSearch, &[]).unwrap().count, 8u32.into());
    }

    #[test]
    fn example3_counts() {
        let p = example2();
        let theta = lits(&p, &["a", "b", "d", "u", "-e", "c", "f"]);
        assert_eq!(count_stable(&p, Mode::Copy, &theta).unwrap().count, 16u32.into());
        let theta2 = lits(&p, &["a", "b", "c", "d", "u", "e", "-f", "x"]);
        assert_eq!(count_stable(&p, Mode::Copy, &theta2).unwrap().count, 8u32.into());
    }

    #[test]
    fn f2_under_not_c() {
        let p = f2();
        let theta = lits(&p, &["-c"]);
        for decomposition in [true, false] {
            let opts = CountOptions { decomposition, ..Default::default() };
            let r = Counter::new(&p, Mode::Copy, opts).unwrap().count(&theta).unwrap();
            assert_eq!(r.count, 15u32.into());
        }
    }

    #[test]
    fn f2_components_under_not_c() {
        let p = f2();
        let inst = Instance::new(&p, Mode::Copy, &[]);
        let mut st = PropagationState::new(inst);
        st.assume(p.parse_lit("-c").unwrap());
        st.initial_scan().unwrap();
        st.propagate().unwrap();
        let all: Vec<Var> = p.vars().collect();
        let (comps, free) = find_components(&st, &all, true);
        assert!(free.is_empty());
        let sets: Vec<Vec<&str>> = comps.iter().map(|c| c.vars.iter().map(|&v| p.name(v)).collect()).collect();
        assert_eq!(sets, vec![vec!["a", "b"], vec!["d", "e", "f"]]);
    }

    #[test]
    fn unconstrained_standard_variables() {
        let mut b = Program::builder();
        for v in ["x", "y", "z"] {
            b.standard(v).unwrap();
        }
        let p = b.build();
        let r = count_stable(&p, Mode::StandardSearch, &[]).unwrap();
        assert_eq!(r.count, 8u32.into());
        assert_eq!(r.stats.decisions, 0);
        assert_eq!(r.stats.average_backtrack_level(), None);
    }

    #[test]
    fn empty_program_has_one_model() {
        let p = Program::builder().build();
        assert_eq!(count_stable(&p, Mode::Copy, &[]).unwrap().count, 1u32.into());
    }

    #[test]
    fn standard_search_rejects_unstratified() {
        assert_eq!(
            Counter::new(&example2(), Mode::StandardSearch, CountOptions::default()).err(),
            Some(CountError::UnsupportedMode)
        );
    }

    #[test]
    fn inconsistent_assumptions() {
        let p = p1();
        let r = count_stable(&p, Mode::Copy, &lits(&p, &["s", "-s"]));
        assert!(matches!(r, Err(CountError::InconsistentAssumptions(2))));
    }

    #[test]
    fn f1_cache_reuse() {
        let p = f1();
        let opts = CountOptions { keep_cache: true, ..Default::default() };
        let mut counter = Counter::new(&p, Mode::Copy, opts).unwrap();
        let r1 = counter.count(&lits(&p, &["d", "c"])).unwrap();
        assert_eq!(r1.count, 4u32.into());
        assert_eq!(r1.stats.cache_hits, 0);
        let r2 = counter.count(&lits(&p, &["-d", "e", "c"])).unwrap();
        assert_eq!(r2.count, 2u32.into());
        assert_eq!(r2.stats.cache_hits, 1);
        assert_eq!(r2.stats.decisions, 0);
        // the shared residual {¬b ∨ a, ¬a ∨ b} is stored with count 2
        assert!(counter.cache().entries().any(|(_, e)| e.count == 2u32.into()));
    }

    #[test]
    fn subtree_formula_on_f1() {
        let p = f1();
        let t1 = crate::fixtures::assignment(&p, &["d", "c"]);
        let t2 = crate::fixtures::assignment(&p, &["-d", "e", "c"]);
        let two = BigUint::from(2u32);
        assert_eq!(subtree_count(p.constraints(), &t1, &two), 4u32.into());
        assert_eq!(subtree_count(p.constraints(), &t2, &two), 2u32.into());
    }

    #[test]
    fn cache_eviction_keeps_counts() {
        let p = p2();
        let opts = CountOptions { cache_budget: Some(0), ..Default::default() };
        let mut c = Counter::new(&p, Mode::Copy, opts).unwrap();
        assert_eq!(c.count(&[]).unwrap().count, 8u32.into());
        assert!(c.cache().is_empty());
    }

    #[test]
    fn weighted_p1() {
        let mut b = Program::builder();
        b.founded("a").unwrap();
        b.founded("b").unwrap();
        b.standard("s").unwrap();
        b.rule("a", &["b"]).unwrap();
        b.rule("b", &["a"]).unwrap();
        b.rule("a", &["s"]).unwrap();
        b.prob("s", BigRational::new(3.into(), 10.into())).unwrap();
        let p = b.build();
        for mode in [Mode::Copy, Mode::StandardSearch] {
            let r = weighted_count(&p, mode, &[]).unwrap();
            assert_eq!(r.weight, Some(BigRational::one()));
            let with_a = p.with_task(Vec::new(), lits(&p, &["a"]));
            let r = weighted_count(&with_a, mode, &[]).unwrap();
            assert_eq!(r.weight, Some(BigRational::new(3.into(), 10.into())));
        }
    }

    #[test]
    fn uniform_weights_give_count_over_two_to_the_n() {
        let p = p2();
        let r = weighted_count(&p, Mode::Copy, &[]).unwrap();
        assert_eq!(r.defaulted_weights.len(), 3);
        assert_eq!(r.weight, Some(BigRational::new(8.into(), 8.into())));
    }

    #[test]
    fn copy_mode_p1_needs_an_unfounded_event() {
        let r = count_stable(&p1(), Mode::Copy, &[]).unwrap();
        assert!(r.stats.decisions >= 1);
        assert!(r.stats.unfounded_events >= 1);
    }
}
