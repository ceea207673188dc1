//! Flat text records for search statistics and decision traces.

use std::time::Duration;

use stablecount_core::counter::Stats;
use stablecount_core::program::{Lit, Program};
use stablecount_core::propagation::{ClauseOrigin, TraceEvent, TraceKind, TraceReason};
use stablecount_core::transform::{copy_transform, CopyOrigin, CopyProgram};

/// `stats D=.. A=.. L=.. cache_hits=.. components=.. time_ms=..`; `A` is `-`
/// when nothing was backtracked.
pub fn stats_line(stats: &Stats, elapsed: Duration) -> String {
    let a = match stats.average_backtrack_level() {
        Some(a) => format!("{a:.2}"),
        None => "-".to_string(),
    };
    format!(
        "stats D={} A={} L={} cache_hits={} components={} time_ms={}",
        stats.decisions,
        a,
        stats.unfounded_events,
        stats.cache_hits,
        stats.components,
        elapsed.as_millis()
    )
}

/// Names literals over original and copy variables.
pub struct Namer {
    copy: CopyProgram,
}

impl Namer {
    pub fn new(p: &Program) -> Namer {
        Namer { copy: copy_transform(p) }
    }

    pub fn lit(&self, l: Lit) -> String {
        let name = self.copy.name(l.var());
        if l.is_positive() {
            name
        } else {
            format!("-{name}")
        }
    }

    fn var(&self, v: stablecount_core::program::Var) -> String {
        self.copy.name(v)
    }
}

fn kind(k: TraceKind) -> &'static str {
    match k {
        TraceKind::Decide => "decide",
        TraceKind::Unit => "unit",
        TraceKind::Unfounded => "unfounded",
        TraceKind::Conflict => "conflict",
    }
}

/// `LEVEL kind literal reason`.
pub fn trace_line(namer: &Namer, e: &TraceEvent) -> String {
    let reason = match e.reason {
        TraceReason::Decision => "decision".to_string(),
        TraceReason::Assumption => "assumption".to_string(),
        TraceReason::Clause(ClauseOrigin::Constraint(i)) => format!("constraint:{i}"),
        TraceReason::Clause(ClauseOrigin::Unit) => "evidence".to_string(),
        TraceReason::Clause(ClauseOrigin::Copy(CopyOrigin::Link(v))) => format!("link:{}", namer.var(v)),
        TraceReason::Clause(ClauseOrigin::Copy(CopyOrigin::Rule(i))) => format!("copy-rule:{i}"),
        TraceReason::Rule(i) => format!("rule:{i}"),
        TraceReason::Unfounded => "unfounded".to_string(),
    };
    format!("{} {} {} {}", e.level, kind(e.kind), namer.lit(e.lit), reason)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn undefined_average_renders_as_dash() {
        let line = stats_line(&Stats::default(), Duration::from_millis(3));
        assert_eq!(line, "stats D=0 A=- L=0 cache_hits=0 components=0 time_ms=3");
    }

    #[test]
    fn average_with_two_decimals() {
        let s = Stats { decisions: 2, backtracks: 2, backtrack_level_sum: 3, ..Stats::default() };
        assert!(stats_line(&s, Duration::ZERO).starts_with("stats D=2 A=1.50 L=0"));
    }
}
