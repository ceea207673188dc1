//! The small programs used throughout the tests and the documentation.

use alloc::vec::Vec;

use crate::program::{Assignment, Clause, Program, Rule};
use crate::transform::Subprogram;

/// Founded `{a, b}`, standard `{s}`; `a <- b`, `b <- a`, `a <- s`.
pub fn p1() -> Program {
    let mut b = Program::builder();
    b.founded("a").unwrap();
    b.founded("b").unwrap();
    b.standard("s").unwrap();
    b.rule("a", &["b"]).unwrap();
    b.rule("b", &["a"]).unwrap();
    b.rule("a", &["s"]).unwrap();
    b.build()
}

/// `p1` plus founded `c`, standard `{t, u}`, `c <- a, t` and `b <- u`.
pub fn p2() -> Program {
    let mut b = Program::builder();
    b.founded("a").unwrap();
    b.founded("b").unwrap();
    b.founded("c").unwrap();
    b.standard("s").unwrap();
    b.standard("t").unwrap();
    b.standard("u").unwrap();
    b.rule("a", &["b"]).unwrap();
    b.rule("b", &["a"]).unwrap();
    b.rule("a", &["s"]).unwrap();
    b.rule("c", &["a", "t"]).unwrap();
    b.rule("b", &["u"]).unwrap();
    b.build()
}

/// Founded `{a..f}`, standard `{s, t, u, x, y, z}` with rules
/// `a <- b, b <- a, a <- s, b <- t, c <- d, d <- u, e <- not f, f <- not e`
/// and constraints `¬s ∨ ¬t`, `a ∨ b`, `f ∨ x`.
pub fn example2() -> Program {
    let mut b = Program::builder();
    for v in ["a", "b", "c", "d", "e", "f"] {
        b.founded(v).unwrap();
    }
    for v in ["s", "t", "u", "x", "y", "z"] {
        b.standard(v).unwrap();
    }
    b.rule("a", &["b"]).unwrap();
    b.rule("b", &["a"]).unwrap();
    b.rule("a", &["s"]).unwrap();
    b.rule("b", &["t"]).unwrap();
    b.rule("c", &["d"]).unwrap();
    b.rule("d", &["u"]).unwrap();
    b.rule("e", &["not f"]).unwrap();
    b.rule("f", &["not e"]).unwrap();
    b.clause(&["-s", "-t"]).unwrap();
    b.clause(&["a", "b"]).unwrap();
    b.clause(&["f", "x"]).unwrap();
    b.build()
}

/// Pure clauses over standard `{a..e}`:
/// `¬b ∨ a`, `¬c ∨ ¬a ∨ b`, `¬d ∨ c`, `¬e ∨ c`.
pub fn f1() -> Program {
    let mut b = Program::builder();
    for v in ["a", "b", "c", "d", "e"] {
        b.standard(v).unwrap();
    }
    b.clause(&["-b", "a"]).unwrap();
    b.clause(&["-c", "-a", "b"]).unwrap();
    b.clause(&["-d", "c"]).unwrap();
    b.clause(&["-e", "c"]).unwrap();
    b.build()
}

/// Pure clauses over standard `{a..f}`: `a ∨ ¬b ∨ c`, `c ∨ ¬d ∨ e`, `e ∨ f`.
pub fn f2() -> Program {
    let mut b = Program::builder();
    for v in ["a", "b", "c", "d", "e", "f"] {
        b.standard(v).unwrap();
    }
    b.clause(&["a", "-b", "c"]).unwrap();
    b.clause(&["c", "-d", "e"]).unwrap();
    b.clause(&["e", "f"]).unwrap();
    b.build()
}

/// Level-0 assignment from literal texts; panics on unknown names.
pub fn assignment(p: &Program, lits: &[&str]) -> Assignment {
    let lits: Vec<_> = lits.iter().map(|t| p.parse_lit(t).expect("unknown literal")).collect();
    Assignment::from_lits(p.num_vars(), &lits).expect("inconsistent literals")
}

/// Normalized subprogram from `(head, body)` pairs and clause texts.
pub fn subprogram(p: &Program, rules: &[(&str, &[&str])], clauses: &[&[&str]]) -> Subprogram {
    let lit = |t: &&str| p.parse_lit(t).expect("unknown literal");
    Subprogram {
        rules: rules
            .iter()
            .map(|(h, body)| Rule::new(p.lookup(h).unwrap(), body.iter().map(lit).collect()))
            .collect(),
        constraints: clauses.iter().map(|c| Clause::new(c.iter().map(lit).collect())).collect(),
    }
    .normalized()
}
