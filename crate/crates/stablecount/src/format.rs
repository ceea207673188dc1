//! Text format for ground programs.
//!
//! ```text
//! % comment
//! #standard s t.
//! #founded a b.
//! rule a :- b, not c.
//! rule b.
//! :- a, not s.          % clause ¬a ∨ s
//! #prob s 0.3.
//! #query a.
//! #evidence not b.
//! ```

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use stablecount_core::decimal::{parse_decimal, render};
use stablecount_core::program::{Lit, Program, VarKind};
use stablecount_core::ProgramError;
use thiserror::Error;

/// A literal as written, with its line and column.
type Located = (String, (usize, usize));

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{line}:{col}: {source}")]
    Semantic { line: usize, col: usize, source: ProgramError },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(String),
    Directive(String),
    Dot,
    Comma,
    If,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '(' || c == ')'
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    for (li, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let (lno, col) = (li + 1, i + 1);
            let start = i;
            let tok = match c {
                '%' => break,
                c if c.is_whitespace() => {
                    i += 1;
                    continue;
                }
                '.' => {
                    i += 1;
                    Tok::Dot
                }
                ',' => {
                    i += 1;
                    Tok::Comma
                }
                ':' if chars.get(i + 1) == Some(&'-') => {
                    i += 2;
                    Tok::If
                }
                '#' => {
                    i += 1;
                    while i < chars.len() && chars[i].is_ascii_alphabetic() {
                        i += 1;
                    }
                    Tok::Directive(chars[start + 1..i].iter().collect())
                }
                c if c.is_ascii_digit() => {
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    if i + 1 < chars.len() && chars[i] == '.' && chars[i + 1].is_ascii_digit() {
                        i += 1;
                        while i < chars.len() && chars[i].is_ascii_digit() {
                            i += 1;
                        }
                    }
                    Tok::Number(chars[start..i].iter().collect())
                }
                c if is_ident_start(c) => {
                    while i < chars.len() && is_ident_char(chars[i]) {
                        i += 1;
                    }
                    Tok::Ident(chars[start..i].iter().collect())
                }
                other => {
                    return Err(ParseError::Syntax { line: lno, col, msg: format!("unexpected character `{other}`") })
                }
            };
            out.push(Token { tok, line: lno, col });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    eof: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn here(&self) -> (usize, usize) {
        self.peek().map_or(self.eof, |t| (t.line, t.col))
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        let (line, col) = self.here();
        Err(ParseError::Syntax { line, col, msg: msg.into() })
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some(t) if t.tok == want => {
                self.pos += 1;
                Ok(())
            }
            _ => self.err(format!("expected {what}")),
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek().map(|t| &t.tok) {
            Some(Tok::Ident(s)) if s != "not" => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => self.err("expected identifier"),
        }
    }

    /// `x` or `not x`, returned as `x` or `-x`.
    fn literal(&mut self) -> Result<String, ParseError> {
        if matches!(self.peek().map(|t| &t.tok), Some(Tok::Ident(s)) if s == "not") {
            self.pos += 1;
            Ok(format!("-{}", self.ident()?))
        } else {
            self.ident()
        }
    }

    fn literal_list(&mut self) -> Result<Vec<Located>, ParseError> {
        let mut lits = Vec::new();
        loop {
            let at = self.here();
            lits.push((self.literal()?, at));
            if self.peek().map(|t| &t.tok) == Some(&Tok::Comma) {
                self.pos += 1;
            } else {
                return Ok(lits);
            }
        }
    }
}

fn semantic<T>(at: (usize, usize), r: Result<T, ProgramError>) -> Result<T, ParseError> {
    r.map_err(|source| ParseError::Semantic { line: at.0, col: at.1, source })
}

pub fn parse_program(text: &str) -> Result<Program, ParseError> {
    let toks = lex(text)?;
    let last_line = text.lines().count().max(1);
    let mut p = Parser { toks, pos: 0, eof: (last_line, text.lines().last().map_or(1, |l| l.len() + 1)) };
    let mut b = Program::builder();
    while let Some(start) = p.next() {
        let at = (start.line, start.col);
        match start.tok {
            Tok::Directive(d) => match d.as_str() {
                "standard" | "founded" => {
                    while let Some(Tok::Ident(_)) = p.peek().map(|t| &t.tok) {
                        let at = p.here();
                        let name = p.ident()?;
                        let r = if d == "standard" { b.standard(&name) } else { b.founded(&name) };
                        semantic(at, r)?;
                    }
                    p.expect(Tok::Dot, "`.`")?;
                }
                "prob" => {
                    let vat = p.here();
                    let name = p.ident()?;
                    let value = match p.next().map(|t| t.tok) {
                        Some(Tok::Number(n)) => parse_decimal(&n).expect("lexer only yields decimals"),
                        _ => {
                            p.pos -= 1;
                            return p.err("expected probability");
                        }
                    };
                    p.expect(Tok::Dot, "`.`")?;
                    let v = semantic(vat, b.var(&name))?;
                    semantic(vat, b.set_weight(v, value))?;
                }
                "query" | "evidence" => {
                    let lat = p.here();
                    let lit = p.literal()?;
                    p.expect(Tok::Dot, "`.`")?;
                    let l = semantic(lat, b.lit(&lit))?;
                    let r = if d == "query" { b.add_query(l) } else { b.add_evidence(l) };
                    semantic(lat, r)?;
                }
                other => {
                    return Err(ParseError::Syntax {
                        line: at.0,
                        col: at.1,
                        msg: format!("unknown directive `#{other}`"),
                    })
                }
            },
            Tok::Ident(kw) if kw == "rule" => {
                let hat = p.here();
                let head = p.ident()?;
                let body = if p.peek().map(|t| &t.tok) == Some(&Tok::If) {
                    p.pos += 1;
                    p.literal_list()?
                } else {
                    Vec::new()
                };
                p.expect(Tok::Dot, "`.` or `:-`")?;
                let h = semantic(hat, b.var(&head))?;
                let lits = body.iter().map(|(t, at)| semantic(*at, b.lit(t))).collect::<Result<Vec<_>, _>>()?;
                semantic(hat, b.add_rule(h, lits))?;
            }
            Tok::If => {
                let body = p.literal_list()?;
                p.expect(Tok::Dot, "`.`")?;
                let lits = body
                    .iter()
                    .map(|(t, at)| semantic(*at, b.lit(t)).map(|l| !l))
                    .collect::<Result<Vec<_>, _>>()?;
                semantic(at, b.add_clause(lits))?;
            }
            _ => {
                p.pos -= 1;
                return p.err("expected a statement");
            }
        }
    }
    Ok(b.build())
}

/// `x` or `not x`.
pub fn literal_text(p: &Program, l: Lit) -> String {
    let name = p.name(l.var());
    if l.is_positive() {
        name.to_string()
    } else {
        format!("not {name}")
    }
}

/// Exact decimal expansion when the denominator has no prime factors other
/// than 2 and 5; otherwise 30 significant digits.
pub fn decimal_text(r: &BigRational) -> String {
    let mut d = r.denom().clone();
    let mut places = 0usize;
    let (two, five) = (BigInt::from(2), BigInt::from(5));
    let (mut twos, mut fives) = (0usize, 0usize);
    while d.is_even() {
        d /= &two;
        twos += 1;
    }
    while (&d % &five).is_zero() {
        d /= &five;
        fives += 1;
    }
    if !d.is_one() {
        return render(r, 30);
    }
    places += twos.max(fives);
    if places == 0 {
        return r.numer().to_string();
    }
    let scaled = r * BigRational::from_integer(num_traits::pow(BigInt::from(10), places));
    let digits = scaled.to_integer().magnitude().to_string();
    let digits = format!("{digits:0>width$}", width = places + 1);
    let (int, frac) = digits.split_at(digits.len() - places);
    let sign = if r < &BigRational::zero() { "-" } else { "" };
    format!("{sign}{int}.{frac}")
}

/// Text that [`parse_program`] turns back into an identical program.
pub fn print_program(p: &Program) -> String {
    let mut out = String::new();
    let vars: Vec<_> = p.vars().collect();
    for run in vars.chunk_by(|a, b| p.kind(*a) == p.kind(*b)) {
        let kw = match p.kind(run[0]) {
            VarKind::Standard => "#standard",
            VarKind::Founded => "#founded",
        };
        out.push_str(kw);
        for &v in run {
            out.push(' ');
            out.push_str(p.name(v));
        }
        out.push_str(".\n");
    }
    for v in p.standard() {
        if let Some(w) = p.weight(v) {
            let _ = writeln!(out, "#prob {} {}.", p.name(v), decimal_text(w));
        }
    }
    for r in p.rules() {
        if r.body.is_empty() {
            let _ = writeln!(out, "rule {}.", p.name(r.head));
        } else {
            let body: Vec<String> = r.body.iter().map(|&l| literal_text(p, l)).collect();
            let _ = writeln!(out, "rule {} :- {}.", p.name(r.head), body.join(", "));
        }
    }
    for c in p.constraints() {
        let body: Vec<String> = c.lits.iter().map(|&l| literal_text(p, !l)).collect();
        let _ = writeln!(out, ":- {}.", body.join(", "));
    }
    for &q in p.queries() {
        let _ = writeln!(out, "#query {}.", literal_text(p, q));
    }
    for &e in p.evidence() {
        let _ = writeln!(out, "#evidence {}.", literal_text(p, e));
    }
    out
}
