//! Gödel numbers of terms and formulas over the eleven-symbol alphabet
//! `0 1 + · = ( ) → ¬ ∀ x_i`.
//!
//! `<`, `∃`, `∧` and `∨` have no symbol code, so formulas are first rewritten
//! into `=`, `¬`, `→`, `∀` by [`desugar`]:
//!
//! | source      | rewritten                          |
//! |-------------|------------------------------------|
//! | `s < t`     | `¬∀x_k ¬ (s + (x_k + 1)) = t`      |
//! | `∃v φ`      | `¬∀v ¬φ`                           |
//! | `φ ∧ ψ`     | `¬(φ → ¬ψ)`                        |
//! | `φ ∨ ψ`     | `(¬φ → ψ)`                         |
//!
//! where `x_k` is the smallest variable occurring in neither `s` nor `t`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use super::seq::{contiguous_exponents, prime_power_product};
use crate::formula::{Formula, Term, Var};
use crate::BigNat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    Zero,
    One,
    Plus,
    Times,
    Equals,
    LParen,
    RParen,
    Arrow,
    Not,
    ForAll,
    Var(Var),
}

impl Symbol {
    pub fn code(self) -> u64 {
        match self {
            Symbol::Zero => 1,
            Symbol::One => 2,
            Symbol::Plus => 3,
            Symbol::Times => 4,
            Symbol::Equals => 5,
            Symbol::LParen => 6,
            Symbol::RParen => 7,
            Symbol::Arrow => 8,
            Symbol::Not => 9,
            Symbol::ForAll => 10,
            Symbol::Var(i) => 11 + u64::from(i),
        }
    }

    pub fn from_code(code: u64) -> Option<Symbol> {
        Some(match code {
            0 => return None,
            1 => Symbol::Zero,
            2 => Symbol::One,
            3 => Symbol::Plus,
            4 => Symbol::Times,
            5 => Symbol::Equals,
            6 => Symbol::LParen,
            7 => Symbol::RParen,
            8 => Symbol::Arrow,
            9 => Symbol::Not,
            10 => Symbol::ForAll,
            c => Symbol::Var(Var::try_from(c - 11).ok()?),
        })
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Zero => f.write_str("0"),
            Symbol::One => f.write_str("1"),
            Symbol::Plus => f.write_str("+"),
            Symbol::Times => f.write_str("·"),
            Symbol::Equals => f.write_str("="),
            Symbol::LParen => f.write_str("("),
            Symbol::RParen => f.write_str(")"),
            Symbol::Arrow => f.write_str("→"),
            Symbol::Not => f.write_str("¬"),
            Symbol::ForAll => f.write_str("∀"),
            Symbol::Var(i) => write!(f, "x{i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("NotACode: {reason}")]
pub struct NotACode {
    pub reason: String,
}

impl NotACode {
    fn new(reason: impl Into<String>) -> Self {
        NotACode {
            reason: reason.into(),
        }
    }
}

/// Rewrites `f` into the coded fragment (`=`, `¬`, `→`, `∀`).
pub fn desugar(f: &Formula) -> Formula {
    match f {
        Formula::Eq(..) => f.clone(),
        Formula::Lt(s, t) => {
            let mut used = s.vars();
            used.extend(t.vars());
            let k = (0..).find(|i| !used.contains(i)).expect("finite variable set");
            let shifted = Term::add(s.clone(), Term::add(Term::Var(k), Term::One));
            Formula::not(Formula::forall(
                k,
                Formula::not(Formula::Eq(shifted, t.clone())),
            ))
        }
        Formula::Not(g) => Formula::not(desugar(g)),
        Formula::And(a, b) => Formula::not(Formula::implies(desugar(a), Formula::not(desugar(b)))),
        Formula::Or(a, b) => Formula::implies(Formula::not(desugar(a)), desugar(b)),
        Formula::Implies(a, b) => Formula::implies(desugar(a), desugar(b)),
        Formula::ForAll(v, g) => Formula::forall(*v, desugar(g)),
        Formula::Exists(v, g) => Formula::not(Formula::forall(*v, Formula::not(desugar(g)))),
    }
}

fn term_symbols(t: &Term, out: &mut Vec<Symbol>) {
    match t {
        Term::Zero => out.push(Symbol::Zero),
        Term::One => out.push(Symbol::One),
        Term::Var(i) => out.push(Symbol::Var(*i)),
        Term::Add(a, b) | Term::Mul(a, b) => {
            out.push(Symbol::LParen);
            term_symbols(a, out);
            out.push(if matches!(t, Term::Add(..)) { Symbol::Plus } else { Symbol::Times });
            term_symbols(b, out);
            out.push(Symbol::RParen);
        }
    }
}

// Expects a desugared formula.
fn formula_symbols(f: &Formula, out: &mut Vec<Symbol>) {
    match f {
        Formula::Eq(a, b) => {
            term_symbols(a, out);
            out.push(Symbol::Equals);
            term_symbols(b, out);
        }
        Formula::Not(g) => {
            out.push(Symbol::Not);
            formula_symbols(g, out);
        }
        Formula::Implies(a, b) => {
            out.push(Symbol::LParen);
            formula_symbols(a, out);
            out.push(Symbol::Arrow);
            formula_symbols(b, out);
            out.push(Symbol::RParen);
        }
        Formula::ForAll(v, g) => {
            out.push(Symbol::ForAll);
            out.push(Symbol::Var(*v));
            formula_symbols(g, out);
        }
        Formula::Lt(..) | Formula::And(..) | Formula::Or(..) | Formula::Exists(..) => {
            unreachable!("desugared formulas use only =, ¬, →, ∀")
        }
    }
}

/// The symbol string that gets coded: `desugar(f)` written with the minimal
/// bracketing of the coded alphabet (atoms carry no brackets).
pub fn symbols(f: &Formula) -> Vec<Symbol> {
    let mut out = Vec::new();
    formula_symbols(&desugar(f), &mut out);
    out
}

pub fn term_symbol_string(t: &Term) -> Vec<Symbol> {
    let mut out = Vec::new();
    term_symbols(t, &mut out);
    out
}

pub fn symbol_text(symbols: &[Symbol]) -> String {
    symbols.iter().map(Symbol::to_string).collect()
}

fn code_of(symbols: &[Symbol]) -> BigNat {
    prime_power_product(symbols.iter().map(|s| s.code()))
}

/// `prod_i p_i^#(s_i)` over the symbol string of `desugar(f)`.
pub fn encode_formula(f: &Formula) -> BigNat {
    code_of(&symbols(f))
}

pub fn encode_term(t: &Term) -> BigNat {
    code_of(&term_symbol_string(t))
}

fn symbols_of_code(code: &BigUint) -> Result<Vec<Symbol>, NotACode> {
    if code.is_one() {
        return Err(NotACode::new("1 codes the empty string"));
    }
    let exps = contiguous_exponents(code)
        .ok_or_else(|| NotACode::new(format!("{code} has a gap in its prime support")))?;
    exps.into_iter()
        .map(|e| Symbol::from_code(e).ok_or_else(|| NotACode::new(format!("no symbol has code {e}"))))
        .collect()
}

enum Expr {
    T(Term),
    F(Formula),
}

struct Reader<'a> {
    syms: &'a [Symbol],
    pos: usize,
}

impl Reader<'_> {
    fn peek(&self) -> Option<Symbol> {
        self.syms.get(self.pos).copied()
    }

    fn next(&mut self) -> Result<Symbol, NotACode> {
        let s = self
            .peek()
            .ok_or_else(|| NotACode::new("symbol string ends early"))?;
        self.pos += 1;
        Ok(s)
    }

    fn expect(&mut self, want: Symbol) -> Result<(), NotACode> {
        let at = self.pos;
        match self.next()? {
            s if s == want => Ok(()),
            s => Err(NotACode::new(format!("expected `{want}` at symbol {at}, found `{s}`"))),
        }
    }

    fn unit(&mut self) -> Result<Expr, NotACode> {
        let at = self.pos;
        match self.next()? {
            Symbol::Zero => Ok(Expr::T(Term::Zero)),
            Symbol::One => Ok(Expr::T(Term::One)),
            Symbol::Var(i) => Ok(Expr::T(Term::Var(i))),
            Symbol::Not => Ok(Expr::F(Formula::not(self.formula()?))),
            Symbol::ForAll => match self.next()? {
                Symbol::Var(v) => Ok(Expr::F(Formula::forall(v, self.formula()?))),
                s => Err(NotACode::new(format!("expected a variable after `∀`, found `{s}`"))),
            },
            Symbol::LParen => match self.equation()? {
                Expr::T(a) => {
                    let op = self.next()?;
                    let b = self.term()?;
                    self.expect(Symbol::RParen)?;
                    match op {
                        Symbol::Plus => Ok(Expr::T(Term::add(a, b))),
                        Symbol::Times => Ok(Expr::T(Term::mul(a, b))),
                        s => Err(NotACode::new(format!("expected `+` or `·`, found `{s}`"))),
                    }
                }
                Expr::F(a) => {
                    self.expect(Symbol::Arrow)?;
                    let b = self.formula()?;
                    self.expect(Symbol::RParen)?;
                    Ok(Expr::F(Formula::implies(a, b)))
                }
            },
            s => Err(NotACode::new(format!("unexpected `{s}` at symbol {at}"))),
        }
    }

    fn equation(&mut self) -> Result<Expr, NotACode> {
        match self.unit()? {
            Expr::T(a) if self.peek() == Some(Symbol::Equals) => {
                self.pos += 1;
                let b = self.term()?;
                Ok(Expr::F(Formula::Eq(a, b)))
            }
            e => Ok(e),
        }
    }

    fn formula(&mut self) -> Result<Formula, NotACode> {
        match self.equation()? {
            Expr::F(f) => Ok(f),
            Expr::T(_) => Err(NotACode::new("a term where a formula is required")),
        }
    }

    fn term(&mut self) -> Result<Term, NotACode> {
        match self.unit()? {
            Expr::T(t) => Ok(t),
            Expr::F(_) => Err(NotACode::new("a formula where a term is required")),
        }
    }

    fn finish(&self) -> Result<(), NotACode> {
        if self.pos == self.syms.len() {
            Ok(())
        } else {
            Err(NotACode::new(format!("trailing symbols after position {}", self.pos)))
        }
    }
}

/// Inverse of [`encode_formula`] on the desugared fragment.
pub fn decode_formula(code: &BigNat) -> Result<Formula, NotACode> {
    let syms = symbols_of_code(code)?;
    let mut r = Reader { syms: &syms, pos: 0 };
    let f = r.formula()?;
    r.finish()?;
    Ok(f)
}

pub fn decode_term(code: &BigNat) -> Result<Term, NotACode> {
    let syms = symbols_of_code(code)?;
    let mut r = Reader { syms: &syms, pos: 0 };
    let t = r.term()?;
    r.finish()?;
    Ok(t)
}
