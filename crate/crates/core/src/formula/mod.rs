//! The first-order language of arithmetic: terms built from `0`, `1`,
//! variables, `+` and `*`; formulas built from `=`, `<`, the propositional
//! connectives and the two quantifiers.

mod arith;
mod classify;
mod eval;
mod parse;
mod render;
mod subst;

use std::collections::BTreeSet;

pub use arith::{divides, euclid_div, irred_formula, prim_formula, DivisionByZero};
pub use classify::{classify_prenex, BoundKind, BoundedQuantifier, NotPrenex, QuantClass, QuantKind};
pub use eval::{eval_nat, eval_term, Env, EvalError};
pub use parse::{parse, SyntaxError};
pub use render::{render, render_term, to_json, term_to_json};
pub use subst::{induction_instance, substitute, substitute_term, InvalidSchemaVariables};

/// Index of a variable `x_i`.
pub type Var = u32;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Zero,
    One,
    Var(Var),
    Add(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Eq(Term, Term),
    Lt(Term, Term),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    ForAll(Var, Box<Formula>),
    Exists(Var, Box<Formula>),
}

#[allow(clippy::should_implement_trait)]
impl Term {
    pub fn var(i: Var) -> Term {
        Term::Var(i)
    }

    pub fn add(a: Term, b: Term) -> Term {
        Term::Add(Box::new(a), Box::new(b))
    }

    pub fn mul(a: Term, b: Term) -> Term {
        Term::Mul(Box::new(a), Box::new(b))
    }

    /// Every variable index occurring in the term.
    pub fn vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    pub(crate) fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        match self {
            Term::Zero | Term::One => {}
            Term::Var(i) => {
                out.insert(*i);
            }
            Term::Add(a, b) | Term::Mul(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    pub fn contains_var(&self, v: Var) -> bool {
        match self {
            Term::Zero | Term::One => false,
            Term::Var(i) => *i == v,
            Term::Add(a, b) | Term::Mul(a, b) => a.contains_var(v) || b.contains_var(v),
        }
    }
}

/// The numeral for `n`: `0`, `1`, or the left-nested chain
/// `(...((1 + 1) + 1)... + 1)` with `n` ones.
pub fn numeral(n: u64) -> Term {
    match n {
        0 => Term::Zero,
        _ => (1..n).fold(Term::One, |acc, _| Term::add(acc, Term::One)),
    }
}

impl Formula {
    pub fn eq(a: Term, b: Term) -> Formula {
        Formula::Eq(a, b)
    }

    pub fn lt(a: Term, b: Term) -> Formula {
        Formula::Lt(a, b)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn forall(v: Var, f: Formula) -> Formula {
        Formula::ForAll(v, Box::new(f))
    }

    pub fn exists(v: Var, f: Formula) -> Formula {
        Formula::Exists(v, Box::new(f))
    }

    /// `a <= b`, spelled `a < b | a = b`.
    pub fn le(a: Term, b: Term) -> Formula {
        Formula::or(Formula::Lt(a.clone(), b.clone()), Formula::Eq(a, b))
    }

    /// Every variable index occurring in the formula, free or bound.
    pub fn vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        match self {
            Formula::Eq(a, b) | Formula::Lt(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Formula::Not(f) => f.collect_vars(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Formula::ForAll(v, f) | Formula::Exists(v, f) => {
                out.insert(*v);
                f.collect_vars(out);
            }
        }
    }

    pub fn is_sentence(&self) -> bool {
        free_vars(self).is_empty()
    }

    pub fn is_free(&self, v: Var) -> bool {
        match self {
            Formula::Eq(a, b) | Formula::Lt(a, b) => a.contains_var(v) || b.contains_var(v),
            Formula::Not(f) => f.is_free(v),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.is_free(v) || b.is_free(v)
            }
            Formula::ForAll(w, f) | Formula::Exists(w, f) => *w != v && f.is_free(v),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Eq(..) | Formula::Lt(..) => 1,
            Formula::Not(f) | Formula::ForAll(_, f) | Formula::Exists(_, f) => 1 + f.depth(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                1 + a.depth().max(b.depth())
            }
        }
    }
}

/// Variables with at least one free occurrence.
pub fn free_vars(f: &Formula) -> BTreeSet<Var> {
    fn go(f: &Formula, bound: &mut Vec<Var>, out: &mut BTreeSet<Var>) {
        match f {
            Formula::Eq(a, b) | Formula::Lt(a, b) => {
                for v in a.vars().into_iter().chain(b.vars()) {
                    if !bound.contains(&v) {
                        out.insert(v);
                    }
                }
            }
            Formula::Not(g) => go(g, bound, out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                go(a, bound, out);
                go(b, bound, out);
            }
            Formula::ForAll(v, g) | Formula::Exists(v, g) => {
                bound.push(*v);
                go(g, bound, out);
                bound.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    go(f, &mut Vec::new(), &mut out);
    out
}
