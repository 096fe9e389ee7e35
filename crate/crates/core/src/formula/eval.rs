//! Evaluation in the standard model of arithmetic.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::classify::{BoundKind, BoundedQuantifier};
use super::{free_vars, Formula, Term, Var};
use crate::BigNat;

pub type Env = BTreeMap<Var, BigNat>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("UnboundVariable: x{0} has no value")]
    UnboundVariable(Var),
    /// An unbounded quantifier was not decided by searching `0..=budget`.
    /// This is never a truth value.
    #[error("BudgetExceeded: unbounded search over 0..={budget} was inconclusive")]
    BudgetExceeded { budget: u64 },
}

// u64 fast path; most evaluation never leaves it.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Val {
    Small(u64),
    Big(BigUint),
}

impl Val {
    fn from_big(b: &BigUint) -> Val {
        match b.to_u64() {
            Some(x) => Val::Small(x),
            None => Val::Big(b.clone()),
        }
    }

    fn to_big(&self) -> BigUint {
        match self {
            Val::Small(x) => BigUint::from(*x),
            Val::Big(b) => b.clone(),
        }
    }

    fn add(self, other: Val) -> Val {
        if let (Val::Small(a), Val::Small(b)) = (&self, &other) {
            if let Some(s) = a.checked_add(*b) {
                return Val::Small(s);
            }
        }
        Val::Big(self.to_big() + other.to_big())
    }

    fn mul(self, other: Val) -> Val {
        if let (Val::Small(a), Val::Small(b)) = (&self, &other) {
            if let Some(s) = a.checked_mul(*b) {
                return Val::Small(s);
            }
        }
        Val::from_big(&(self.to_big() * other.to_big()))
    }

    fn cmp(&self, other: &Val) -> Ordering {
        match (self, other) {
            (Val::Small(a), Val::Small(b)) => a.cmp(b),
            (Val::Small(_), Val::Big(_)) => Ordering::Less,
            (Val::Big(_), Val::Small(_)) => Ordering::Greater,
            (Val::Big(a), Val::Big(b)) => a.cmp(b),
        }
    }
}

struct Frame {
    slots: Vec<Option<Val>>,
    budget: u64,
}

impl Frame {
    fn term(&self, t: &Term) -> Val {
        match t {
            Term::Zero => Val::Small(0),
            Term::One => Val::Small(1),
            Term::Var(i) => self.slots[*i as usize]
                .clone()
                .expect("free variables are checked before evaluation"),
            Term::Add(a, b) => self.term(a).add(self.term(b)),
            Term::Mul(a, b) => self.term(a).mul(self.term(b)),
        }
    }

    fn holds(&mut self, f: &Formula) -> Result<bool, EvalError> {
        match f {
            Formula::Eq(a, b) => Ok(self.term(a).cmp(&self.term(b)) == Ordering::Equal),
            Formula::Lt(a, b) => Ok(self.term(a).cmp(&self.term(b)) == Ordering::Less),
            Formula::Not(g) => self.holds(g).map(|b| !b),
            // Kleene connectives: a decided operand can settle the result even
            // when the other side is inconclusive.
            Formula::And(a, b) => kleene_and(self.holds(a), || self.holds(b)),
            Formula::Or(a, b) => {
                let na = self.holds(a).map(|x| !x);
                kleene_and(na, || self.holds(b).map(|x| !x)).map(|x| !x)
            }
            Formula::Implies(a, b) => {
                let a_val = self.holds(a);
                kleene_and(a_val, || self.holds(b).map(|x| !x)).map(|x| !x)
            }
            Formula::ForAll(v, body) | Formula::Exists(v, body) => {
                let universal = matches!(f, Formula::ForAll(..));
                if let Some(bq) = BoundedQuantifier::recognize(f) {
                    self.bounded(&bq)
                } else {
                    self.unbounded(universal, *v, body)
                }
            }
        }
    }

    fn bounded(&mut self, bq: &BoundedQuantifier<'_>) -> Result<bool, EvalError> {
        let limit = match self.term(bq.bound) {
            Val::Small(b) => b,
            // a bound past u64 cannot be scanned
            Val::Big(_) => return Err(EvalError::BudgetExceeded { budget: u64::MAX }),
        };
        let count = match bq.kind {
            BoundKind::Lt => Some(limit),
            BoundKind::Le => limit.checked_add(1),
        };
        let values: Box<dyn Iterator<Item = u64>> = match count {
            Some(c) => Box::new(0..c),
            None => Box::new(0..=u64::MAX),
        };
        self.search(bq.universal, bq.var, bq.body, values, true)
    }

    fn unbounded(&mut self, universal: bool, v: Var, body: &Formula) -> Result<bool, EvalError> {
        let budget = self.budget;
        self.search(universal, v, body, Box::new(0..=budget), false)
    }

    /// Scans `values` for a counterexample (universal) or witness
    /// (existential). `exhaustive` says whether running out of values decides
    /// the quantifier.
    fn search(
        &mut self,
        universal: bool,
        v: Var,
        body: &Formula,
        values: Box<dyn Iterator<Item = u64>>,
        exhaustive: bool,
    ) -> Result<bool, EvalError> {
        let saved = self.slots[v as usize].take();
        let mut undecided = None;
        let mut settled = None;
        for n in values {
            self.slots[v as usize] = Some(Val::Small(n));
            match self.holds(body) {
                Ok(b) if b != universal => {
                    settled = Some(b);
                    break;
                }
                Ok(_) => {}
                Err(e) => undecided = Some(e),
            }
        }
        self.slots[v as usize] = saved;
        if let Some(b) = settled {
            return Ok(b);
        }
        match undecided {
            Some(e) => Err(e),
            None if exhaustive => Ok(universal),
            None => Err(EvalError::BudgetExceeded {
                budget: self.budget,
            }),
        }
    }
}

fn kleene_and(
    a: Result<bool, EvalError>,
    b: impl FnOnce() -> Result<bool, EvalError>,
) -> Result<bool, EvalError> {
    match a {
        Ok(false) => Ok(false),
        Ok(true) => b(),
        Err(e) => match b() {
            Ok(false) => Ok(false),
            _ => Err(e),
        },
    }
}

fn frame_for(vars: impl Iterator<Item = Var>, env: &Env, budget: u64) -> Frame {
    let width = vars
        .chain(env.keys().copied())
        .max()
        .map_or(0, |m| m as usize + 1);
    let mut slots = vec![None; width];
    for (k, v) in env {
        slots[*k as usize] = Some(Val::from_big(v));
    }
    Frame { slots, budget }
}

pub fn eval_term(t: &Term, env: &Env) -> Result<BigNat, EvalError> {
    let vars = t.vars();
    if let Some(v) = vars.iter().find(|v| !env.contains_key(v)) {
        return Err(EvalError::UnboundVariable(*v));
    }
    Ok(frame_for(vars.into_iter(), env, 0).term(t).to_big())
}

/// Truth of `f` in the natural numbers under `env`.
///
/// Bounded quantifiers are decided exactly. An unbounded quantifier is
/// searched over `0..=budget`; a counterexample to a `forall` or a witness
/// for an `exists` decides it, otherwise the result is
/// [`EvalError::BudgetExceeded`].
pub fn eval_nat(f: &Formula, env: &Env, budget: u64) -> Result<bool, EvalError> {
    if let Some(v) = free_vars(f).into_iter().find(|v| !env.contains_key(v)) {
        return Err(EvalError::UnboundVariable(v));
    }
    frame_for(f.vars().into_iter(), env, budget).holds(f)
}
