use std::fmt;

use super::{Formula, Term, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum QuantKind {
    Sigma,
    Pi,
}

/// Position in the arithmetical hierarchy. Quantifier-free (and
/// bounded-only) formulas are reported as `Sigma(0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub struct QuantClass {
    pub kind: QuantKind,
    pub level: u32,
}

impl QuantClass {
    pub const BOUNDED: QuantClass = QuantClass {
        kind: QuantKind::Sigma,
        level: 0,
    };

    pub fn sigma(level: u32) -> Self {
        QuantClass {
            kind: QuantKind::Sigma,
            level,
        }
    }

    pub fn pi(level: u32) -> Self {
        QuantClass {
            kind: QuantKind::Pi,
            level,
        }
    }
}

impl fmt::Display for QuantClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}({})", self.kind, self.level)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    /// `v < t`
    Lt,
    /// `v < t | v = t`
    Le,
}

/// A quantifier of one of the shapes `forall v ((v < t) -> psi)`,
/// `exists v ((v < t) & psi)`, or the same with `v < t | v = t` as the
/// guard, where `v` does not occur in `t`.
#[derive(Debug, Clone, Copy)]
pub struct BoundedQuantifier<'a> {
    pub universal: bool,
    pub var: Var,
    pub kind: BoundKind,
    pub bound: &'a Term,
    pub body: &'a Formula,
}

impl<'a> BoundedQuantifier<'a> {
    pub fn recognize(f: &'a Formula) -> Option<Self> {
        let (universal, var, inner) = match f {
            Formula::ForAll(v, g) => (true, *v, &**g),
            Formula::Exists(v, g) => (false, *v, &**g),
            _ => return None,
        };
        let (guard, body) = match (universal, inner) {
            (true, Formula::Implies(g, b)) | (false, Formula::And(g, b)) => (&**g, &**b),
            _ => return None,
        };
        let (kind, bound) = guard_bound(guard, var)?;
        if bound.contains_var(var) {
            return None;
        }
        Some(BoundedQuantifier {
            universal,
            var,
            kind,
            bound,
            body,
        })
    }
}

fn guard_bound(guard: &Formula, var: Var) -> Option<(BoundKind, &Term)> {
    match guard {
        Formula::Lt(Term::Var(v), t) if *v == var => Some((BoundKind::Lt, t)),
        Formula::Or(a, b) => match (&**a, &**b) {
            (Formula::Lt(Term::Var(v), t), Formula::Eq(Term::Var(w), u))
                if *v == var && *w == var && t == u =>
            {
                Some((BoundKind::Le, t))
            }
            _ => None,
        },
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("NotPrenex: an unbounded quantifier on x{var} occurs under a connective")]
pub struct NotPrenex {
    pub var: Var,
}

fn check_matrix(f: &Formula) -> Result<(), NotPrenex> {
    match f {
        Formula::Eq(..) | Formula::Lt(..) => Ok(()),
        Formula::Not(g) => check_matrix(g),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
            check_matrix(a)?;
            check_matrix(b)
        }
        Formula::ForAll(v, _) | Formula::Exists(v, _) => match BoundedQuantifier::recognize(f) {
            Some(bq) => check_matrix(bq.body),
            None => Err(NotPrenex { var: *v }),
        },
    }
}

/// Classifies a prenex formula by its blocks of alternating unbounded
/// quantifiers; bounded quantifiers count as part of the matrix.
pub fn classify_prenex(f: &Formula) -> Result<QuantClass, NotPrenex> {
    let mut prefix = Vec::new();
    let mut cur = f;
    loop {
        match cur {
            Formula::ForAll(_, g) | Formula::Exists(_, g)
                if BoundedQuantifier::recognize(cur).is_none() =>
            {
                prefix.push(matches!(cur, Formula::ForAll(..)));
                cur = g;
            }
            _ => break,
        }
    }
    check_matrix(cur)?;
    let Some(&first) = prefix.first() else {
        return Ok(QuantClass::BOUNDED);
    };
    let blocks = 1 + prefix.windows(2).filter(|w| w[0] != w[1]).count() as u32;
    Ok(if first {
        QuantClass::pi(blocks)
    } else {
        QuantClass::sigma(blocks)
    })
}
