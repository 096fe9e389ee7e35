//! Elementary number theory in the language of arithmetic.

use num_integer::Integer;
use num_traits::Zero;

use super::{Formula, Term, Var};
use crate::BigNat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("DivisionByZero: the divisor must be non-zero")]
pub struct DivisionByZero;

/// The unique `(s, r)` with `b = a*s + r` and `r < a`.
pub fn euclid_div(b: &BigNat, a: &BigNat) -> Result<(BigNat, BigNat), DivisionByZero> {
    if a.is_zero() {
        return Err(DivisionByZero);
    }
    Ok(b.div_rem(a))
}

/// `x | y`, written `exists z (z <= y & x * z = y)`. `z` must not occur in
/// `x` or `y`.
pub fn divides(x: Term, y: Term, z: Var) -> Formula {
    Formula::exists(
        z,
        Formula::and(
            Formula::le(Term::Var(z), y.clone()),
            Formula::eq(Term::mul(x, Term::Var(z)), y),
        ),
    )
}

/// `p != 0 & p != 1 & forall x <= p (x | p -> p = x | x = 1)` with `p = x_p`.
/// Uses `x_{p+1}` and `x_{p+2}` as bound variables.
pub fn prim_formula(p: Var) -> Formula {
    let (x, z) = (p + 1, p + 2);
    let pv = Term::Var(p);
    let xv = Term::Var(x);
    let clause = Formula::implies(
        divides(xv.clone(), pv.clone(), z),
        Formula::or(
            Formula::eq(pv.clone(), xv.clone()),
            Formula::eq(xv.clone(), Term::One),
        ),
    );
    Formula::and(
        Formula::and(
            Formula::not(Formula::eq(pv.clone(), Term::Zero)),
            Formula::not(Formula::eq(pv.clone(), Term::One)),
        ),
        Formula::forall(x, Formula::implies(Formula::le(xv, pv), clause)),
    )
}

/// Irreducibility `forall y (y | x -> y = 1 | y = x)` restricted to divisors
/// `1 <= y <= x`. For `x >= 1` the restriction does not change the truth value,
/// since no other `y` divides `x`. Uses `x_{x+1}` and `x_{x+2}` as bound variables.
pub fn irred_formula(x: Var) -> Formula {
    let (y, z) = (x + 1, x + 2);
    let xv = Term::Var(x);
    let yv = Term::Var(y);
    let premise = Formula::and(
        Formula::not(Formula::eq(yv.clone(), Term::Zero)),
        divides(yv.clone(), xv.clone(), z),
    );
    let conclusion = Formula::or(
        Formula::eq(yv.clone(), Term::One),
        Formula::eq(yv.clone(), xv.clone()),
    );
    Formula::forall(
        y,
        Formula::implies(Formula::le(yv, xv), Formula::implies(premise, conclusion)),
    )
}
