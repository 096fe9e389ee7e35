use super::{Formula, Term, Var};

pub fn substitute_term(t: &Term, v: Var, replacement: &Term) -> Term {
    match t {
        Term::Var(i) if *i == v => replacement.clone(),
        Term::Zero | Term::One | Term::Var(_) => t.clone(),
        Term::Add(a, b) => Term::add(
            substitute_term(a, v, replacement),
            substitute_term(b, v, replacement),
        ),
        Term::Mul(a, b) => Term::mul(
            substitute_term(a, v, replacement),
            substitute_term(b, v, replacement),
        ),
    }
}

/// Capture-avoiding substitution of `t` for the free occurrences of `x_v`.
///
/// A binder that would capture a variable of `t` is renamed to the smallest
/// index occurring neither in the quantified subformula nor in `t`.
pub fn substitute(f: &Formula, v: Var, t: &Term) -> Formula {
    match f {
        Formula::Eq(a, b) => Formula::Eq(substitute_term(a, v, t), substitute_term(b, v, t)),
        Formula::Lt(a, b) => Formula::Lt(substitute_term(a, v, t), substitute_term(b, v, t)),
        Formula::Not(g) => Formula::not(substitute(g, v, t)),
        Formula::And(a, b) => Formula::and(substitute(a, v, t), substitute(b, v, t)),
        Formula::Or(a, b) => Formula::or(substitute(a, v, t), substitute(b, v, t)),
        Formula::Implies(a, b) => Formula::implies(substitute(a, v, t), substitute(b, v, t)),
        Formula::ForAll(w, body) | Formula::Exists(w, body) => {
            if *w == v || !body.is_free(v) {
                return f.clone();
            }
            let (w, body) = if t.contains_var(*w) {
                let mut used = f.vars();
                t.collect_vars(&mut used);
                used.insert(v);
                let fresh = (0..).find(|i| !used.contains(i)).expect("finite variable set");
                (fresh, substitute(body, *w, &Term::Var(fresh)))
            } else {
                (*w, (**body).clone())
            };
            let body = substitute(&body, v, t);
            match f {
                Formula::ForAll(..) => Formula::forall(w, body),
                _ => Formula::exists(w, body),
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("InvalidSchemaVariables: induction variable x{var} is repeated among the parameters {params:?}")]
pub struct InvalidSchemaVariables {
    pub var: Var,
    pub params: Vec<Var>,
}

/// The induction-schema instance
/// `forall params [ (phi(0) & forall x (phi(x) -> phi(x+1))) -> forall x phi(x) ]`,
/// with `params[0]` as the outermost quantifier.
pub fn induction_instance(
    phi: &Formula,
    x: Var,
    params: &[Var],
) -> Result<Formula, InvalidSchemaVariables> {
    let repeated = params.contains(&x)
        || params.iter().enumerate().any(|(i, p)| params[..i].contains(p));
    if repeated {
        return Err(InvalidSchemaVariables {
            var: x,
            params: params.to_vec(),
        });
    }
    let base = substitute(phi, x, &Term::Zero);
    let succ = substitute(phi, x, &Term::add(Term::Var(x), Term::One));
    let step = Formula::forall(x, Formula::implies(phi.clone(), succ));
    let conclusion = Formula::forall(x, phi.clone());
    let mut body = Formula::implies(Formula::and(base, step), conclusion);
    for p in params.iter().rev() {
        body = Formula::forall(*p, body);
    }
    Ok(body)
}
