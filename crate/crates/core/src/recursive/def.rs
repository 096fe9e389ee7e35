use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PrError {
    #[error("ArityMismatch: expected {expected} arguments, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("IllFormed: {0}")]
    IllFormed(String),
    #[error("SyntaxError at byte {offset}: {message}")]
    SyntaxError { offset: usize, message: String },
    #[error("UnknownName: {0}")]
    UnknownName(String),
    #[error("NotCoprime: {x} and {y} share a divisor other than 1")]
    NotCoprime { x: String, y: String },
}

/// A definition tree. Arguments are numbered from 1 in `Proj`.
///
/// - `ZeroFn(x) = 0`, `Succ(x) = x + 1`, `Proj(i, n)(x_1..x_n) = x_i`
/// - `Comp(f, [g_1..g_k])(y) = f(g_1(y), .., g_k(y))`
/// - `PrimRec(f, g)(x, 0) = f(x)`, `PrimRec(f, g)(x, y+1) = g(x, y, h(x, y))`
/// - `Mu(g)(x) = least y with g(x, y) = 0`
/// - `BoundedMu(g)(x, b) = least y < b with g(x, y) = 0`, or `b` if none
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PRDef {
    ZeroFn,
    Succ,
    Proj(usize, usize),
    Comp(Box<PRDef>, Vec<PRDef>),
    PrimRec(Box<PRDef>, Box<PRDef>),
    BoundedMu(Box<PRDef>),
    Mu(Box<PRDef>),
}

impl PRDef {
    pub fn proj(i: usize, n: usize) -> PRDef {
        PRDef::Proj(i, n)
    }

    pub fn comp(f: PRDef, gs: Vec<PRDef>) -> PRDef {
        PRDef::Comp(Box::new(f), gs)
    }

    pub fn primrec(base: PRDef, step: PRDef) -> PRDef {
        PRDef::PrimRec(Box::new(base), Box::new(step))
    }

    pub fn bounded_mu(g: PRDef) -> PRDef {
        PRDef::BoundedMu(Box::new(g))
    }

    pub fn mu(g: PRDef) -> PRDef {
        PRDef::Mu(Box::new(g))
    }

    /// The unique arity, checking every structural invariant on the way.
    pub fn arity(&self) -> Result<usize, PrError> {
        match self {
            PRDef::ZeroFn | PRDef::Succ => Ok(1),
            PRDef::Proj(i, n) => {
                if 1 <= *i && i <= n {
                    Ok(*n)
                } else {
                    Err(PrError::IllFormed(format!("proj {i} {n}: need 1 <= i <= n")))
                }
            }
            PRDef::Comp(f, gs) => {
                let fa = f.arity()?;
                if gs.is_empty() {
                    return Err(PrError::IllFormed("comp needs at least one inner function".into()));
                }
                if fa != gs.len() {
                    return Err(PrError::IllFormed(format!(
                        "comp: outer function has arity {fa} but {} inner functions",
                        gs.len()
                    )));
                }
                let first = gs[0].arity()?;
                for (j, g) in gs.iter().enumerate().skip(1) {
                    let a = g.arity()?;
                    if a != first {
                        return Err(PrError::IllFormed(format!(
                            "comp: inner function {} has arity {a}, expected {first}",
                            j + 1
                        )));
                    }
                }
                Ok(first)
            }
            PRDef::PrimRec(f, g) => {
                let k = f.arity()?;
                let ga = g.arity()?;
                if ga != k + 2 {
                    return Err(PrError::IllFormed(format!(
                        "primrec: base has arity {k}, so step needs arity {} but has {ga}",
                        k + 2
                    )));
                }
                Ok(k + 1)
            }
            PRDef::Mu(g) => {
                let ga = g.arity()?;
                ga.checked_sub(1)
                    .ok_or_else(|| PrError::IllFormed("mu over a function of arity 0".into()))
            }
            // the bound takes the place of the searched argument
            PRDef::BoundedMu(g) => g.arity(),
        }
    }

    pub fn is_mu_free(&self) -> bool {
        match self {
            PRDef::ZeroFn | PRDef::Succ | PRDef::Proj(..) => true,
            PRDef::Comp(f, gs) => f.is_mu_free() && gs.iter().all(PRDef::is_mu_free),
            PRDef::PrimRec(f, g) => f.is_mu_free() && g.is_mu_free(),
            PRDef::BoundedMu(g) => g.is_mu_free(),
            PRDef::Mu(_) => false,
        }
    }

    pub fn size(&self) -> usize {
        match self {
            PRDef::ZeroFn | PRDef::Succ | PRDef::Proj(..) => 1,
            PRDef::Comp(f, gs) => 1 + f.size() + gs.iter().map(PRDef::size).sum::<usize>(),
            PRDef::PrimRec(f, g) => 1 + f.size() + g.size(),
            PRDef::BoundedMu(g) | PRDef::Mu(g) => 1 + g.size(),
        }
    }
}

/// The s-expression form accepted by [`crate::recursive::parse_def`].
impl fmt::Display for PRDef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PRDef::ZeroFn => f.write_str("zero"),
            PRDef::Succ => f.write_str("succ"),
            PRDef::Proj(i, n) => write!(f, "(proj {i} {n})"),
            PRDef::Comp(h, gs) => {
                write!(f, "(comp {h}")?;
                for g in gs {
                    write!(f, " {g}")?;
                }
                f.write_str(")")
            }
            PRDef::PrimRec(b, s) => write!(f, "(primrec {b} {s})"),
            PRDef::BoundedMu(g) => write!(f, "(bmu {g})"),
            PRDef::Mu(g) => write!(f, "(mu {g})"),
        }
    }
}
