use num_traits::Zero;

use super::def::{PRDef, PrError};
use crate::BigNat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalOutcome {
    Value(BigNat),
    /// Semantic divergence. Kept for completeness; [`eval`] never returns it
    /// because divergence of a μ-search is undecidable.
    Undefined,
    BudgetExhausted,
}

impl EvalOutcome {
    pub fn value(&self) -> Option<&BigNat> {
        match self {
            EvalOutcome::Value(v) => Some(v),
            _ => None,
        }
    }
}

struct OutOfFuel;

struct Machine {
    fuel: u64,
    used: u64,
}

impl Machine {
    fn step(&mut self) -> Result<(), OutOfFuel> {
        if self.used >= self.fuel {
            return Err(OutOfFuel);
        }
        self.used += 1;
        Ok(())
    }

    fn run(&mut self, d: &PRDef, args: &[BigNat]) -> Result<BigNat, OutOfFuel> {
        self.step()?;
        match d {
            PRDef::ZeroFn => Ok(BigNat::zero()),
            PRDef::Succ => Ok(&args[0] + 1u32),
            PRDef::Proj(i, _) => Ok(args[i - 1].clone()),
            PRDef::Comp(f, gs) => {
                let inner = gs
                    .iter()
                    .map(|g| self.run(g, args))
                    .collect::<Result<Vec<_>, _>>()?;
                self.run(f, &inner)
            }
            PRDef::PrimRec(f, g) => {
                let (y, xs) = args.split_last().expect("arity >= 1");
                let mut acc = self.run(f, xs)?;
                let mut buf: Vec<BigNat> = xs.to_vec();
                buf.push(BigNat::zero());
                buf.push(BigNat::zero());
                let k = xs.len();
                let mut i = BigNat::zero();
                while &i < y {
                    buf[k] = i.clone();
                    buf[k + 1] = acc;
                    acc = self.run(g, &buf)?;
                    i += 1u32;
                }
                Ok(acc)
            }
            PRDef::Mu(g) => self.search(g, args, None),
            PRDef::BoundedMu(g) => {
                let (b, xs) = args.split_last().expect("arity >= 1");
                self.search(g, xs, Some(b))
            }
        }
    }

    fn search(
        &mut self,
        g: &PRDef,
        xs: &[BigNat],
        bound: Option<&BigNat>,
    ) -> Result<BigNat, OutOfFuel> {
        let mut buf = xs.to_vec();
        buf.push(BigNat::zero());
        let k = xs.len();
        loop {
            if let Some(b) = bound {
                if &buf[k] >= b {
                    return Ok(b.clone());
                }
            }
            self.step()?;
            if self.run(g, &buf)?.is_zero() {
                return Ok(buf.swap_remove(k));
            }
            buf[k] += 1u32;
        }
    }
}

/// Evaluates `d` at `args` within `fuel` steps. One step is charged per node
/// visit and one per increment of a μ-search.
pub fn eval(d: &PRDef, args: &[BigNat], fuel: u64) -> Result<EvalOutcome, PrError> {
    let expected = d.arity()?;
    if args.len() != expected {
        return Err(PrError::ArityMismatch {
            expected,
            found: args.len(),
        });
    }
    let mut m = Machine { fuel, used: 0 };
    Ok(match m.run(d, args) {
        Ok(v) => EvalOutcome::Value(v),
        Err(OutOfFuel) => EvalOutcome::BudgetExhausted,
    })
}

pub fn eval_u64(d: &PRDef, args: &[u64], fuel: u64) -> Result<EvalOutcome, PrError> {
    let args: Vec<BigNat> = args.iter().map(|&a| BigNat::from(a)).collect();
    eval(d, &args, fuel)
}
