use num_traits::ToPrimitive;

use super::RamseyError;
use crate::BigNat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FastGrowingBudget {
    pub max_result_bits: u64,
    /// Counts every application of every `f_j` made along the way.
    pub max_iterations: u64,
}

impl Default for FastGrowingBudget {
    fn default() -> Self {
        FastGrowingBudget {
            max_result_bits: 1 << 20,
            max_iterations: 10_000_000,
        }
    }
}

struct Run {
    budget: FastGrowingBudget,
    iterations: u64,
}

impl Run {
    fn exceeded(&self, reason: String) -> RamseyError {
        RamseyError::BudgetExceeded {
            iterations: self.iterations,
            reason,
        }
    }

    fn apply(&mut self, level: u32, x: BigNat) -> Result<BigNat, RamseyError> {
        if self.iterations >= self.budget.max_iterations {
            return Err(self.exceeded(format!(
                "iteration budget of {} used up",
                self.budget.max_iterations
            )));
        }
        self.iterations += 1;
        if level == 0 {
            let v = x + 2u32;
            if v.bits() > self.budget.max_result_bits {
                return Err(self.exceeded(format!(
                    "value exceeds {} bits",
                    self.budget.max_result_bits
                )));
            }
            return Ok(v);
        }
        // past u64::MAX steps the iteration budget fires first
        let times = x.to_u64().unwrap_or(u64::MAX);
        let mut v = BigNat::from(2u32);
        for _ in 0..times {
            v = self.apply(level - 1, v)?;
        }
        Ok(v)
    }
}

/// `f_0(x) = x + 2`, `f_{n+1}(x) = f_n^(x)(2)`, computed by literal iteration.
pub fn fast_growing(n: u32, x: &BigNat, budget: FastGrowingBudget) -> Result<BigNat, RamseyError> {
    if budget.max_iterations == 0 || budget.max_result_bits == 0 {
        return Err(RamseyError::InvalidParameters(
            "fast-growing budgets must be positive".into(),
        ));
    }
    let mut run = Run {
        budget,
        iterations: 0,
    };
    run.apply(n, x.clone())
}
