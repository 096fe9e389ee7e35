//! Gödel codes of partitions, built in three steps:
//!
//! 1. each `n`-subset `{a_1 < .. < a_n}` becomes the sequence code
//!    `prod p_i^(a_i + 1)`;
//! 2. each subset code `s` with color `c` becomes the pair `<s, c>`;
//! 3. the pairs, in colex order of the subsets, are coded as a sequence.
//!
//! The step-3 code is astronomically large beyond tiny partitions (for
//! `[7]^3` some pairs exceed `10^18`, and they sit in the exponents), so a
//! [`PartitionCode`] keeps the list of pairs and materializes the number
//! only on request and under a size limit.

use num_traits::{Pow, ToPrimitive, Zero};
use serde_json::{json, Value};

use super::partition::{Partition, Subsets};
use super::RamseyError;
use crate::godel::{contiguous_exponents, decode_seq, encode_seq, nth_prime_u64, pair, unpair};
use crate::BigNat;

/// Default limit on the bit length of a materialized partition code.
pub const DEFAULT_MAX_CODE_BITS: u64 = 1 << 24;

/// A partition code in factored form: the exponent of `p_i` in the code is
/// `elements[i] + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionCode {
    elements: Vec<BigNat>,
}

impl PartitionCode {
    pub fn from_elements(elements: Vec<BigNat>) -> Self {
        PartitionCode { elements }
    }

    /// The step-2 pairs, one per subset.
    pub fn elements(&self) -> &[BigNat] {
        &self.elements
    }

    /// Upper estimate of the bit length of the code.
    pub fn estimated_bits(&self) -> u64 {
        let bits: f64 = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let exp = e.to_f64().unwrap_or(f64::INFINITY) + 1.0;
                exp * (nth_prime_u64(i) as f64).log2()
            })
            .sum();
        if bits.is_finite() && bits < u64::MAX as f64 {
            bits.ceil() as u64 + 1
        } else {
            u64::MAX
        }
    }

    /// The code as a number, unless it would need more than `max_bits` bits.
    pub fn to_bignat(&self, max_bits: u64) -> Result<BigNat, RamseyError> {
        let bits = self.estimated_bits();
        if bits > max_bits {
            return Err(RamseyError::CodeTooLarge {
                bits,
                limit: max_bits,
            });
        }
        Ok(self.elements.iter().enumerate().fold(BigNat::from(1u32), |acc, (i, e)| {
            let exp = e.to_u64().expect("bounded by the bit estimate") + 1;
            acc * Pow::pow(BigNat::from(nth_prime_u64(i)), exp)
        }))
    }

    pub fn from_bignat(code: &BigNat) -> Result<Self, RamseyError> {
        if code == &BigNat::from(1u32) {
            return Ok(PartitionCode { elements: vec![] });
        }
        let exps = contiguous_exponents(code)
            .ok_or_else(|| RamseyError::NotACode(format!("{code} is not a sequence code")))?;
        Ok(PartitionCode {
            elements: exps.into_iter().map(|e| BigNat::from(e - 1)).collect(),
        })
    }

    /// `{"code": decimal or null when over max_bits, "elements": [decimal, ..]}`
    pub fn to_json(&self, max_bits: u64) -> Value {
        let code = self.to_bignat(max_bits).ok().map(|c| c.to_string());
        let elements: Vec<String> = self.elements.iter().map(BigNat::to_string).collect();
        json!({"code": code, "elements": elements})
    }
}

pub fn encode_partition(p: &Partition) -> PartitionCode {
    let elements = p
        .entries()
        .map(|(s, c)| {
            let idx: Vec<u64> = s.iter().map(|&x| x as u64).collect();
            pair(encode_seq(&idx).value(), &BigNat::from(c))
        })
        .collect();
    PartitionCode { elements }
}

/// Inverse of [`encode_partition`] for the shape `[m]^n -> r`. Anything
/// other than the exact code of such a partition is rejected.
pub fn decode_partition(
    code: &PartitionCode,
    m: usize,
    n: usize,
    r: u32,
) -> Result<Partition, RamseyError> {
    let subsets = Subsets::new(m, n);
    let expected = super::binom(m, n).unwrap_or(usize::MAX);
    if code.elements.len() != expected {
        return Err(RamseyError::NotACode(format!(
            "{} entries where [{m}]^{n} has {expected} subsets",
            code.elements.len()
        )));
    }
    let mut colors = Vec::with_capacity(expected);
    for (i, (e, subset)) in code.elements.iter().zip(subsets).enumerate() {
        let (s, c) = unpair(e);
        let want: Vec<u64> = subset.iter().map(|&x| x as u64).collect();
        if s.is_zero() || decode_seq(&s).ok().as_deref() != Some(&want[..]) {
            return Err(RamseyError::NotACode(format!(
                "entry {i} does not code the subset {subset:?}"
            )));
        }
        let c = c
            .to_u32()
            .filter(|&c| c < r)
            .ok_or_else(|| RamseyError::NotACode(format!("entry {i} has a color outside 0..{r}")))?;
        colors.push(c);
    }
    Partition::new(m, n, r, colors)
}
