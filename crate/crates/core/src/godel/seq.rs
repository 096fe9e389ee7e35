//! Sequence and set codes: `encode_seq([a_0, ..., a_k]) = prod p_i^(a_i + 1)`.

use num_traits::{One, Pow, Zero};
use serde_json::{json, Value};

use super::primes::{nth_prime, nth_prime_u64, primes};
use crate::BigNat;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeqError {
    #[error("NotASeq: {0} is not a sequence code")]
    NotASeq(BigNat),
    #[error("IndexOutOfRange: index {index} past the last index {last:?}")]
    IndexOutOfRange { index: usize, last: Option<usize> },
    #[error("ZeroElement: a set code cannot represent the element 0")]
    ZeroElement,
    #[error("NotIncreasing: set elements must be strictly increasing")]
    NotIncreasing,
    #[error("NotASetCode: {0} is not a set code")]
    NotASetCode(BigNat),
}

/// Multiplicity of `p` in `a` and the cofactor `a / p^e`. Divides by
/// `p^(2^j)` for descending `j`, so large exponents cost `O(log e)` divisions.
pub(crate) fn split_prime_power(a: &BigNat, p: u64) -> (u64, BigNat) {
    use num_integer::Integer;
    if a.is_zero() {
        return (0, a.clone());
    }
    let mut rest = a.clone();
    let mut powers = vec![BigNat::from(p)];
    loop {
        let (q, r) = rest.div_rem(powers.last().expect("nonempty"));
        if !r.is_zero() {
            break;
        }
        rest = q;
        let sq = powers.last().expect("nonempty") * powers.last().expect("nonempty");
        powers.push(sq);
    }
    // rest = a / p^(2^len - 1) after the loop consumed 2^0 + ... + 2^(len-2)
    let mut e: u64 = (1u64 << (powers.len() - 1)) - 1;
    for (j, pw) in powers.iter().enumerate().rev() {
        let (q, r) = rest.div_rem(pw);
        if r.is_zero() {
            rest = q;
            e += 1 << j;
        }
    }
    (e, rest)
}

/// Exponents of `p_0, p_1, ...` in `a`, provided the prime support of `a`
/// is exactly an initial segment of the primes. `None` otherwise (and for 0).
pub(crate) fn contiguous_exponents(a: &BigNat) -> Option<Vec<u64>> {
    if a.is_zero() {
        return None;
    }
    let mut rest = a.clone();
    let mut out = Vec::new();
    for p in primes() {
        if rest.is_one() {
            return Some(out);
        }
        let (e, q) = split_prime_power(&rest, p);
        if e == 0 {
            return None;
        }
        out.push(e);
        rest = q;
    }
    unreachable!("primes() is infinite")
}

/// Product of `p_i^(exponents[i])`.
pub(crate) fn prime_power_product(exponents: impl IntoIterator<Item = u64>) -> BigNat {
    exponents
        .into_iter()
        .enumerate()
        .fold(BigNat::one(), |acc, (i, e)| {
            acc * Pow::pow(BigNat::from(nth_prime_u64(i)), e)
        })
}

/// A number satisfying `Seq`: `1`, or a number whose prime support is
/// contiguous from `p_0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeqCode(BigNat);

impl SeqCode {
    pub fn new(value: BigNat) -> Result<Self, SeqError> {
        if is_seq(&value) {
            Ok(SeqCode(value))
        } else {
            Err(SeqError::NotASeq(value))
        }
    }

    pub fn empty() -> Self {
        SeqCode(BigNat::one())
    }

    pub fn value(&self) -> &BigNat {
        &self.0
    }

    pub fn into_value(self) -> BigNat {
        self.0
    }

    pub fn elements(&self) -> Vec<u64> {
        contiguous_exponents(&self.0)
            .expect("SeqCode invariant")
            .into_iter()
            .map(|e| e - 1)
            .collect()
    }

    /// Last index (`Long`), or `None` for the empty sequence.
    pub fn last_index(&self) -> Option<usize> {
        self.elements().len().checked_sub(1)
    }

    pub fn to_json(&self) -> Value {
        json!({"code": self.0.to_string(), "elements": self.elements()})
    }
}

pub fn is_seq(a: &BigNat) -> bool {
    a.is_one() || contiguous_exponents(a).is_some()
}

pub fn encode_seq(xs: &[u64]) -> SeqCode {
    SeqCode(prime_power_product(xs.iter().map(|x| x + 1)))
}

pub fn decode_seq(a: &BigNat) -> Result<Vec<u64>, SeqError> {
    Ok(SeqCode::new(a.clone())?.elements())
}

/// `Long(a)`: `0` when `a = 1` or `a` is not a sequence code, otherwise the
/// largest `i` with `p_i | a` (the last index, not the element count).
pub fn seq_long(a: &BigNat) -> usize {
    match contiguous_exponents(a) {
        Some(es) if !es.is_empty() => es.len() - 1,
        _ => 0,
    }
}

/// `(a)_x`: the exponent of `p_x` in `a`, minus one.
pub fn seq_at(a: &BigNat, x: usize) -> Result<u64, SeqError> {
    let code = SeqCode::new(a.clone())?;
    let elements = code.elements();
    elements
        .get(x)
        .copied()
        .ok_or(SeqError::IndexOutOfRange {
            index: x,
            last: elements.len().checked_sub(1),
        })
}

/// `a * b = a * prod_{x <= Long(b)} p_{Long(a)+x+1}^((b)_x + 1)`, with the
/// empty code as a two-sided identity.
pub fn seq_concat(a: &SeqCode, b: &SeqCode) -> SeqCode {
    if a.0.is_one() {
        return b.clone();
    }
    if b.0.is_one() {
        return a.clone();
    }
    let offset = seq_long(&a.0) + 1;
    let tail = b
        .elements()
        .into_iter()
        .enumerate()
        .fold(BigNat::one(), |acc, (x, bx)| {
            acc * Pow::pow(nth_prime(offset + x), bx + 1)
        });
    SeqCode(&a.0 * tail)
}

/// `prod p_i^(a_i)` for a strictly increasing list of positive elements.
pub fn encode_set(xs: &[u64]) -> Result<BigNat, SeqError> {
    if xs.contains(&0) {
        return Err(SeqError::ZeroElement);
    }
    if xs.windows(2).any(|w| w[0] >= w[1]) {
        return Err(SeqError::NotIncreasing);
    }
    Ok(prime_power_product(xs.iter().copied()))
}

pub fn decode_set(code: &BigNat) -> Result<Vec<u64>, SeqError> {
    let es = contiguous_exponents(code).ok_or_else(|| SeqError::NotASetCode(code.clone()))?;
    if es.windows(2).any(|w| w[0] >= w[1]) {
        return Err(SeqError::NotASetCode(code.clone()));
    }
    Ok(es)
}

/// Rebuilds `a` as `prod_{i <= Long(a)} p_i^((a)_i + 1)`.
pub fn remark_product(a: &SeqCode) -> BigNat {
    if a.0.is_one() {
        return BigNat::one();
    }
    (0..=seq_long(&a.0))
        .map(|i| seq_at(&a.0, i).expect("index within Long"))
        .enumerate()
        .fold(BigNat::one(), |acc, (i, ai)| {
            acc * Pow::pow(nth_prime(i), ai + 1)
        })
}
