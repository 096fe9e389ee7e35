use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::def::PrError;
use crate::BigNat;

/// The `z < y` with `x * z = 1 (mod y)`; `0` when `y = 1`.
pub fn bezout_inverse(x: &BigNat, y: &BigNat) -> Result<BigNat, PrError> {
    let not_coprime = || PrError::NotCoprime {
        x: x.to_string(),
        y: y.to_string(),
    };
    if y.is_zero() {
        return Err(not_coprime());
    }
    if y.is_one() {
        return Ok(BigNat::zero());
    }
    let xi = BigInt::from_biguint(Sign::Plus, x.clone());
    let yi = BigInt::from_biguint(Sign::Plus, y.clone());
    let e = xi.extended_gcd(&yi);
    if !e.gcd.is_one() {
        return Err(not_coprime());
    }
    Ok(e.x.mod_floor(&yi).to_biguint().expect("mod_floor by a positive modulus"))
}
