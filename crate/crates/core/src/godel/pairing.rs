use crate::BigNat;

/// `<x, y> = (x + y)(x + y + 1)/2 + y`.
pub fn pair(x: &BigNat, y: &BigNat) -> BigNat {
    let s = x + y;
    (&s * (&s + 1u32)) / 2u32 + y
}

/// Inverse of [`pair`]: the unique `(x, y)` with `pair(x, y) == z`.
pub fn unpair(z: &BigNat) -> (BigNat, BigNat) {
    // largest w with w(w+1)/2 <= z
    let w = ((z * 8u32 + 1u32).sqrt() - 1u32) / 2u32;
    let triangle = (&w * (&w + 1u32)) / 2u32;
    let y = z - triangle;
    let x = &w - &y;
    (x, y)
}

pub fn pair_u64(x: u64, y: u64) -> BigNat {
    pair(&BigNat::from(x), &BigNat::from(y))
}
