use std::sync::RwLock;

use num_traits::{One, ToPrimitive};

use crate::formula::{eval_nat, prim_formula, Env};
use crate::BigNat;

// Primes found so far, in order. Only ever extended, so readers see a
// prefix of the same sequence whatever the interleaving.
static PRIMES: RwLock<Vec<u64>> = RwLock::new(Vec::new());

fn sieve(limit: u64) -> Vec<u64> {
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= limit {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

fn upper_bound(n: usize) -> u64 {
    // p_n < n (ln n + ln ln n) for n >= 6 (1-indexed)
    let k = (n + 1) as f64;
    if n < 6 {
        15
    } else {
        (k * (k.ln() + k.ln().ln())).ceil() as u64 + 1
    }
}

/// The `n`-th prime as a machine word, 0-indexed (`p_0 = 2`).
pub fn nth_prime_u64(n: usize) -> u64 {
    if let Some(&p) = PRIMES.read().expect("prime cache poisoned").get(n) {
        return p;
    }
    let mut cache = PRIMES.write().expect("prime cache poisoned");
    if cache.len() <= n {
        let target = (n + 1).max(2 * cache.len());
        *cache = sieve(upper_bound(target - 1));
    }
    cache[n]
}

/// The `n`-th prime, 0-indexed (`p_0 = 2`).
pub fn nth_prime(n: usize) -> BigNat {
    BigNat::from(nth_prime_u64(n))
}

/// `p_0, p_1, p_2, ...`
pub fn primes() -> impl Iterator<Item = u64> {
    (0..).map(nth_prime_u64)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    primes()
        .take_while(|p| p.saturating_mul(*p) <= n)
        .all(|p| !n.is_multiple_of(p))
}

/// Least `y < bound` satisfying `g`, or `bound` itself when there is none.
pub fn bounded_mu(bound: u64, mut g: impl FnMut(u64) -> bool) -> u64 {
    (0..bound).find(|&y| g(y)).unwrap_or(bound)
}

/// [`bounded_mu`] over arbitrary-precision bounds.
pub fn bounded_mu_big(bound: &BigNat, mut g: impl FnMut(&BigNat) -> bool) -> BigNat {
    let mut y = BigNat::default();
    while &y < bound {
        if g(&y) {
            return y;
        }
        y += 1u32;
    }
    bound.clone()
}

/// `p_0 = 2`, `p_{k+1} = mu x < p_k! + 1 [p_k < x & Prim(x)]`, with `Prim`
/// decided by evaluating the primality formula. Cross-check for the sieve.
pub fn nth_prime_by_mu(n: usize) -> BigNat {
    let prim = prim_formula(0);
    let mut p = BigNat::from(2u32);
    for _ in 0..n {
        let factorial = (2..=p.to_u64().expect("small index"))
            .fold(BigNat::one(), |acc, k| acc * k);
        let bound = factorial + 1u32;
        let prev = p.clone();
        p = bounded_mu_big(&bound, |x| {
            &prev < x
                && eval_nat(&prim, &Env::from([(0, x.clone())]), 0)
                    .expect("Prim has only bounded quantifiers")
        });
    }
    p
}
