//! Reductions between partitions that preserve which large sets are
//! homogeneous.

use num_integer::Roots;
use num_traits::One;

use super::partition::Partition;
use super::RamseyError;
use crate::BigNat;

/// `P(a) = P0(a) * r1 + P1(a)`: homogeneous exactly where both factors are.
pub fn product_partition(p0: &Partition, p1: &Partition) -> Result<Partition, RamseyError> {
    if p0.m() != p1.m() || p0.n() != p1.n() {
        return Err(RamseyError::ShapeMismatch(format!(
            "[{}]^{} against [{}]^{}",
            p0.m(),
            p0.n(),
            p1.m(),
            p1.n()
        )));
    }
    let r = p0.r().checked_mul(p1.r()).ok_or_else(|| {
        RamseyError::ShapeMismatch(format!("{} * {} colors overflow", p0.r(), p1.r()))
    })?;
    let colors = p0
        .colors()
        .iter()
        .zip(p1.colors())
        .map(|(&a, &b)| a * p1.r() + b)
        .collect();
    Partition::new(p0.m(), p0.n(), r, colors)
}

/// Least `s` with `s * s >= r`.
pub fn ceil_sqrt(r: u64) -> u64 {
    let s = r.sqrt();
    if s * s < r {
        s + 1
    } else {
        s
    }
}

/// From `P` of arity `e` with `r` colors, a partition `P'` of arity `e + 1`
/// with `1 + 2s` colors, `s = ceil_sqrt(r)`, such that every `H` with
/// `|H| > e + 1` is homogeneous for `P'` iff it is for `P`.
///
/// Writing `P = s*Q + R` and `b'` for the first `e` elements of `b`:
/// `P'(b) = 0` if `b` is `P`-homogeneous, `1 + R(b')` if it is only
/// `Q`-homogeneous, and `1 + s + Q(b')` otherwise.
pub fn raise_arity(p: &Partition) -> Result<Partition, RamseyError> {
    let (m, e) = (p.m(), p.n());
    if m < e + 2 {
        return Err(RamseyError::ShapeMismatch(format!(
            "raising arity {e} needs a ground set of at least {} elements, got {m}",
            e + 2
        )));
    }
    let s = u32::try_from(ceil_sqrt(u64::from(p.r()))).expect("sqrt of a u32");
    let mut face = vec![0; e];
    Partition::from_fn(m, e + 1, 1 + 2 * s, |b| {
        let mut p_color = None;
        let mut q_color = None;
        let (mut p_homog, mut q_homog) = (true, true);
        for skip in 0..=e {
            let mut j = 0;
            for (i, &x) in b.iter().enumerate() {
                if i != skip {
                    face[j] = x;
                    j += 1;
                }
            }
            let c = p.color(&face);
            p_homog &= *p_color.get_or_insert(c) == c;
            q_homog &= *q_color.get_or_insert(c / s) == c / s;
        }
        let prefix = p.color(&b[..e]);
        if p_homog {
            0
        } else if q_homog {
            1 + prefix % s
        } else {
            1 + s + prefix / s
        }
    })
}

/// One partition of arity `max e_i` whose homogeneous sets of size above
/// that arity are exactly the common homogeneous sets of the inputs. Each
/// input is raised to the top arity, then all are multiplied together.
pub fn combine(ps: &[Partition]) -> Result<Partition, RamseyError> {
    let first = ps
        .first()
        .ok_or_else(|| RamseyError::ShapeMismatch("no partitions to combine".into()))?;
    let m = first.m();
    if let Some(p) = ps.iter().find(|p| p.m() != m) {
        return Err(RamseyError::ShapeMismatch(format!(
            "ground sets {m} and {} differ",
            p.m()
        )));
    }
    let e = ps.iter().map(Partition::n).max().expect("nonempty");
    let mut raised = ps.iter().map(|p| {
        let mut q = p.clone();
        while q.n() < e {
            q = raise_arity(&q)?;
        }
        Ok(q)
    });
    let init = raised.next().expect("nonempty")?;
    raised.try_fold(init, |acc, q| product_partition(&acc, &q?))
}

/// `prod_i max(r_i, 7)`, the color count claimed for a combination without
/// a construction. Reported next to the count [`combine`] achieves.
pub fn product_color_bound(ps: &[Partition]) -> BigNat {
    ps.iter()
        .fold(BigNat::one(), |acc, p| acc * p.r().max(7))
}
