use serde::Serialize;

use super::partition::{binom, Partition, Subsets};
use super::RamseyError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomogReport {
    pub set: Vec<usize>,
    pub homogeneous: bool,
    /// The common color when homogeneous.
    pub color: Option<u32>,
    pub size: usize,
    pub relatively_large: bool,
}

fn check_set(p: &Partition, h: &[usize], min_len: usize) -> Result<(), RamseyError> {
    if h.windows(2).any(|w| w[0] >= w[1]) {
        return Err(RamseyError::BadSubset(format!("{h:?} is not strictly ascending")));
    }
    if let Some(&x) = h.iter().find(|&&x| x >= p.m()) {
        return Err(RamseyError::BadSubset(format!(
            "{x} is outside the ground set 0..{}",
            p.m()
        )));
    }
    if h.len() < min_len {
        return Err(RamseyError::BadSubset(format!(
            "{h:?} has fewer than {min_len} elements"
        )));
    }
    Ok(())
}

/// The common color of the `n`-subsets of `h`, if there is one.
fn common_color(p: &Partition, h: &[usize]) -> Option<u32> {
    let mut color = None;
    let mut buf = vec![0; p.n()];
    for idx in Subsets::new(h.len(), p.n()) {
        for (b, i) in buf.iter_mut().zip(&idx) {
            *b = h[*i];
        }
        let c = p.color(&buf);
        match color {
            None => color = Some(c),
            Some(prev) if prev != c => return None,
            _ => {}
        }
    }
    color
}

/// Whether `p` is constant on the `n`-subsets of the sorted set `h`.
pub fn is_homogeneous(p: &Partition, h: &[usize]) -> Result<bool, RamseyError> {
    check_set(p, h, p.n())?;
    Ok(common_color(p, h).is_some())
}

/// `|h| >= min h`.
pub fn is_relatively_large(h: &[usize]) -> Result<bool, RamseyError> {
    let min = h.iter().min().ok_or(RamseyError::EmptySet)?;
    Ok(h.len() >= *min)
}

pub fn homog_report(p: &Partition, h: &[usize]) -> Result<HomogReport, RamseyError> {
    check_set(p, h, p.n())?;
    let color = common_color(p, h);
    Ok(HomogReport {
        set: h.to_vec(),
        homogeneous: color.is_some(),
        color,
        size: h.len(),
        relatively_large: is_relatively_large(h)?,
    })
}

/// Every `(n+1)`-subset of `h` is homogeneous. Equivalent to
/// [`is_homogeneous`] whenever `|h| >= n + 1`.
pub fn check_subset_criterion(p: &Partition, h: &[usize]) -> Result<bool, RamseyError> {
    check_set(p, h, p.n() + 1)?;
    let n = p.n();
    let mut face = vec![0; n];
    for idx in Subsets::new(h.len(), n + 1) {
        let b: Vec<usize> = idx.iter().map(|&i| h[i]).collect();
        let mut first = None;
        for skip in 0..=n {
            let mut j = 0;
            for (i, &x) in b.iter().enumerate() {
                if i != skip {
                    face[j] = x;
                    j += 1;
                }
            }
            let c = p.color(&face);
            if *first.get_or_insert(c) != c {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

struct Grower<'a> {
    p: &'a Partition,
    size: usize,
    large: bool,
    set: Vec<usize>,
    color: Option<u32>,
}

impl Grower<'_> {
    /// Colors of the new subsets `T + {x}` for `T` an `(n-1)`-subset of the
    /// current set, checked against the running color.
    fn admits(&self, x: usize) -> Option<Option<u32>> {
        let n = self.p.n();
        let top = binom(x, n).expect("small");
        let mut color = self.color;
        for idx in Subsets::new(self.set.len(), n - 1) {
            let rank: usize = top
                + idx
                    .iter()
                    .enumerate()
                    .map(|(j, &i)| binom(self.set[i], j + 1).expect("small"))
                    .sum::<usize>();
            let c = self.p.colors()[rank];
            if *color.get_or_insert(c) != c {
                return None;
            }
        }
        Some(color)
    }

    fn grow(&mut self, from: usize) -> bool {
        if self.set.len() == self.size {
            return true;
        }
        let need = self.size - self.set.len();
        for x in from..=(self.p.m() - need) {
            if self.set.is_empty() && self.large && x > self.size {
                break;
            }
            if let Some(color) = self.admits(x) {
                let saved = self.color;
                self.color = color;
                self.set.push(x);
                if self.grow(x + 1) {
                    return true;
                }
                self.set.pop();
                self.color = saved;
            }
        }
        false
    }
}

/// A homogeneous set of size at least `k` (and relatively large when
/// `require_large`), preferring the largest size and then the
/// lexicographically first set of that size.
pub fn find_homogeneous(
    p: &Partition,
    k: usize,
    require_large: bool,
) -> Result<Option<HomogReport>, RamseyError> {
    if k < p.n() {
        return Err(RamseyError::InvalidParameters(format!(
            "k = {k} is below the arity n = {}",
            p.n()
        )));
    }
    for size in (k..=p.m()).rev() {
        let mut g = Grower {
            p,
            size,
            large: require_large,
            set: Vec::with_capacity(size),
            color: None,
        };
        if g.grow(0) {
            return homog_report(p, &g.set).map(Some);
        }
    }
    Ok(None)
}
