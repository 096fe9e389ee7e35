//! Exhaustive decision of `m -> (k)^n_r` and `m ->* (k)^n_r`.
//!
//! Colorings are built position by position over the `n`-subsets in colex
//! order, and only canonical colorings are visited: each new color is at most
//! one more than the largest color used so far. Relabeling colors maps
//! homogeneous sets to homogeneous sets, so this loses no counterexample.
//!
//! The subsets with maximum `t` form a contiguous block of positions. Once a
//! block is complete every set `H` with `max H = t` has all its colors fixed;
//! if one of them qualifies, no extension can be a counterexample and the
//! branch is cut. A coloring that survives every block is a counterexample,
//! and the first one reached is the lexicographically least canonical one.

use num_traits::Pow;

use super::partition::{binom, Partition};
use super::RamseyError;
use crate::BigNat;

/// Default bound on `r^C(m, n)`, the number of colorings a search may face.
pub const DEFAULT_ENUM_CAP: u64 = 1 << 30;
/// Environment variable overriding [`DEFAULT_ENUM_CAP`] in [`SearchConfig::from_env`].
pub const ENUM_CAP_ENV: &str = "PEANO_FORGE_ENUM_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// Homogeneous of size at least `k`.
    Ramsey,
    /// Homogeneous, relatively large and of size at least `k`.
    ParisHarrington,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub cap: u64,
    /// Worker threads. `1` runs the plain sequential search.
    pub jobs: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            cap: DEFAULT_ENUM_CAP,
            jobs: std::thread::available_parallelism().map_or(1, usize::from),
        }
    }
}

impl SearchConfig {
    /// The default configuration with the cap taken from [`ENUM_CAP_ENV`] when set.
    pub fn from_env() -> Result<Self, RamseyError> {
        let mut cfg = Self::default();
        if let Ok(v) = std::env::var(ENUM_CAP_ENV) {
            cfg.cap = v.trim().parse().map_err(|_| {
                RamseyError::InvalidParameters(format!("{ENUM_CAP_ENV}={v:?} is not a natural number"))
            })?;
        }
        Ok(cfg)
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }

    pub fn with_cap(mut self, cap: u64) -> Self {
        self.cap = cap;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowOutcome {
    pub holds: bool,
    /// The least canonical coloring without a qualifying set, when the
    /// relation fails.
    pub counterexample: Option<Partition>,
}

impl ArrowOutcome {
    fn holds() -> Self {
        ArrowOutcome {
            holds: true,
            counterexample: None,
        }
    }

    fn fails(p: Partition) -> Self {
        ArrowOutcome {
            holds: false,
            counterexample: Some(p),
        }
    }
}

fn check_params(m: usize, k: usize, r: u32, n: usize) -> Result<(), RamseyError> {
    if n == 0 || n > k || k > m {
        return Err(RamseyError::InvalidParameters(format!(
            "need 1 <= n <= k <= m, got n = {n}, k = {k}, m = {m}"
        )));
    }
    if r == 0 {
        return Err(RamseyError::InvalidParameters("need r >= 1".into()));
    }
    Ok(())
}

/// `m -> (k)^n_r`.
pub fn arrow(m: usize, k: usize, r: u32, n: usize) -> Result<bool, RamseyError> {
    decide(Relation::Ramsey, m, k, r, n, &SearchConfig::default()).map(|o| o.holds)
}

/// `m ->* (k)^n_r`.
pub fn ph_arrow(m: usize, k: usize, r: u32, n: usize) -> Result<bool, RamseyError> {
    decide(Relation::ParisHarrington, m, k, r, n, &SearchConfig::default()).map(|o| o.holds)
}

/// Decides the relation for every `P: [m]^n -> r`, returning the least
/// canonical counterexample when it fails. The result does not depend on
/// `cfg.jobs`.
pub fn decide(
    relation: Relation,
    m: usize,
    k: usize,
    r: u32,
    n: usize,
    cfg: &SearchConfig,
) -> Result<ArrowOutcome, RamseyError> {
    check_params(m, k, r, n)?;
    // one color: the whole ground set (min 0) is homogeneous
    // k = n: {0, .., n-1} is homogeneous and contains 0
    if r == 1 || k == n {
        return Ok(ArrowOutcome::holds());
    }
    if relation == Relation::Ramsey && n == 1 {
        // pigeonhole; the least canonical counterexample fills colors in runs of k-1
        return if m as u128 > u128::from(r) * (k as u128 - 1) {
            Ok(ArrowOutcome::holds())
        } else {
            let p = Partition::from_fn(m, 1, r, |s| (s[0] / (k - 1)) as u32)?;
            Ok(ArrowOutcome::fails(p))
        };
    }
    let positions = binom(m, n).ok_or_else(|| {
        RamseyError::InvalidParameters(format!("C({m}, {n}) does not fit in a machine word"))
    })?;
    let required: BigNat = Pow::pow(BigNat::from(r), positions);
    if required > BigNat::from(cfg.cap) {
        return Err(RamseyError::SearchSpaceTooLarge {
            cap: cfg.cap,
            required,
        });
    }
    let search = Search::new(m, n, k, r, relation == Relation::ParisHarrington);
    Ok(match search.run(cfg.jobs) {
        Some(colors) => ArrowOutcome::fails(Partition::new(m, n, r, colors)?),
        None => ArrowOutcome::holds(),
    })
}

/// Least `m <= max_m` for which the relation holds.
pub fn min_witness(
    k: usize,
    r: u32,
    n: usize,
    relation: Relation,
    max_m: usize,
    cfg: &SearchConfig,
) -> Result<Option<usize>, RamseyError> {
    check_params(k, k, r, n)?;
    for m in k..=max_m {
        if decide(relation, m, k, r, n, cfg)?.holds {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

struct Search {
    n: usize,
    k: usize,
    r: u32,
    ph: bool,
    positions: usize,
    /// `binom[a][b] = C(a, b)` for `a <= m`, `b <= n`
    binom: Vec<Vec<usize>>,
    /// `Some(t)` at the last position of the block of subsets with maximum `t`
    block_end: Vec<Option<usize>>,
}

#[derive(Clone)]
struct Prefix {
    colors: Vec<u32>,
    used: u32,
}

impl Search {
    fn new(m: usize, n: usize, k: usize, r: u32, ph: bool) -> Self {
        let binom: Vec<Vec<usize>> = (0..=m)
            .map(|a| (0..=n).map(|b| binom(a, b).expect("checked by caller")).collect())
            .collect();
        let positions = binom[m][n];
        let mut block_end = vec![None; positions];
        for t in (n - 1)..m {
            block_end[binom[t + 1][n] - 1] = Some(t);
        }
        Search {
            n,
            k,
            r,
            ph,
            positions,
            binom,
            block_end,
        }
    }

    fn run(&self, jobs: usize) -> Option<Vec<u32>> {
        let root = Prefix {
            colors: Vec::with_capacity(self.positions),
            used: 0,
        };
        #[cfg(feature = "parallel")]
        if jobs > 1 {
            return self.run_parallel(root, jobs);
        }
        let _ = jobs;
        self.finish(root)
    }

    #[cfg(feature = "parallel")]
    fn run_parallel(&self, root: Prefix, jobs: usize) -> Option<Vec<u32>> {
        use rayon::prelude::*;

        // split into enough independent subtrees, keeping their order
        let mut frontier = vec![root];
        while frontier.len() < 16 * jobs
            && !frontier.is_empty()
            && frontier[0].colors.len() < self.positions
        {
            frontier = frontier.iter().flat_map(|p| self.children(p)).collect();
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            frontier
                .into_par_iter()
                .find_map_first(|p| self.finish(p))
        })
    }

    #[cfg(feature = "parallel")]
    fn children<'a>(&'a self, p: &'a Prefix) -> impl Iterator<Item = Prefix> + 'a {
        let pos = p.colors.len();
        (0..(p.used + 1).min(self.r)).filter_map(move |c| {
            let mut colors = p.colors.clone();
            colors.push(c);
            if self.cut(&colors, pos) {
                return None;
            }
            Some(Prefix {
                colors,
                used: p.used.max(c + 1),
            })
        })
    }

    /// Depth-first completion of a prefix; the first counterexample found.
    fn finish(&self, p: Prefix) -> Option<Vec<u32>> {
        let start = p.colors.len();
        let mut colors = p.colors;
        colors.resize(self.positions, 0);
        self.dfs(&mut colors, p.used, start).then_some(colors)
    }

    fn dfs(&self, colors: &mut [u32], used: u32, pos: usize) -> bool {
        if pos == self.positions {
            return true;
        }
        for c in 0..(used + 1).min(self.r) {
            colors[pos] = c;
            if !self.cut(colors, pos) && self.dfs(colors, used.max(c + 1), pos + 1) {
                return true;
            }
        }
        false
    }

    /// Whether setting position `pos` completes a block that already
    /// contains a qualifying homogeneous set.
    fn cut(&self, colors: &[u32], pos: usize) -> bool {
        match self.block_end[pos] {
            Some(t) if t + 1 >= self.k => {
                let mut stack = Vec::with_capacity(t + 1);
                stack.push(t);
                // for n = 1 the chain's first element is itself a colored subset
                let color = (self.n == 1).then(|| colors[t]);
                self.grow(colors, &mut stack, color)
            }
            _ => false,
        }
    }

    /// Extends the descending chain `stack` (all colors fixed) downwards,
    /// keeping it homogeneous, until it qualifies.
    fn grow(&self, colors: &[u32], stack: &mut Vec<usize>, color: Option<u32>) -> bool {
        let s = stack.len();
        let low = *stack.last().expect("nonempty");
        if s >= self.k && (!self.ph || s >= low) {
            return true;
        }
        if s + low < self.k {
            return false;
        }
        for x in (0..low).rev() {
            if let Some(c) = self.extend(colors, stack, x, color) {
                stack.push(x);
                if self.grow(colors, stack, c) {
                    return true;
                }
                stack.pop();
            }
        }
        false
    }

    /// Checks the subsets `{x} + T`, `T` an `(n-1)`-subset of `stack`, against
    /// the running color. `x` lies below every element of `stack`.
    fn extend(&self, colors: &[u32], stack: &[usize], x: usize, color: Option<u32>) -> Option<Option<u32>> {
        let q = self.n - 1;
        if stack.len() < q {
            return Some(color);
        }
        let mut color = color;
        let mut idx: Vec<usize> = (0..q).collect();
        loop {
            // stack is descending, so idx read backwards is ascending
            let rank = x + idx
                .iter()
                .rev()
                .enumerate()
                .map(|(j, &i)| self.binom[stack[i]][j + 2])
                .sum::<usize>();
            let c = colors[rank];
            if *color.get_or_insert(c) != c {
                return None;
            }
            // next combination in lexicographic order of indices
            let len = stack.len();
            match (0..q).rev().find(|&i| idx[i] < len - q + i) {
                Some(i) => {
                    idx[i] += 1;
                    for j in i + 1..q {
                        idx[j] = idx[j - 1] + 1;
                    }
                }
                None => return Some(color),
            }
        }
    }
}
