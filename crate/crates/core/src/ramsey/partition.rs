use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use super::RamseyError;

/// Largest number of subsets a partition may color.
const MAX_SUBSETS: usize = 1 << 26;

/// `C(a, b)`, or `None` on overflow.
pub fn binom(a: usize, b: usize) -> Option<usize> {
    if b > a {
        return Some(0);
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return None;
        }
    }
    Some(acc as usize)
}

/// The `n`-subsets of `{0, .., m-1}` in colexicographic order, each sorted.
#[derive(Debug, Clone)]
pub struct Subsets {
    m: usize,
    cur: Option<Vec<usize>>,
}

impl Subsets {
    pub fn new(m: usize, n: usize) -> Self {
        Subsets {
            m,
            cur: (n <= m).then(|| (0..n).collect()),
        }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.cur.clone()?;
        let m = self.m;
        let a = self.cur.as_mut().expect("checked above");
        let n = a.len();
        let limit = |i: usize, a: &[usize]| if i + 1 < n { a[i + 1] } else { m };
        match (0..n).find(|&i| a[i] + 1 < limit(i, a)) {
            Some(i) => {
                a[i] += 1;
                for (j, x) in a.iter_mut().enumerate().take(i) {
                    *x = j;
                }
            }
            None => self.cur = None,
        }
        Some(out)
    }
}

/// A coloring `P: [m]^n -> r` of the `n`-subsets of `{0, .., m-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    m: usize,
    n: usize,
    r: u32,
    /// indexed by colex rank
    colors: Vec<u32>,
}

impl Partition {
    /// `colors` lists the color of every `n`-subset in colex order.
    pub fn new(m: usize, n: usize, r: u32, colors: Vec<u32>) -> Result<Self, RamseyError> {
        let count = Self::subset_count(m, n, r)?;
        if colors.len() != count {
            return Err(RamseyError::InvalidParameters(format!(
                "{} colors given for {count} subsets",
                colors.len()
            )));
        }
        if let Some(c) = colors.iter().find(|&&c| c >= r) {
            return Err(RamseyError::InvalidParameters(format!("color {c} is not below r = {r}")));
        }
        Ok(Partition { m, n, r, colors })
    }

    pub fn from_fn(
        m: usize,
        n: usize,
        r: u32,
        mut f: impl FnMut(&[usize]) -> u32,
    ) -> Result<Self, RamseyError> {
        Self::subset_count(m, n, r)?;
        let colors = Subsets::new(m, n).map(|s| f(&s)).collect();
        Self::new(m, n, r, colors)
    }

    pub fn constant(m: usize, n: usize, r: u32, color: u32) -> Result<Self, RamseyError> {
        Self::from_fn(m, n, r, |_| color)
    }

    fn subset_count(m: usize, n: usize, r: u32) -> Result<usize, RamseyError> {
        if n == 0 || n > m {
            return Err(RamseyError::InvalidParameters(format!(
                "need 1 <= n <= m, got n = {n}, m = {m}"
            )));
        }
        if r == 0 {
            return Err(RamseyError::InvalidParameters("need r >= 1".into()));
        }
        match binom(m, n) {
            Some(c) if c <= MAX_SUBSETS => Ok(c),
            _ => Err(RamseyError::InvalidParameters(format!(
                "C({m}, {n}) subsets is more than {MAX_SUBSETS}"
            ))),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Colors in colex order of the subsets.
    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Colex rank `sum_i C(a_i, i + 1)` of a sorted subset.
    pub fn rank(subset: &[usize]) -> usize {
        subset
            .iter()
            .enumerate()
            .map(|(i, &a)| binom(a, i + 1).expect("rank of a stored subset fits"))
            .sum()
    }

    /// Color of a sorted `n`-subset of the ground set. Unchecked.
    pub fn color(&self, subset: &[usize]) -> u32 {
        self.colors[Self::rank(subset)]
    }

    pub fn subsets(&self) -> Subsets {
        Subsets::new(self.m, self.n)
    }

    /// `(subset, color)` in colex order.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, u32)> + '_ {
        self.subsets().zip(self.colors.iter().copied())
    }

    /// `{"m", "n", "r", "entries": [{"set": [..], "color": c}, ..]}` with
    /// entries in lexicographic order of the sets.
    pub fn to_json(&self) -> Value {
        let mut entries: Vec<(Vec<usize>, u32)> = self.entries().collect();
        entries.sort();
        let entries: Vec<Value> = entries
            .into_iter()
            .map(|(set, color)| json!({"set": set, "color": color}))
            .collect();
        json!({"m": self.m, "n": self.n, "r": self.r, "entries": entries})
    }

    /// Reads the shape produced by [`Partition::to_json`], checked like the
    /// text format.
    pub fn from_json(v: &Value) -> Result<Self, RamseyError> {
        let bad = |message: &str| RamseyError::BadPartitionFile {
            line: 0,
            message: message.to_string(),
        };
        let field = |name: &str| {
            v.get(name)
                .and_then(Value::as_u64)
                .ok_or_else(|| bad(&format!("missing natural number field `{name}`")))
        };
        let (m, n, r) = (field("m")?, field("n")?, field("r")?);
        let mut text = format!("{m} {n} {r}\n");
        let entries = v
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing array field `entries`"))?;
        for e in entries {
            let set = e
                .get("set")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("entry without a `set` array"))?;
            let color = e
                .get("color")
                .and_then(Value::as_u64)
                .ok_or_else(|| bad("entry without a natural number `color`"))?;
            let idx = set
                .iter()
                .map(|x| x.as_u64().map(|x| x.to_string()).ok_or_else(|| bad("set element is not a natural number")))
                .collect::<Result<Vec<_>, _>>()?;
            text.push_str(&format!("{} : {color}\n", idx.join(" ")));
        }
        text.parse()
    }

    /// Number of distinct colors actually used.
    pub fn used_colors(&self) -> usize {
        let mut seen: Vec<u32> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

/// Header `m n r`, then `i_1 .. i_n : c` for every subset in lexicographic order.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.m, self.n, self.r)?;
        let mut lines: Vec<(Vec<usize>, u32)> = self.entries().collect();
        lines.sort();
        for (s, c) in lines {
            let idx: Vec<String> = s.iter().map(usize::to_string).collect();
            writeln!(f, "{} : {c}", idx.join(" "))?;
        }
        Ok(())
    }
}

/// Reads the text format written by `Display`. Lines may come in any
/// order; blank lines and lines starting with `#` are skipped.
impl FromStr for Partition {
    type Err = RamseyError;

    fn from_str(text: &str) -> Result<Self, RamseyError> {
        let bad = |line: usize, message: String| RamseyError::BadPartitionFile { line, message };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or_else(|| bad(1, "missing header `m n r`".into()))?;
        let nums: Vec<&str> = header.split_whitespace().collect();
        let parse_num = |s: &str, line: usize| {
            s.parse::<usize>()
                .map_err(|_| bad(line, format!("`{s}` is not a natural number")))
        };
        if nums.len() != 3 {
            return Err(bad(hline, "header must be `m n r`".into()));
        }
        let (m, n) = (parse_num(nums[0], hline)?, parse_num(nums[1], hline)?);
        let r = u32::try_from(parse_num(nums[2], hline)?)
            .map_err(|_| bad(hline, "r is too large".into()))?;
        let count = Partition::subset_count(m, n, r).map_err(|e| bad(hline, e.to_string()))?;
        let mut colors: Vec<Option<u32>> = vec![None; count];
        for (ln, line) in lines {
            let (lhs, rhs) = line
                .split_once(':')
                .ok_or_else(|| bad(ln, "expected `i_1 .. i_n : c`".into()))?;
            let subset = lhs
                .split_whitespace()
                .map(|s| parse_num(s, ln))
                .collect::<Result<Vec<_>, _>>()?;
            let color = rhs.trim();
            let color = u32::try_from(parse_num(color, ln)?)
                .map_err(|_| bad(ln, "color is too large".into()))?;
            if subset.len() != n {
                return Err(bad(ln, format!("expected {n} indices, found {}", subset.len())));
            }
            if subset.windows(2).any(|w| w[0] >= w[1]) {
                return Err(bad(ln, "indices must be strictly ascending".into()));
            }
            if subset.last().is_some_and(|&x| x >= m) {
                return Err(bad(ln, format!("index out of the ground set 0..{m}")));
            }
            if color >= r {
                return Err(bad(ln, format!("color {color} is not below r = {r}")));
            }
            let slot = &mut colors[Partition::rank(&subset)];
            if slot.is_some() {
                return Err(bad(ln, "duplicate subset".into()));
            }
            *slot = Some(color);
        }
        if let Some(missing) = colors.iter().position(Option::is_none) {
            let s = Subsets::new(m, n).nth(missing).expect("rank in range");
            return Err(bad(0, format!("no color given for subset {s:?}")));
        }
        Partition::new(m, n, r, colors.into_iter().map(|c| c.expect("checked")).collect())
    }
}
