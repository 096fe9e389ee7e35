//! Plain exhaustive Ramsey / Paris-Harrington checker over bitmasks, with no
//! pruning and no symmetry reduction. Subsets of `{0..m-1}` are bitmasks;
//! sorting the `n`-element masks numerically gives colex order.

pub fn subsets(m: usize, n: usize) -> Vec<u32> {
    (0u32..1 << m).filter(|s| s.count_ones() as usize == n).collect()
}

/// First coloring (lexicographic in colex subset order) with no qualifying
/// homogeneous set, or `None` when the relation holds.
pub fn first_counterexample(m: usize, k: usize, r: u32, n: usize, ph: bool) -> Option<Vec<u32>> {
    let positions = subsets(m, n);
    let big_n = positions.len();
    assert!(big_n <= 64);
    // for each candidate H, the positions of its n-subsets
    let candidates: Vec<u64> = (0u32..1 << m)
        .filter(|h| {
            let size = h.count_ones() as usize;
            size >= k && (!ph || size >= h.trailing_zeros() as usize)
        })
        .map(|h| {
            positions
                .iter()
                .enumerate()
                .filter(|(_, s)| *s & h == **s)
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        })
        .collect();
    let mut colors = vec![0u32; big_n];
    let mut masks = vec![0u64; r as usize];
    masks[0] = if big_n == 64 { u64::MAX } else { (1u64 << big_n) - 1 };
    loop {
        let good = candidates
            .iter()
            .any(|&need| masks.iter().any(|&have| have & need == need));
        if !good {
            return Some(colors);
        }
        // odometer, last position least significant
        let mut i = big_n;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            let c = colors[i];
            masks[c as usize] &= !(1 << i);
            if c + 1 < r {
                colors[i] = c + 1;
                masks[c as usize + 1] |= 1 << i;
                break;
            }
            colors[i] = 0;
            masks[0] |= 1 << i;
        }
    }
}

pub fn holds(m: usize, k: usize, r: u32, n: usize, ph: bool) -> bool {
    first_counterexample(m, k, r, n, ph).is_none()
}

pub fn min_witness(k: usize, r: u32, n: usize, ph: bool, max_m: usize) -> Option<usize> {
    (k..=max_m).find(|&m| holds(m, k, r, n, ph))
}
