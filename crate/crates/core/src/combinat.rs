//! Small combinatorial helpers shared across the crate.

/// Binomial coefficient, saturating at `u128::MAX`.
pub fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        match acc.checked_mul(u128::from(n - i)) {
            Some(v) => acc = v / u128::from(i + 1),
            None => return u128::MAX,
        }
    }
    acc
}

/// Binomial coefficient as `u64`; panics on overflow, which desk-scale inputs never reach.
pub fn binom64(n: usize, k: usize) -> u64 {
    u64::try_from(binom(n as u64, k as u64)).expect("binomial coefficient overflows u64")
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Floor of `num / den` for `den > 0`.
pub fn floor_div(num: i128, den: i128) -> i128 {
    debug_assert!(den > 0);
    num.div_euclid(den)
}

/// Ceiling of `num / den` for `den > 0`.
pub fn ceil_div(num: i128, den: i128) -> i128 {
    -floor_div(-num, den)
}

/// Smallest integer `v >= 0` with `v * v >= x`, i.e. `ceil(sqrt(x))`.
pub fn ceil_sqrt(x: u128) -> u128 {
    let mut v = (x as f64).sqrt() as u128;
    while v * v < x {
        v += 1;
    }
    while v > 0 && (v - 1) * (v - 1) >= x {
        v -= 1;
    }
    v
}

/// `ceil((a + sqrt(d)) / 2)` for `a >= 0`, `d >= 0`, computed exactly.
pub fn ceil_half_sum_sqrt(a: i128, d: i128) -> i128 {
    debug_assert!(a >= 0 && d >= 0);
    // smallest v with 2v - a >= sqrt(d)
    let s = ceil_sqrt(d as u128) as i128;
    let mut v = ceil_div(a + s, 2);
    while v > 0 && 2 * (v - 1) - a >= 0 && (2 * (v - 1) - a).pow(2) >= d {
        v -= 1;
    }
    v
}

/// All `k`-subsets of `[1..=n]` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> KSubsets {
    KSubsets {
        n,
        current: if k <= n {
            Some((1..=k).collect())
        } else {
            None
        },
    }
}

/// Iterator behind [`k_subsets`].
#[derive(Debug, Clone)]
pub struct KSubsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for KSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if next[i] < self.n - (k - 1 - i) {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// Number of multisets of size `size` over `n` items where each item appears at most `cap` times,
/// saturating at `u128::MAX`.
pub fn bounded_multiset_count(n: usize, cap: usize, size: usize) -> u128 {
    let mut ways = vec![0u128; size + 1];
    ways[0] = 1;
    for _ in 0..n {
        let mut next = vec![0u128; size + 1];
        for (s, &w) in ways.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for c in 0..=cap.min(size - s) {
                next[s + c] = next[s + c].saturating_add(w);
            }
        }
        ways = next;
    }
    ways[size]
}
