//! Closed-form values of `N(n, k, m; r)` where they are known.
//!
//! Rules with an `r` in their name hold for multiset codes in general; the
//! `cbc_*` rules apply to ordinary batch codes (`r = 1`, and `n >= k` so a
//! request of `k` distinct items exists). Where a range depends on the maximum
//! size `A(m, 4, w)` of a distance-4 constant weight code, the size of the
//! residue-class code is used, which is a lower bound on `A`; callers may
//! supply better values through [`known_exact_n_with`].

use serde::Serialize;

use super::check_nkmr;
use crate::combinat::{binom64, ceil_half_sum_sqrt, ceil_sqrt, floor_div};
use crate::constructions::{graham_sloane_cwc, replication_threshold};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KnownValue {
    pub value: u64,
    pub rule: &'static str,
}

/// Size of the residue-class distance-4 code; `A(m, 4, 0) = 1`.
fn residue_code_size(m: usize, w: usize) -> u64 {
    match w {
        0 => 1,
        w if w > m => 0,
        w => graham_sloane_cwc(m, w).map(|c| c.len() as u64).unwrap_or(0),
    }
}

/// The first applicable rule's value, with `A(m, 4, w)` from the residue-class code.
pub fn known_exact_n(n: usize, k: usize, m: usize, r: usize) -> Option<KnownValue> {
    applicable_exact_rules(n, k, m, r, &residue_code_size)
        .into_iter()
        .next()
}

/// Like [`known_exact_n`] with a caller-supplied lower bound `a(m, w)` on `A(m, 4, w)`.
pub fn known_exact_n_with(
    n: usize,
    k: usize,
    m: usize,
    r: usize,
    a: &dyn Fn(usize, usize) -> u64,
) -> Option<KnownValue> {
    applicable_exact_rules(n, k, m, r, a).into_iter().next()
}

fn is_prime_power(q: usize) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..=q).find(|p| q.is_multiple_of(*p)).unwrap();
    let mut x = q;
    while x.is_multiple_of(p) {
        x /= p;
    }
    x == 1
}

/// Every rule whose conditions hold, in precedence order. Overlapping rules
/// are expected to agree; the test suite checks that they do.
pub fn applicable_exact_rules(
    n: usize,
    k: usize,
    m: usize,
    r: usize,
    a: &dyn Fn(usize, usize) -> u64,
) -> Vec<KnownValue> {
    if check_nkmr(n, k, m, r).is_err() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut push = |rule: &'static str, value: i128| {
        out.push(KnownValue {
            value: value as u64,
            rule,
        })
    };
    let (ni, ki, mi, ri) = (n as i128, k as i128, m as i128, r as i128);

    if m >= n * r {
        push("disjoint", ri * ni);
    }
    if r == k {
        push("r_equals_k", ki * ni);
    }
    if r < k {
        let t = replication_threshold(k, m, r) as i128;
        if ni >= t {
            push("r_large_n", ki * ni - t);
        }
        if r + 1 == k && (n as u64) < binom64(m, k - 1) {
            push("r_equals_k_minus_1_small_n", (ki - 1) * ni);
        }
        if r + 2 <= k {
            let span = mi - ki + 1;
            let lo = t - span * a(m, k - 2) as i128;
            if lo <= ni && ni <= t {
                push("r_distance4_range", (ki - 1) * ni - floor_div(t - ni, span));
            }
            if r + 2 == k && (n as u64) <= a(m, r) {
                push("r_constant_weight", ri * ni);
            }
        }
        if m == k {
            let enough = if k.is_multiple_of(r) {
                n >= k / r
            } else {
                n >= k / r + r
            };
            if enough {
                push("r_square", ki * ni - ((ki - 1) / ri) * ki);
            }
        }
    }
    if r == 1 && n >= k {
        cbc_rules(n, k, m, a, &mut push);
    }
    out
}

fn cbc_rules(
    n: usize,
    k: usize,
    m: usize,
    a: &dyn Fn(usize, usize) -> u64,
    push: &mut dyn FnMut(&'static str, i128),
) {
    let (ni, ki, mi) = (n as i128, k as i128, m as i128);
    let span = mi - ki + 1;
    if m == k {
        push("cbc_square", ki * ni - ki * (ki - 1));
    }
    if k >= 2 {
        let top = (ki - 1) * binom64(m, k - 1) as i128;
        if ni >= top {
            push("cbc_large_n", ki * ni - top);
        }
        if binom64(m, k - 2) as i128 <= ni && ni <= top {
            push("cbc_mid_n", (ki - 1) * ni - floor_div(top - ni, span));
        }
    }
    if k >= 3 {
        let c2 = binom64(m, k - 2) as i128;
        // The lower end itself is excluded: there the optimum is one more than
        // the formula (N(8,4,5) = 15, N(12,4,6) = 23 by exhaustive search).
        let lo = c2 - span * a(m, k - 3) as i128;
        if lo < ni && ni <= c2 && 2 * (c2 - ni).rem_euclid(span) < span {
            push(
                "cbc_distance4_range",
                (ki - 2) * ni - floor_div(2 * (c2 - ni), span),
            );
        }
    }
    if n == m + 1 {
        push("cbc_m_plus_1", mi + ki);
    }
    if n == m + 2 && k >= 2 {
        let root = ceil_sqrt((k + 1) as u128) as i128;
        if mi + 1 - ki >= root {
            push(
                "cbc_m_plus_2",
                mi + ki - 2 + ceil_sqrt(4 * (k + 1) as u128) as i128,
            );
        } else {
            // ceil(1 + (k+1)/(m+1-k))
            push("cbc_m_plus_2", 2 * mi - 2 + 1 + (ki + 1 + span - 1) / span);
        }
    }
    if k == 3 && n >= m && m >= 3 {
        if ni <= mi * mi - mi {
            push("cbc_k3", 2 * ni - mi + (ni - 3) / (mi - 2));
        } else {
            push("cbc_k3", 3 * ni - mi * mi + mi);
        }
    }
    if k == 4 && n >= m && m >= 4 {
        if let Some(v) = cbc_k4(ni, mi) {
            push("cbc_k4", v);
        }
    }
    // q^2 + q - 1 items, k = q^2 - q - 1, m = q^2 - q
    let q = (1..=m).find(|q| q * q - q >= m).unwrap_or(0);
    if q >= 3 && q * q - q == m && is_prime_power(q) && n == q * q + q - 1 && k == q * q - q - 1 {
        push("cbc_affine_deleted", (q * q * q - q) as i128);
    }
}

fn cbc_k4(n: i128, m: i128) -> Option<i128> {
    let pairs = m * (m - 1) / 2;
    let triples = m * (m - 1) * (m - 2) / 6;
    let even = m % 2 == 0;
    if n == m {
        return Some(n);
    }
    let low_case = if even {
        8 * n <= m * m + 6 * m
    } else {
        8 * n <= m * m + 4 * m + 3
    };
    if m < n && low_case {
        return Some(2 * n - m + ceil_half_sum_sqrt(1, 8 * n - 8 * m + 1));
    }
    let mid_case = if even {
        m * m + 6 * m + 8 <= 8 * n && n < pairs
    } else {
        m * m + 4 * m + 11 < 8 * n && n < pairs
    };
    if mid_case {
        return Some(2 * n - m + ceil_half_sum_sqrt(5, 8 * n - 16 * m + 25));
    }
    if !even && 8 * n == m * m + 4 * m + 11 {
        return Some(2 * n - (m - 1) / 2);
    }
    if pairs <= n && n < 3 * triples {
        // 3n - floor(m^2/2 - (n - m)/(m - 3))
        let num = m * m * (m - 3) - 2 * (n - m);
        return Some(3 * n - floor_div(num, 2 * (m - 3)));
    }
    if 3 * triples <= n {
        return Some(4 * n - 3 * triples);
    }
    None
}
