//! Bounds on the minimum total storage `N(n, k, m; r)` (with `t = 1`).

mod known;
mod search;

use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

pub use known::{applicable_exact_rules, known_exact_n, known_exact_n_with, KnownValue};
pub use search::{exhaustive_optimal_n, SearchCaps, SearchOutcome};

use crate::combinat::{binom, ceil_div, floor_div, gcd};
use crate::constructions::{
    construct_diagonal, construct_disjoint, construct_distance4, construct_from_cwc,
    construct_full, construct_replication, construct_small_n_distinct, graham_sloane_cwc,
    replication_threshold,
};
use crate::error::{param, Result};
use crate::setsystem::{BlockProfile, McbcCode};

pub(crate) fn check_nkmr(n: usize, k: usize, m: usize, r: usize) -> Result<()> {
    if n < 1 || r < 1 || r > k || k > m {
        return param(format!(
            "need n >= 1 and 1 <= r <= k <= m, got n = {n}, k = {k}, m = {m}, r = {r}"
        ));
    }
    Ok(())
}

/// A value labelled with the rule that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Labelled {
    pub rule: String,
    pub value: u64,
}

/// Lower bounds on `N(n, k, m; r)`, one per rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBounds(pub Vec<Labelled>);

impl LowerBounds {
    /// The strongest bound.
    pub fn best(&self) -> u64 {
        self.0.iter().map(|l| l.value).max().unwrap_or(0)
    }

    pub fn get(&self, rule: &str) -> Option<u64> {
        self.0.iter().find(|l| l.rule == rule).map(|l| l.value)
    }
}

impl Serialize for LowerBounds {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for l in &self.0 {
            map.serialize_entry(&l.rule, &l.value)?;
        }
        map.end()
    }
}

/// The block-counting bound for a single `c` in `[r, k-1]`:
/// `nc - floor((k-c)/(m-k+1) * (floor((k-1)/r) C(m,k-1) / C(m-c, k-1-c) - n))`,
/// evaluated in exact integer arithmetic.
pub fn profile_bound(n: usize, k: usize, m: usize, r: usize, c: usize) -> Result<i128> {
    check_nkmr(n, k, m, r)?;
    if c < r || c + 1 > k {
        return param(format!("need r <= c <= k - 1, got c = {c}"));
    }
    let total = replication_threshold(k, m, r) as i128;
    let per_block = binom((m - c) as u64, (k - 1 - c) as u64) as i128;
    let (n, k, m, c) = (n as i128, k as i128, m as i128, c as i128);
    let cut = floor_div((k - c) * (total - n * per_block), (m - k + 1) * per_block);
    Ok(n * c - cut)
}

/// `rn` always, plus the block-counting bound for each `c` in `[r, k-1]` when
/// `r < k` and `m < nr`. For `m >= nr` the disjoint layout already attains `rn`.
pub fn lower_bounds(n: usize, k: usize, m: usize, r: usize) -> Result<LowerBounds> {
    check_nkmr(n, k, m, r)?;
    let mut out = vec![Labelled {
        rule: "rn".into(),
        value: (r * n) as u64,
    }];
    if m < n * r {
        for c in r..k {
            let v = profile_bound(n, k, m, r, c)?;
            out.push(Labelled {
                rule: format!("profile_c{c}"),
                value: v.max(0) as u64,
            });
        }
    }
    Ok(LowerBounds(out))
}

/// Necessary condition on the item-block size profile of any valid code with `r < k`:
/// `sum_{i=r}^{k-1} C(m-i, k-1-i) A_i <= floor((k-1)/r) C(m, k-1)`.
pub fn profile_inequality_check(
    profile: &BlockProfile,
    k: usize,
    m: usize,
    r: usize,
) -> Result<bool> {
    if r < 1 || r >= k {
        return param(format!("need 1 <= r <= k - 1, got k = {k}, r = {r}"));
    }
    let lhs = (r..k)
        .filter(|&i| i <= m)
        .map(|i| {
            binom((m - i) as u64, (k - 1 - i) as u64).saturating_mul(u128::from(profile.count(i)))
        })
        .fold(0u128, u128::saturating_add);
    let rhs = ((k - 1) / r) as u128 * binom(m as u64, (k - 1) as u64);
    Ok(lhs <= rhs)
}

/// Cheapest code among the implemented constructions, with the construction name.
pub fn best_construction(
    n: usize,
    k: usize,
    m: usize,
    r: usize,
) -> Result<Option<(McbcCode, &'static str)>> {
    check_nkmr(n, k, m, r)?;
    let mut candidates: Vec<(Result<McbcCode>, &'static str)> = vec![
        (construct_disjoint(n, m, r), "disjoint"),
        (construct_full(n, k, m), "full"),
    ];
    if r < k {
        candidates.push((construct_replication(n, k, m, r), "replication"));
    }
    if r + 1 == k {
        candidates.push((construct_small_n_distinct(n, k, m), "small-n"));
    }
    if r + 2 <= k {
        candidates.push((construct_distance4(n, k, m, r), "distance4"));
    }
    let w = r.max(k.saturating_sub(2));
    if w >= 1 && w < k {
        let cwc = graham_sloane_cwc(m, w).and_then(|code| {
            if code.len() < n {
                param("not enough codewords")
            } else {
                construct_from_cwc(&code.truncated(n), k, r)
            }
        });
        candidates.push((cwc, "cwc-gs"));
    }
    if m == k {
        candidates.push((construct_diagonal(n, k, r), "diagonal"));
    }
    Ok(candidates
        .into_iter()
        .filter_map(|(code, name)| code.ok().map(|c| (c, name)))
        .min_by_key(|(code, _)| code.storage()))
}

/// Smallest storage among the implemented constructions.
pub fn construction_upper(n: usize, k: usize, m: usize, r: usize) -> Result<Option<Labelled>> {
    Ok(best_construction(n, k, m, r)?.map(|(code, name)| Labelled {
        rule: name.into(),
        value: code.storage() as u64,
    }))
}

/// Minimum per-server load of a regular code with `r = k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MuValue {
    pub value: u64,
    /// `false` when only the lower bound `ceil(kn/m)` is known.
    pub exact: bool,
}

/// `kn/m` exactly when `n` is a multiple of `m/gcd(m, k)` (the cyclic
/// construction attains it); otherwise the lower bound `ceil(kn/m)`.
pub fn mu_regular(n: usize, k: usize, m: usize) -> Result<MuValue> {
    check_nkmr(n, k, m, k)?;
    let base = m / gcd(m, k);
    if n.is_multiple_of(base) {
        Ok(MuValue {
            value: (k * n / m) as u64,
            exact: true,
        })
    } else {
        Ok(MuValue {
            value: ceil_div((k * n) as i128, m as i128) as u64,
            exact: false,
        })
    }
}

/// Key into a table of `N(n, k, m; r)` values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct StorageKey {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub r: usize,
}

impl StorageKey {
    pub fn new(n: usize, k: usize, m: usize, r: usize) -> Self {
        StorageKey { n, k, m, r }
    }
}

impl std::fmt::Display for StorageKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "N({},{},{};{})", self.n, self.k, self.m, self.r)
    }
}

pub type StorageTable = BTreeMap<StorageKey, u64>;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub checked: usize,
    pub violations: Vec<String>,
    pub skipped: Vec<String>,
}

/// Checks the structural inequalities between storage values at `(n, k, m; r)`:
///
/// - `N(n,k,m;r) >= rn`
/// - `N(n,k,m;r) >= N(n,k,m;i)` for `i < r`
/// - `N(rn,k,m;1) <= r N(n,k,m;r)` and `N(n,k,m;r) <= N(rn,k,m;1)`
/// - `N(n,k,m;r) <= r N(n, ceil(k/r), floor(m/r); 1)`
///
/// Inequalities that reference a value missing from `values` are reported as skipped.
pub fn recursive_bound_audit(
    n: usize,
    k: usize,
    m: usize,
    r: usize,
    values: &StorageTable,
) -> AuditReport {
    let mut report = AuditReport::default();
    let here = StorageKey::new(n, k, m, r);
    let Some(&value) = values.get(&here) else {
        report.skipped.push(format!("{here} unknown"));
        return report;
    };
    let mut check = |ok: bool, what: String| {
        report.checked += 1;
        if !ok {
            report.violations.push(what);
        }
    };
    check(
        value >= (r * n) as u64,
        format!("{here} = {value} < rn = {}", r * n),
    );
    let mut skipped = Vec::new();
    for i in 1..r {
        let key = StorageKey::new(n, k, m, i);
        match values.get(&key) {
            Some(&lower) => check(
                value >= lower,
                format!("{here} = {value} < {key} = {lower}"),
            ),
            None => skipped.push(format!("{here} >= {key}")),
        }
    }
    let expanded = StorageKey::new(r * n, k, m, 1);
    match values.get(&expanded) {
        Some(&cbc) => {
            check(
                cbc <= r as u64 * value,
                format!("{expanded} = {cbc} > r * {here} = {}", r as u64 * value),
            );
            check(
                value <= cbc,
                format!("{here} = {value} > {expanded} = {cbc}"),
            );
        }
        None => skipped.push(format!("{expanded} vs {here}")),
    }
    let (k2, m2) = (k.div_ceil(r), m / r);
    let shrunk = StorageKey::new(n, k2, m2, 1);
    match values.get(&shrunk) {
        Some(&cbc) => check(
            value <= r as u64 * cbc,
            format!("{here} = {value} > r * {shrunk} = {}", r as u64 * cbc),
        ),
        None => skipped.push(format!("{here} <= r * {shrunk}")),
    }
    report.skipped.extend(skipped);
    report
}

/// Everything known about `N(n, k, m; r)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub r: usize,
    pub lower_bounds: LowerBounds,
    pub known_exact: Option<Labelled>,
    pub construction_upper: Option<Labelled>,
    pub search_exact: Option<u64>,
}

impl BoundsReport {
    /// Lower bounds, the known exact value and the best construction; no search.
    pub fn compute(n: usize, k: usize, m: usize, r: usize) -> Result<Self> {
        Ok(BoundsReport {
            n,
            k,
            m,
            r,
            lower_bounds: lower_bounds(n, k, m, r)?,
            known_exact: known_exact_n(n, k, m, r).map(|v| Labelled {
                rule: v.rule.into(),
                value: v.value,
            }),
            construction_upper: construction_upper(n, k, m, r)?,
            search_exact: None,
        })
    }

    /// Every lower bound is at most every upper bound or exact value present,
    /// and the known exact value lies between them.
    pub fn is_consistent(&self) -> bool {
        let low = self.lower_bounds.best();
        let exacts = self
            .known_exact
            .iter()
            .map(|l| l.value)
            .chain(self.search_exact);
        let upper = self.construction_upper.as_ref().map(|l| l.value);
        exacts
            .clone()
            .all(|e| low <= e && upper.is_none_or(|u| e <= u))
            && upper.is_none_or(|u| low <= u)
            && {
                let all: Vec<u64> = exacts.collect();
                all.windows(2).all(|w| w[0] == w[1])
            }
    }
}
