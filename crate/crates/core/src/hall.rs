//! Hall-type conditions on the item view (dual set system) of a code.
//!
//! All scans walk `h`-subsets of blocks in lexicographic order for increasing
//! `h`, carrying the running union as a bit set. A branch is cut as soon as the
//! partial union already meets the requirement for the target `h`, since unions
//! only grow.

use serde::Serialize;

use crate::bitset::BitSet;
use crate::combinat::binom;
use crate::error::{param, Error, Result};
use crate::request::MultisetRequest;
use crate::setsystem::SetSystem;

/// Evidence that a code fails a check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// 1-based indices of item blocks whose union is too small.
    Blocks(Vec<usize>),
    /// A request that cannot be served.
    Request(MultisetRequest),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationResult {
    pub valid: bool,
    pub witness: Option<Witness>,
}

impl VerificationResult {
    pub fn valid() -> Self {
        VerificationResult {
            valid: true,
            witness: None,
        }
    }

    pub fn violated(witness: Witness) -> Self {
        VerificationResult {
            valid: false,
            witness: Some(witness),
        }
    }
}

/// Size of the union of the given 1-based blocks.
pub fn union_size(item_view: &SetSystem, indices: &[usize]) -> usize {
    let mut points: Vec<usize> = indices
        .iter()
        .flat_map(|&i| item_view.blocks()[i - 1].iter().copied())
        .collect();
    points.sort_unstable();
    points.dedup();
    points.len()
}

struct UnionScan {
    masks: Vec<BitSet>,
    stack: Vec<BitSet>,
    chosen: Vec<usize>,
}

impl UnionScan {
    fn new(item_view: &SetSystem) -> Self {
        let masks = item_view.masks();
        let width = item_view.ground_size();
        UnionScan {
            stack: vec![BitSet::new(width); masks.len() + 1],
            masks,
            chosen: Vec::new(),
        }
    }

    /// First `h`-subset (lexicographic) whose union has fewer than `need` points.
    fn find_small_union(&mut self, h: usize, need: usize) -> Option<Vec<usize>> {
        self.chosen.clear();
        self.stack[0].clear();
        self.search(0, h, need)
    }

    fn search(&mut self, start: usize, h: usize, need: usize) -> Option<Vec<usize>> {
        let depth = self.chosen.len();
        if self.stack[depth].count() >= need {
            return None;
        }
        if depth == h {
            return Some(self.chosen.iter().map(|i| i + 1).collect());
        }
        let remaining = h - depth;
        for i in start..=self.masks.len() - remaining {
            let (lo, hi) = self.stack.split_at_mut(depth + 1);
            hi[0].union_of(&lo[depth], &self.masks[i]);
            self.chosen.push(i);
            if let Some(found) = self.search(i + 1, h, need) {
                return Some(found);
            }
            self.chosen.pop();
        }
        None
    }

    /// Minimum union size over all `h`-subsets.
    fn min_union(&mut self, h: usize) -> usize {
        let mut best = usize::MAX;
        self.chosen.clear();
        self.stack[0].clear();
        self.minimize(0, h, &mut best);
        best
    }

    fn minimize(&mut self, start: usize, h: usize, best: &mut usize) {
        let depth = self.chosen.len();
        let size = self.stack[depth].count();
        if size >= *best {
            return;
        }
        if depth == h {
            *best = size;
            return;
        }
        let remaining = h - depth;
        for i in start..=self.masks.len() - remaining {
            let (lo, hi) = self.stack.split_at_mut(depth + 1);
            hi[0].union_of(&lo[depth], &self.masks[i]);
            self.chosen.push(i);
            self.minimize(i + 1, h, best);
            self.chosen.pop();
        }
    }
}

/// Multiset Hall condition: for every `h <= ceil(k/r)`, any `h` distinct item
/// blocks cover at least `min(h*r, k)` servers.
///
/// Equivalent to the code serving every multiset request of size `k` with
/// multiplicities at most `r` when each server is read once. The witness is the
/// lexicographically least violating index set at the least violating `h`.
pub fn verify_multiset_hall(
    item_view: &SetSystem,
    k: usize,
    r: usize,
) -> Result<VerificationResult> {
    if k < 1 || r < 1 || r > k {
        return param(format!("need 1 <= r <= k, got k = {k}, r = {r}"));
    }
    let h_max = k.div_ceil(r).min(item_view.block_count());
    let mut scan = UnionScan::new(item_view);
    for h in 1..=h_max {
        if let Some(bad) = scan.find_small_union(h, (h * r).min(k)) {
            return Ok(VerificationResult::violated(Witness::Blocks(bad)));
        }
    }
    Ok(VerificationResult::valid())
}

/// `(k, t)`-Hall condition: for every `h <= k`, any `h` distinct item blocks
/// cover at least `h / t` servers. With `t = 1` this is the classical Hall
/// condition characterising combinatorial batch codes.
pub fn verify_kt_hall_cbc(item_view: &SetSystem, k: usize, t: usize) -> Result<VerificationResult> {
    if k < 1 || t < 1 {
        return param(format!("need k >= 1 and t >= 1, got k = {k}, t = {t}"));
    }
    let h_max = k.min(item_view.block_count());
    let mut scan = UnionScan::new(item_view);
    for h in 1..=h_max {
        if let Some(bad) = scan.find_small_union(h, h.div_ceil(t)) {
            return Ok(VerificationResult::violated(Witness::Blocks(bad)));
        }
    }
    Ok(VerificationResult::valid())
}

/// Default cap on the number of block subsets [`union_size_table`] may visit.
pub const DEFAULT_UNION_CAP: u128 = 100_000_000;

/// Entry `h - 1` is the minimum union size over all `h`-subsets of item blocks,
/// for `h = 1..=min(h_max, n)`.
pub fn union_size_table(item_view: &SetSystem, h_max: usize, cap: u128) -> Result<Vec<usize>> {
    let n = item_view.block_count();
    let h_max = h_max.min(n);
    let count = (1..=h_max).fold(0u128, |acc, h| {
        acc.saturating_add(binom(n as u64, h as u64))
    });
    if count > cap {
        return Err(Error::CapExceeded {
            what: "block subsets",
            count,
            cap,
        });
    }
    let mut scan = UnionScan::new(item_view);
    Ok((1..=h_max).map(|h| scan.min_union(h)).collect())
}
