//! Exhaustive branch-and-bound for the minimum storage `N(n, k, m; r)`, `t = 1`.
//!
//! Item blocks are chosen as a nondecreasing sequence in a fixed order of
//! candidate subsets (by size, then lexicographic), which removes the item
//! permutation symmetry. Each new block is checked against the multiset Hall
//! condition together with every subset of the blocks already chosen.

use super::check_nkmr;
use crate::error::{Error, Result};
use crate::retrieval::verify_exhaustive;
use crate::setsystem::{CodeParams, McbcCode};

/// Largest parameters the search accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchCaps {
    pub max_n: usize,
    pub max_m: usize,
    pub max_k: usize,
}

impl Default for SearchCaps {
    fn default() -> Self {
        SearchCaps {
            max_n: 5,
            max_m: 5,
            max_k: 5,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub value: u64,
    pub witness: McbcCode,
}

struct Search {
    n: usize,
    k: usize,
    r: usize,
    h_max: usize,
    candidates: Vec<u32>,
    chosen: Vec<u32>,
    best: usize,
    best_blocks: Vec<u32>,
}

impl Search {
    fn run(&mut self, start: usize, partial: usize) {
        let depth = self.chosen.len();
        if depth == self.n {
            if partial < self.best {
                self.best = partial;
                self.best_blocks = self.chosen.clone();
            }
            return;
        }
        let remaining = self.n - depth;
        for idx in start..self.candidates.len() {
            let block = self.candidates[idx];
            let size = block.count_ones() as usize;
            // later blocks are at least as large as this one
            if partial + size * remaining >= self.best {
                break;
            }
            if !self.extends_hall(block) {
                continue;
            }
            self.chosen.push(block);
            self.run(idx, partial + size);
            self.chosen.pop();
        }
    }

    /// Multiset Hall condition for every block subset that contains `block`.
    fn extends_hall(&self, block: u32) -> bool {
        self.subsets_ok(0, block, 1)
    }

    fn subsets_ok(&self, start: usize, union: u32, h: usize) -> bool {
        let need = (h * self.r).min(self.k);
        if (union.count_ones() as usize) < need {
            return false;
        }
        if union.count_ones() as usize >= self.k || h == self.h_max {
            return true;
        }
        (start..self.chosen.len()).all(|i| self.subsets_ok(i + 1, union | self.chosen[i], h + 1))
    }
}

/// Minimum total storage over all codes with the given parameters, and a
/// witness code attaining it (double-checked with the exhaustive request oracle).
pub fn exhaustive_optimal_n(
    n: usize,
    k: usize,
    m: usize,
    r: usize,
    caps: SearchCaps,
) -> Result<SearchOutcome> {
    check_nkmr(n, k, m, r)?;
    for (what, value, cap) in [
        ("items", n, caps.max_n),
        ("servers", m, caps.max_m),
        ("request size", k, caps.max_k),
    ] {
        if value > cap {
            return Err(Error::CapExceeded {
                what,
                count: value as u128,
                cap: cap as u128,
            });
        }
    }
    if m > 31 {
        return Err(Error::CapExceeded {
            what: "servers",
            count: m as u128,
            cap: 31,
        });
    }
    let mut candidates: Vec<u32> = (0u32..1 << m)
        .filter(|b| (r..=k).contains(&(b.count_ones() as usize)))
        .collect();
    // size first, then lexicographic order of the sorted point lists
    candidates.sort_by_key(|&b| {
        let points: Vec<u32> = (0..m as u32).filter(|p| b >> p & 1 == 1).collect();
        (b.count_ones(), points)
    });
    let mut search = Search {
        n,
        k,
        r,
        h_max: k.div_ceil(r),
        candidates,
        chosen: Vec::with_capacity(n),
        best: k * n + 1,
        best_blocks: Vec::new(),
    };
    search.run(0, 0);
    assert!(
        search.best <= k * n,
        "storing every item on k servers is always valid"
    );
    let blocks = search
        .best_blocks
        .iter()
        .map(|&b| (0..m).filter(|p| b >> p & 1 == 1).map(|p| p + 1).collect())
        .collect();
    let witness = McbcCode::from_item_blocks(m, blocks)?;
    let params = CodeParams::new(n, k, m, 1, r)?;
    assert!(
        verify_exhaustive(&witness, &params)?.valid,
        "search witness failed the request oracle"
    );
    Ok(SearchOutcome {
        value: search.best as u64,
        witness,
    })
}
