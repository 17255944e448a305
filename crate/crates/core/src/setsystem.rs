//! Set systems, codes in server/item view, and the parameter tuple.

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{param, Error, Result};

/// A ground set `[1..=ground_size]` together with an ordered multiset of blocks.
///
/// Blocks are stored sorted ascending and may be empty or repeated. The block
/// index carries identity (a server in the server view, an item in the item view).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SetSystem {
    ground_size: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetSystem {
    /// Builds a set system, sorting each block. Fails if a point lies outside
    /// `[1..=ground_size]` or a block lists a point twice.
    pub fn new(ground_size: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if ground_size == 0 {
            return param("ground set must be nonempty");
        }
        let mut blocks = blocks;
        for (idx, block) in blocks.iter_mut().enumerate() {
            block.sort_unstable();
            if let Some(&p) = block.iter().find(|&&p| p == 0 || p > ground_size) {
                return Err(Error::Format(format!(
                    "block {} contains point {p} outside [1..{ground_size}]",
                    idx + 1
                )));
            }
            if block.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Format(format!("block {} repeats a point", idx + 1)));
            }
        }
        Ok(SetSystem {
            ground_size,
            blocks,
        })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Sum of block sizes.
    pub fn total_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// The dual set system: ground `[block_count]`, block `i` lists the
    /// indices of the blocks containing point `i`.
    pub fn dual(&self) -> SetSystem {
        let mut dual = vec![Vec::new(); self.ground_size];
        for (j, block) in self.blocks.iter().enumerate() {
            for &p in block {
                dual[p - 1].push(j + 1);
            }
        }
        SetSystem {
            // an empty block list still needs a nonempty ground set to be a valid value
            ground_size: self.blocks.len().max(1),
            blocks: dual,
        }
    }

    pub(crate) fn masks(&self) -> Vec<BitSet> {
        self.blocks
            .iter()
            .map(|b| {
                let mut set = BitSet::new(self.ground_size);
                b.iter().for_each(|&p| set.insert(p - 1));
                set
            })
            .collect()
    }
}

/// An MCBC layout: `m` servers storing subsets of `n` items, kept in both views.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McbcCode {
    server_view: SetSystem,
    item_view: SetSystem,
}

impl McbcCode {
    /// Code from server contents `C_1..C_m` over items `[1..=n]`.
    pub fn from_servers(n: usize, servers: Vec<Vec<usize>>) -> Result<Self> {
        if servers.is_empty() {
            return param("a code needs at least one server");
        }
        let server_view = SetSystem::new(n, servers)?;
        let item_view = server_view.dual();
        Ok(McbcCode {
            server_view,
            item_view,
        })
    }

    /// Code from item blocks `B_1..B_n` (the servers holding each item) over servers `[1..=m]`.
    pub fn from_item_blocks(m: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if blocks.is_empty() {
            return param("a code needs at least one item");
        }
        let item_view = SetSystem::new(m, blocks)?;
        let server_view = item_view.dual();
        Ok(McbcCode {
            server_view,
            item_view,
        })
    }

    pub fn server_view(&self) -> &SetSystem {
        &self.server_view
    }

    pub fn item_view(&self) -> &SetSystem {
        &self.item_view
    }

    /// Number of items.
    pub fn n(&self) -> usize {
        self.item_view.block_count()
    }

    /// Number of servers.
    pub fn m(&self) -> usize {
        self.server_view.block_count()
    }

    /// Total storage `N`.
    pub fn storage(&self) -> usize {
        self.server_view.total_size()
    }

    /// Per-server load `|C_j|`.
    pub fn server_loads(&self) -> Vec<usize> {
        self.server_view.blocks().iter().map(Vec::len).collect()
    }

    /// Replaces each item `c` by its `r` copies `c, c + n, ..., c + (r-1)n`.
    ///
    /// The result serves every `k`-request of distinct items iff `self` serves
    /// every `k`-multiset request with multiplicities at most `r`.
    pub fn expand_to_cbc(&self, r: usize) -> Result<McbcCode> {
        if r == 0 {
            return param("r must be at least 1");
        }
        let n = self.n();
        let servers = self
            .server_view
            .blocks()
            .iter()
            .map(|c| {
                (0..r)
                    .flat_map(|j| c.iter().map(move |&item| item + j * n))
                    .collect()
            })
            .collect();
        McbcCode::from_servers(r * n, servers)
    }
}

/// The tuple `(n, k, m, t, r)`; validated on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CodeParams {
    n: usize,
    k: usize,
    m: usize,
    t: usize,
    r: usize,
}

impl CodeParams {
    pub fn new(n: usize, k: usize, m: usize, t: usize, r: usize) -> Result<Self> {
        if [n, k, m, t, r].contains(&0) {
            return param("n, k, m, t and r must all be positive");
        }
        if r > k {
            return param(format!("r = {r} exceeds k = {k}"));
        }
        if k > t * m {
            return param(format!("k = {k} exceeds t*m = {}", t * m));
        }
        Ok(CodeParams { n, k, m, t, r })
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn k(&self) -> usize {
        self.k
    }
    pub fn m(&self) -> usize {
        self.m
    }
    pub fn t(&self) -> usize {
        self.t
    }
    pub fn r(&self) -> usize {
        self.r
    }
}

/// Counts `A_i` of item blocks of each size `i` in `0..=k`, plus blocks larger than `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockProfile {
    pub counts: Vec<u64>,
    pub overflow: u64,
}

impl BlockProfile {
    pub fn count(&self, size: usize) -> u64 {
        self.counts.get(size).copied().unwrap_or(0)
    }

    pub fn k(&self) -> usize {
        self.counts.len() - 1
    }
}

/// Histogram of block sizes. Blocks larger than `k` land in the overflow bucket.
pub fn block_profile(item_view: &SetSystem, k: usize) -> BlockProfile {
    let mut counts = vec![0u64; k + 1];
    let mut overflow = 0;
    for b in item_view.blocks() {
        match counts.get_mut(b.len()) {
            Some(c) => *c += 1,
            None => overflow += 1,
        }
    }
    BlockProfile { counts, overflow }
}
