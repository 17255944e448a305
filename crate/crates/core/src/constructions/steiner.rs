//! Steiner systems `S(2, l, m)`, affine planes, and the codes they induce.

use serde::{Deserialize, Serialize};

use super::field::FiniteFieldTable;
use crate::error::{param, Result};
use crate::setsystem::McbcCode;

/// `l`-subsets of `[1..=m]` covering every pair of points exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SteinerSystem {
    pub points: usize,
    pub block_size: usize,
    blocks: Vec<Vec<usize>>,
}

impl SteinerSystem {
    /// Validates block sizes and exact pair coverage.
    pub fn new(points: usize, block_size: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if block_size < 2 {
            return param("Steiner blocks need at least two points");
        }
        let mut blocks = blocks;
        let mut cover = vec![0u32; points * points];
        for b in &mut blocks {
            b.sort_unstable();
            b.dedup();
            if b.len() != block_size || b.iter().any(|&p| p == 0 || p > points) {
                return param(format!(
                    "block {b:?} is not a {block_size}-subset of [1..{points}]"
                ));
            }
            for (i, &x) in b.iter().enumerate() {
                for &y in &b[i + 1..] {
                    cover[(x - 1) * points + (y - 1)] += 1;
                }
            }
        }
        for x in 0..points {
            for y in x + 1..points {
                let c = cover[x * points + y];
                if c != 1 {
                    return param(format!("pair {{{}, {}}} covered {c} times", x + 1, y + 1));
                }
            }
        }
        Ok(SteinerSystem {
            points,
            block_size,
            blocks,
        })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks through a point, `(m - 1) / (l - 1)`.
    pub fn replication(&self) -> usize {
        (self.points - 1) / (self.block_size - 1)
    }
}

/// Affine plane of order `q` as an `S(2, q, q^2)`.
///
/// Point `(x, y)` has index `q*x + y + 1`. Lines `y = a*x + b` come first,
/// ordered by `a` then `b`, followed by the `q` vertical lines `x = c`.
pub fn affine_plane(q: usize) -> Result<SteinerSystem> {
    let field = FiniteFieldTable::new(q)?;
    let point = |x: usize, y: usize| q * x + y + 1;
    let mut blocks = Vec::with_capacity(q * q + q);
    for a in 0..q {
        for b in 0..q {
            blocks.push(
                (0..q)
                    .map(|x| point(x, field.add(field.mul(a, x), b)))
                    .collect(),
            );
        }
    }
    for c in 0..q {
        blocks.push((0..q).map(|y| point(c, y)).collect());
    }
    SteinerSystem::new(q * q, q, blocks)
}

/// The code whose item blocks are the Steiner blocks: `n = |blocks|`, `N = l*n`.
///
/// Valid for `floor(l/2) + 1 <= r <= l` and `k <= (l - r + 1)(2r - 1)`: any
/// two blocks meet in at most one point, so `h` blocks cover at least
/// `h*l - C(h, 2)` points.
pub fn steiner_to_mcbc(system: &SteinerSystem, k: usize, r: usize) -> Result<McbcCode> {
    let l = system.block_size;
    if system.points <= l {
        return param(format!("need m > l, got m = {}, l = {l}", system.points));
    }
    if r < l / 2 + 1 || r > l {
        return param(format!(
            "need floor(l/2) + 1 <= r <= l, got r = {r}, l = {l}"
        ));
    }
    let k_max = (l - r + 1) * (2 * r - 1);
    if k < r || k > k_max {
        return param(format!(
            "need r <= k <= (l - r + 1)(2r - 1) = {k_max}, got k = {k}"
        ));
    }
    McbcCode::from_item_blocks(system.points, system.blocks.clone())
}

/// Code from the affine plane of order `q`: the Steiner window for `(k, r)`,
/// plus `r = 1, k <= q^2`, where the affine plane is an optimal batch code.
pub fn affine_plane_mcbc(q: usize, k: usize, r: usize) -> Result<McbcCode> {
    let plane = affine_plane(q)?;
    if r == 1 {
        if k < 1 || k > q * q {
            return param(format!(
                "with r = 1 need 1 <= k <= q^2 = {}, got k = {k}",
                q * q
            ));
        }
        return McbcCode::from_item_blocks(plane.points, plane.blocks.clone());
    }
    steiner_to_mcbc(&plane, k, r)
}
