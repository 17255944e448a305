//! Explicit MCBC constructions. Each builds the item view (one block of
//! servers per item) and returns the code.
//!
//! Wherever a construction leaves a choice of subsets open, subsets are taken
//! in lexicographic order so outputs are deterministic.

pub mod cwc;
pub mod field;
pub mod steiner;

use std::collections::BTreeMap;

pub use crate::hall::union_size_table;
pub use cwc::{graham_sloane_cwc, ConstantWeightCode};
pub use field::FiniteFieldTable;
pub use steiner::{affine_plane, affine_plane_mcbc, steiner_to_mcbc, SteinerSystem};

use crate::combinat::{binom64, gcd, k_subsets};
use crate::error::{param, Result};
use crate::setsystem::McbcCode;

/// Number of `(k-1)`-subset copies used by the replication family, `floor((k-1)/r) * C(m, k-1)`.
pub fn replication_threshold(k: usize, m: usize, r: usize) -> u64 {
    ((k - 1) / r) as u64 * binom64(m, k - 1)
}

/// Every item on `r` servers of its own: `B_i = {(i-1)r + 1, ..., ir}`.
/// Requires `m >= nr`; storage `rn`, valid for every `k`.
pub fn construct_disjoint(n: usize, m: usize, r: usize) -> Result<McbcCode> {
    if n < 1 || r < 1 || m < n * r {
        return param(format!("need m >= n*r, got n = {n}, m = {m}, r = {r}"));
    }
    McbcCode::from_item_blocks(
        m,
        (0..n).map(|i| (i * r + 1..=i * r + r).collect()).collect(),
    )
}

/// Every item on servers `1..=k`; storage `kn`, valid for all `r <= k`.
pub fn construct_full(n: usize, k: usize, m: usize) -> Result<McbcCode> {
    if n < 1 || k < 1 || k > m {
        return param(format!("need 1 <= k <= m, got k = {k}, m = {m}"));
    }
    McbcCode::from_item_blocks(m, vec![(1..=k).collect(); n])
}

/// `floor((k-1)/r)` copies of every `(k-1)`-subset of `[m]`, then `n - T` copies of `{1..k}`.
///
/// Requires `r < k <= m` and `n >= T`. Storage `kn - floor((k-1)/r) C(m, k-1)`.
pub fn construct_replication(n: usize, k: usize, m: usize, r: usize) -> Result<McbcCode> {
    if r < 1 || r >= k || k > m {
        return param(format!(
            "need 1 <= r < k <= m, got k = {k}, m = {m}, r = {r}"
        ));
    }
    let threshold = replication_threshold(k, m, r);
    if (n as u64) < threshold {
        return param(format!(
            "need n >= floor((k-1)/r) * C(m, k-1) = {threshold}, got n = {n}"
        ));
    }
    let copies = (k - 1) / r;
    let mut blocks = Vec::with_capacity(n);
    for s in k_subsets(m, k - 1) {
        blocks.extend(std::iter::repeat_n(s, copies));
    }
    let full: Vec<usize> = (1..=k).collect();
    blocks.extend(std::iter::repeat_n(full, n - threshold as usize));
    McbcCode::from_item_blocks(m, blocks)
}

/// The first `n` of the `(k-1)`-subsets of `[m]`, for `n < C(m, k-1)`.
///
/// Serves `r = k - 1` with storage `(k-1) n`, meeting the `rn` lower bound.
pub fn construct_small_n_distinct(n: usize, k: usize, m: usize) -> Result<McbcCode> {
    if k < 2 || k > m + 1 {
        return param(format!("need 2 <= k <= m + 1, got k = {k}, m = {m}"));
    }
    let available = binom64(m, k - 1);
    if n < 1 || n as u64 >= available {
        return param(format!(
            "need 1 <= n < C(m, k-1) = {available}, got n = {n}"
        ));
    }
    McbcCode::from_item_blocks(m, k_subsets(m, k - 1).take(n).collect())
}

/// Item blocks are the codeword supports; storage `w n`.
///
/// Requires `r <= w <= k - 1` and minimum distance at least `2(k - w)`, so
/// any two blocks already cover `k` servers.
pub fn construct_from_cwc(code: &ConstantWeightCode, k: usize, r: usize) -> Result<McbcCode> {
    let w = code.weight;
    if r < 1 || w < r || w + 1 > k {
        return param(format!(
            "need r <= w <= k - 1, got w = {w}, k = {k}, r = {r}"
        ));
    }
    if code.min_distance < 2 * (k - w) {
        return param(format!(
            "need minimum distance >= 2(k - w) = {}, got {}",
            2 * (k - w),
            code.min_distance
        ));
    }
    if code.is_empty() {
        return param("constant weight code has no codewords");
    }
    McbcCode::from_item_blocks(code.length, code.supports().to_vec())
}

/// Storage achieved by [`construct_distance4`]: `n(k-1) - floor((T - n)/(m - k + 1))`.
pub fn distance4_storage(n: usize, k: usize, m: usize, r: usize) -> u64 {
    let threshold = replication_threshold(k, m, r);
    let alpha = (threshold - n as u64) / (m - k + 1) as u64;
    n as u64 * (k - 1) as u64 - alpha
}

/// Replication family trimmed by a distance-4 code of weight `k - 2`.
///
/// Starts from `floor((k-1)/r)` copies of every `(k-1)`-subset (`T` blocks).
/// For each of the first `alpha = floor((T - n)/(m - k + 1))` residue-class
/// codewords it adds the `(k-2)`-support and drops one copy of each of its
/// `m - k + 2` supersets of size `k - 1`; the lexicographically last surplus
/// `(k-1)`-blocks are then dropped to reach exactly `n` items. The
/// `(k-1)`-blocks come first in lexicographic order, followed by the
/// supports in code order. Storage `n(k-1) - alpha`.
pub fn construct_distance4(n: usize, k: usize, m: usize, r: usize) -> Result<McbcCode> {
    if r < 1 || r + 2 > k || k > m {
        return param(format!(
            "need 1 <= r <= k - 2 and k <= m, got k = {k}, m = {m}, r = {r}"
        ));
    }
    let threshold = replication_threshold(k, m, r) as usize;
    if n < 1 || n > threshold {
        return param(format!(
            "need 1 <= n <= floor((k-1)/r) * C(m, k-1) = {threshold}, got n = {n}"
        ));
    }
    let alpha = (threshold - n) / (m - k + 1);
    let code = graham_sloane_cwc(m, k - 2)?;
    if alpha > code.len() {
        return param(format!(
            "need floor((T - n)/(m - k + 1)) = {alpha} <= {} available weight-{} codewords",
            code.len(),
            k - 2
        ));
    }
    let copies = (k - 1) / r;
    let mut multiplicity: BTreeMap<Vec<usize>, usize> =
        k_subsets(m, k - 1).map(|s| (s, copies)).collect();
    let supports = &code.supports()[..alpha];
    for s in supports {
        for extra in (1..=m).filter(|p| !s.contains(p)) {
            let mut sup = s.clone();
            sup.push(extra);
            sup.sort_unstable();
            let c = multiplicity
                .get_mut(&sup)
                .expect("superset is a (k-1)-subset");
            // distance 4 keeps supersets of distinct codewords apart
            assert!(*c > 0, "superset removed twice");
            *c -= 1;
        }
    }
    let mut large: Vec<Vec<usize>> = multiplicity
        .into_iter()
        .flat_map(|(s, c)| std::iter::repeat_n(s, c))
        .collect();
    let before_trim = threshold - alpha * (m - k + 1);
    let surplus = before_trim - n;
    if surplus > large.len() {
        return param(format!(
            "only {} blocks of size k - 1 left to drop {surplus}",
            large.len()
        ));
    }
    large.truncate(large.len() - surplus);
    large.extend(supports.iter().cloned());
    McbcCode::from_item_blocks(m, large)
}

/// Codes with `m = k`: writing `k = a r + b` with `0 <= b < r`, the first `a`
/// blocks are disjoint runs of `r` servers, then (when `b > 0`) `r` blocks
/// each missing one server from every run, then full blocks `[k]`.
///
/// Requires `n >= a` when `b = 0` and `n >= a + r` otherwise. Storage
/// `kn - floor((k-1)/r) k`.
pub fn construct_diagonal(n: usize, k: usize, r: usize) -> Result<McbcCode> {
    if r < 1 || r > k {
        return param(format!("need 1 <= r <= k, got k = {k}, r = {r}"));
    }
    let (alpha, beta) = (k / r, k % r);
    let needed = if beta == 0 { alpha } else { alpha + r };
    if n < needed {
        return param(format!(
            "need n >= {needed} for k = {k}, r = {r}, got n = {n}"
        ));
    }
    let mut blocks: Vec<Vec<usize>> = (0..alpha)
        .map(|i| (i * r + 1..=i * r + r).collect())
        .collect();
    if beta > 0 {
        for i in alpha + 1..=alpha + r {
            let missing: Vec<usize> = (0..alpha).map(|j| i - alpha + j * r).collect();
            blocks.push((1..=k).filter(|p| !missing.contains(p)).collect());
        }
    }
    let full: Vec<usize> = (1..=k).collect();
    blocks.resize(n, full);
    McbcCode::from_item_blocks(k, blocks)
}

/// Regular codes for `r = k`: block `i` of the base code is the cyclic run of
/// `k` servers starting at `(i-1)k mod m`; `n = c m / gcd(m, k)` repeats the
/// base `c` times. Every server stores exactly `kn/m` items.
pub fn construct_regular(n: usize, k: usize, m: usize) -> Result<McbcCode> {
    if k < 1 || k > m {
        return param(format!("need 1 <= k <= m, got k = {k}, m = {m}"));
    }
    let base = m / gcd(m, k);
    if n == 0 || !n.is_multiple_of(base) {
        return param(format!(
            "n must be a positive multiple of m/gcd(m, k) = {base}, got n = {n}"
        ));
    }
    let blocks: Vec<Vec<usize>> = (0..base)
        .map(|i| (i * k..(i + 1) * k).map(|j| j % m + 1).collect())
        .collect();
    let repeated = blocks.iter().cloned().cycle().take(n).collect();
    McbcCode::from_item_blocks(m, repeated)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hall::verify_multiset_hall;
    use crate::retrieval::verify_exhaustive;
    use crate::setsystem::{block_profile, CodeParams};

    fn hall(code: &McbcCode, k: usize, r: usize) -> bool {
        verify_multiset_hall(code.item_view(), k, r).unwrap().valid
    }

    fn exhaustive(code: &McbcCode, k: usize, r: usize) -> bool {
        let p = CodeParams::new(code.n(), k, code.m(), 1, r).unwrap();
        verify_exhaustive(code, &p).unwrap().valid
    }

    #[test]
    fn trivial_layouts() {
        let code = construct_disjoint(3, 7, 2).unwrap();
        assert_eq!(
            code.item_view().blocks(),
            &[vec![1, 2], vec![3, 4], vec![5, 6]]
        );
        assert!(exhaustive(&code, 6, 2));
        assert!(construct_disjoint(4, 7, 2).is_err());
        let code = construct_full(3, 3, 4).unwrap();
        assert_eq!(code.storage(), 9);
        assert!(exhaustive(&code, 3, 3));
    }

    #[test]
    fn replication_at_threshold() {
        let code = construct_replication(6, 3, 4, 2).unwrap();
        assert_eq!(
            code.item_view().blocks(),
            k_subsets(4, 2).collect::<Vec<_>>().as_slice()
        );
        assert_eq!(code.storage(), 12);
        assert!(hall(&code, 3, 2));
        let p = block_profile(code.item_view(), 3);
        assert_eq!(p.counts, vec![0, 0, 6, 0]);
    }

    #[test]
    fn replication_batch_code() {
        let code = construct_replication(12, 3, 4, 1).unwrap();
        assert_eq!(code.storage(), 24);
        assert!(hall(&code, 3, 1));
        let code = construct_replication(14, 3, 4, 1).unwrap();
        assert_eq!(code.storage(), 3 * 14 - 12);
        assert_eq!(code.item_view().blocks()[13], vec![1, 2, 3]);
        assert!(construct_replication(11, 3, 4, 1).is_err());
        assert!(construct_replication(12, 3, 4, 3).is_err());
    }

    #[test]
    fn small_n() {
        let code = construct_small_n_distinct(3, 3, 4).unwrap();
        assert_eq!(
            code.item_view().blocks(),
            &[vec![1, 2], vec![1, 3], vec![1, 4]]
        );
        assert_eq!(code.storage(), 6);
        assert!(hall(&code, 3, 2));
        let code = construct_small_n_distinct(1, 2, 3).unwrap();
        assert_eq!(code.item_view().blocks(), &[vec![1]]);
        assert!(construct_small_n_distinct(5, 4, 4).is_err());
    }

    #[test]
    fn from_disjoint_code() {
        let cwc = ConstantWeightCode::new(4, 2, 4, vec![vec![1, 2], vec![3, 4]]).unwrap();
        let code = construct_from_cwc(&cwc, 4, 2).unwrap();
        assert_eq!((code.n(), code.storage(), code.m()), (2, 4, 4));
        assert!(hall(&code, 4, 2));
        assert!(construct_from_cwc(&cwc, 5, 2).is_err()); // distance 4 < 2(5-2)
        assert!(construct_from_cwc(&cwc, 2, 2).is_err()); // w > k - 1
        assert!(construct_from_cwc(&cwc, 4, 3).is_err()); // w < r
        let single = ConstantWeightCode::new(5, 3, 4, vec![vec![1, 2, 3]]).unwrap();
        for r in 1..=3 {
            assert!(hall(&construct_from_cwc(&single, 4, r).unwrap(), 4, r));
        }
    }

    #[test]
    fn distance4_example() {
        let code = construct_distance4(8, 4, 5, 2).unwrap();
        assert_eq!(code.n(), 8);
        assert_eq!(code.storage(), 23);
        assert_eq!(distance4_storage(8, 4, 5, 2), 23);
        assert!(hall(&code, 4, 2));
        assert!(exhaustive(&code, 4, 2));
    }

    #[test]
    fn distance4_without_removals_is_replication() {
        let code = construct_distance4(10, 4, 5, 2).unwrap();
        assert_eq!(code, construct_replication(10, 4, 5, 2).unwrap());
        assert!(construct_distance4(11, 4, 5, 2).is_err());
        assert!(construct_distance4(8, 4, 5, 3).is_err());
    }

    #[test]
    fn diagonal_examples() {
        let code = construct_diagonal(4, 5, 2).unwrap();
        assert_eq!(
            code.item_view().blocks(),
            &[vec![1, 2], vec![3, 4], vec![2, 4, 5], vec![1, 3, 5]]
        );
        assert_eq!(code.storage(), 10);
        assert!(exhaustive(&code, 5, 2));

        let code = construct_diagonal(3, 4, 2).unwrap();
        assert_eq!(
            code.item_view().blocks(),
            &[vec![1, 2], vec![3, 4], vec![1, 2, 3, 4]]
        );
        assert_eq!(code.storage(), 8);
        assert!(exhaustive(&code, 4, 2));

        let code = construct_diagonal(3, 4, 4).unwrap();
        assert!(code.item_view().blocks().iter().all(|b| b.len() == 4));
        assert_eq!(code.storage(), 12);
        assert!(construct_diagonal(3, 5, 2).is_err());
    }

    #[test]
    fn regular_examples() {
        let code = construct_regular(3, 4, 6).unwrap();
        assert_eq!(
            code.item_view().blocks(),
            &[vec![1, 2, 3, 4], vec![1, 2, 5, 6], vec![3, 4, 5, 6]]
        );
        assert!(code.server_loads().iter().all(|&l| l == 2));
        assert!(exhaustive(&code, 4, 4));
        let code = construct_regular(5, 3, 3).unwrap();
        assert!(code.server_loads().iter().all(|&l| l == 5));
        assert!(construct_regular(5, 4, 6).is_err());
    }
}
