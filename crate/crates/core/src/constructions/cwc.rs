//! Binary constant weight codes, represented by their codeword supports.

use serde::{Deserialize, Serialize};

use crate::combinat::k_subsets;
use crate::error::{param, Result};

/// A constant weight code of length `m`, weight `w` and declared minimum distance `d`.
///
/// Two supports at Hamming distance `>= d` share at most `w - d/2` positions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantWeightCode {
    pub length: usize,
    pub weight: usize,
    pub min_distance: usize,
    #[serde(rename = "blocks")]
    supports: Vec<Vec<usize>>,
}

impl ConstantWeightCode {
    /// Validates distinctness, weights, range and pairwise distance.
    pub fn new(
        length: usize,
        weight: usize,
        min_distance: usize,
        supports: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if !min_distance.is_multiple_of(2) {
            return param("constant weight codes have even minimum distance");
        }
        let mut supports = supports;
        for s in &mut supports {
            s.sort_unstable();
            s.dedup();
            if s.len() != weight || s.iter().any(|&p| p == 0 || p > length) {
                return param(format!(
                    "support {s:?} is not a {weight}-subset of [1..{length}]"
                ));
            }
        }
        for (a, sa) in supports.iter().enumerate() {
            for sb in &supports[a + 1..] {
                if sa == sb {
                    return param(format!("support {sa:?} repeated"));
                }
                if distance(sa, sb) < min_distance {
                    return param(format!(
                        "supports {sa:?} and {sb:?} are closer than {min_distance}"
                    ));
                }
            }
        }
        Ok(ConstantWeightCode {
            length,
            weight,
            min_distance,
            supports,
        })
    }

    pub fn supports(&self) -> &[Vec<usize>] {
        &self.supports
    }

    pub fn len(&self) -> usize {
        self.supports.len()
    }

    pub fn is_empty(&self) -> bool {
        self.supports.is_empty()
    }

    /// Keeps the first `count` codewords.
    pub fn truncated(&self, count: usize) -> ConstantWeightCode {
        ConstantWeightCode {
            supports: self.supports[..count.min(self.len())].to_vec(),
            ..self.clone()
        }
    }
}

/// Hamming distance between the characteristic vectors of two sorted supports.
pub fn distance(a: &[usize], b: &[usize]) -> usize {
    let common = a.iter().filter(|x| b.binary_search(x).is_ok()).count();
    a.len() + b.len() - 2 * common
}

/// Residue-class code: the `w`-subsets of `[1..=m]` whose element sum is
/// congruent to the most popular residue mod `m` (ties to the smallest residue).
///
/// Two `w`-subsets at distance 2 differ by swapping one element, which changes
/// the sum by a nonzero amount below `m`, so the code has distance at least 4.
/// Pigeonhole gives at least `C(m, w) / m` codewords. Supports come out in
/// lexicographic order.
pub fn graham_sloane_cwc(m: usize, w: usize) -> Result<ConstantWeightCode> {
    if w < 1 || w > m {
        return param(format!("need 1 <= w <= m, got m = {m}, w = {w}"));
    }
    let mut classes = vec![Vec::new(); m];
    for s in k_subsets(m, w) {
        let residue = s.iter().sum::<usize>() % m;
        classes[residue].push(s);
    }
    let mut best = 0;
    for (c, class) in classes.iter().enumerate() {
        if class.len() > classes[best].len() {
            best = c;
        }
    }
    let supports = std::mem::take(&mut classes[best]);
    ConstantWeightCode::new(m, w, 4, supports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::binom;

    #[test]
    fn seven_three() {
        // oracle: count each residue class of the 35 triples of [7] directly
        let mut counts = [0usize; 7];
        for a in 1..=7 {
            for b in a + 1..=7 {
                for c in b + 1..=7 {
                    counts[(a + b + c) % 7] += 1;
                }
            }
        }
        let best = *counts.iter().max().unwrap();
        let code = graham_sloane_cwc(7, 3).unwrap();
        assert_eq!(code.len(), best);
        assert!(code.len() >= 5);
        for (i, a) in code.supports().iter().enumerate() {
            for b in &code.supports()[i + 1..] {
                assert!(a.iter().filter(|x| b.contains(x)).count() <= 1);
            }
        }
    }

    #[test]
    fn weight_one_has_one_word() {
        for m in 1..8 {
            assert_eq!(graham_sloane_cwc(m, 1).unwrap().len(), 1);
        }
    }

    #[test]
    fn sixteen_fourteen() {
        let code = graham_sloane_cwc(16, 14).unwrap();
        assert!(code.len() >= 8);
        assert_eq!(binom(16, 14), 120);
        let mut counts = [0usize; 16];
        for s in k_subsets(16, 14) {
            counts[s.iter().sum::<usize>() % 16] += 1;
        }
        assert_eq!(code.len(), *counts.iter().max().unwrap());
    }

    #[test]
    fn rejects_bad_codes() {
        assert!(graham_sloane_cwc(4, 0).is_err());
        assert!(graham_sloane_cwc(4, 5).is_err());
        assert!(ConstantWeightCode::new(4, 2, 4, vec![vec![1, 2], vec![1, 3]]).is_err());
        assert!(ConstantWeightCode::new(4, 2, 4, vec![vec![1, 2], vec![1, 2]]).is_err());
        assert!(ConstantWeightCode::new(4, 2, 3, vec![vec![1, 2]]).is_err());
        assert!(ConstantWeightCode::new(4, 2, 4, vec![vec![1, 2], vec![3, 4]]).is_ok());
    }
}
