//! Multiset requests and the per-server read sets that serve them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::setsystem::{CodeParams, McbcCode};

/// A multiset of 1-based item indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MultisetRequest {
    multiplicities: BTreeMap<usize, usize>,
}

impl MultisetRequest {
    pub fn new() -> Self {
        Self::default()
    }

    /// Request from a list of item indices with repetition.
    pub fn from_items<I: IntoIterator<Item = usize>>(items: I) -> Self {
        let mut req = Self::new();
        for i in items {
            req.add(i, 1);
        }
        req
    }

    pub fn add(&mut self, item: usize, count: usize) {
        if count > 0 {
            *self.multiplicities.entry(item).or_insert(0) += count;
        }
    }

    pub fn multiplicity(&self, item: usize) -> usize {
        self.multiplicities.get(&item).copied().unwrap_or(0)
    }

    /// `(item, count)` pairs in ascending item order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.multiplicities.iter().map(|(&i, &c)| (i, c))
    }

    /// Total number of requested reads.
    pub fn size(&self) -> usize {
        self.multiplicities.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicities.is_empty()
    }

    /// Items with repetition, nondecreasing.
    pub fn items(&self) -> Vec<usize> {
        self.iter()
            .flat_map(|(i, c)| std::iter::repeat_n(i, c))
            .collect()
    }

    /// Every item lies in `[1..=n]`.
    pub fn check_items(&self, n: usize) -> Result<()> {
        match self.multiplicities.keys().find(|&&i| i == 0 || i > n) {
            Some(i) => Err(Error::Parameter(format!(
                "requested item {i} outside [1..{n}]"
            ))),
            None => Ok(()),
        }
    }

    /// Items in range, each multiplicity at most `r`, total at most `k`.
    pub fn check_against(&self, params: &CodeParams) -> Result<()> {
        self.check_items(params.n())?;
        if let Some((i, c)) = self.iter().find(|&(_, c)| c > params.r()) {
            return Err(Error::Parameter(format!(
                "item {i} requested {c} times, more than r = {}",
                params.r()
            )));
        }
        if self.size() > params.k() {
            return Err(Error::Parameter(format!(
                "request size {} exceeds k = {}",
                self.size(),
                params.k()
            )));
        }
        Ok(())
    }
}

impl FromStr for MultisetRequest {
    type Err = Error;

    /// Parses `3,3,4,4,5`; the empty string is the empty request.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::new());
        }
        let mut req = Self::new();
        for tok in s.split(',') {
            let item: usize = tok
                .trim()
                .parse()
                .map_err(|_| Error::Format(format!("bad item index {tok:?} in request")))?;
            if item == 0 {
                return Err(Error::Format("item indices are 1-based".into()));
            }
            req.add(item, 1);
        }
        Ok(req)
    }
}

impl fmt::Display for MultisetRequest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.items().iter().map(usize::to_string).collect();
        f.write_str(&items.join(","))
    }
}

/// Read sets `D_1..D_m`; `reads[j]` lists the items read from server `j + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Assignment {
    pub reads: Vec<Vec<usize>>,
}

impl Assignment {
    /// Checks `D_j ⊆ C_j`, `|D_j| <= t`, and that every item is read from at
    /// least as many servers as it is requested.
    pub fn serves(&self, code: &McbcCode, request: &MultisetRequest, t: usize) -> bool {
        if self.reads.len() != code.m() {
            return false;
        }
        let servers = code.server_view().blocks();
        let mut covered: BTreeMap<usize, usize> = BTreeMap::new();
        for (d, c) in self.reads.iter().zip(servers) {
            if d.len() > t || d.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            if !d.iter().all(|i| c.binary_search(i).is_ok()) {
                return false;
            }
            for &i in d {
                *covered.entry(i).or_insert(0) += 1;
            }
        }
        request
            .iter()
            .all(|(i, c)| covered.get(&i).copied().unwrap_or(0) >= c)
    }
}
