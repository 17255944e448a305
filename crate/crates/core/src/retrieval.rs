//! Serving multiset requests by augmenting paths, and the exhaustive verifier.
//!
//! The retrieval network has a source edge into every item with capacity equal
//! to its multiplicity, unit edges item -> server for every stored copy, and a
//! capacity-`t` edge from every server to the sink. A request is servable iff a
//! flow saturates all source edges. Augmenting paths probe servers in
//! ascending index order, so results are deterministic.

use crate::combinat::bounded_multiset_count;
use crate::error::{param, Error, Result};
use crate::hall::{VerificationResult, Witness};
use crate::request::{Assignment, MultisetRequest};
use crate::setsystem::{CodeParams, McbcCode};

/// Default cap on the number of requests [`verify_exhaustive`] may enumerate.
pub const DEFAULT_REQUEST_CAP: u128 = 10_000_000;

/// Partial flow: which (item, server) copies are read, and the load per server.
#[derive(Debug, Clone)]
struct Flow<'a> {
    code: &'a McbcCode,
    t: usize,
    m: usize,
    used: Vec<bool>,
    load: Vec<usize>,
}

impl<'a> Flow<'a> {
    fn new(code: &'a McbcCode, t: usize) -> Self {
        let m = code.m();
        Flow {
            code,
            t,
            m,
            used: vec![false; code.n() * m],
            load: vec![0; m],
        }
    }

    /// Routes one more read of `item` (0-based). Leaves the flow untouched on failure.
    fn augment(&mut self, item: usize) -> bool {
        let mut visited = vec![false; self.m];
        self.search(item, &mut visited)
    }

    /// Takes the first server with spare capacity; failing that, the first
    /// server whose current reader can be moved elsewhere.
    fn search(&mut self, item: usize, visited: &mut [bool]) -> bool {
        let code = self.code;
        let block = &code.item_view().blocks()[item];
        let free = block
            .iter()
            .map(|s| s - 1)
            .find(|&j| !self.used[item * self.m + j] && self.load[j] < self.t);
        if let Some(j) = free {
            self.used[item * self.m + j] = true;
            self.load[j] += 1;
            return true;
        }
        for &server in block {
            let j = server - 1;
            if visited[j] || self.used[item * self.m + j] {
                continue;
            }
            visited[j] = true;
            for &other in &code.server_view().blocks()[j] {
                let other = other - 1;
                if self.used[other * self.m + j] && self.search(other, visited) {
                    self.used[other * self.m + j] = false;
                    self.used[item * self.m + j] = true;
                    return true;
                }
            }
        }
        false
    }

    fn assignment(&self) -> Assignment {
        let reads = (0..self.m)
            .map(|j| {
                (0..self.code.n())
                    .filter(|&i| self.used[i * self.m + j])
                    .map(|i| i + 1)
                    .collect()
            })
            .collect();
        Assignment { reads }
    }
}

/// Finds read sets `D_j ⊆ C_j` with `|D_j| <= t` covering `request`, or `None`
/// when the request cannot be served.
pub fn serve_request(
    code: &McbcCode,
    request: &MultisetRequest,
    t: usize,
) -> Result<Option<Assignment>> {
    if t < 1 {
        return param("t must be at least 1");
    }
    request.check_items(code.n())?;
    let mut flow = Flow::new(code, t);
    for (item, count) in request.iter() {
        for _ in 0..count {
            if !flow.augment(item - 1) {
                return Ok(None);
            }
        }
    }
    Ok(Some(flow.assignment()))
}

/// Checks every multiset request of maximal size with multiplicities at most
/// `r` (nondecreasing item sequences, lexicographic order) using the default cap.
pub fn verify_exhaustive(code: &McbcCode, params: &CodeParams) -> Result<VerificationResult> {
    verify_exhaustive_capped(code, params, DEFAULT_REQUEST_CAP)
}

/// Number of maximal requests [`verify_exhaustive`] enumerates: multisets of
/// size `min(k, n*r)` with multiplicities at most `r`.
pub fn maximal_request_count(params: &CodeParams) -> u128 {
    let size = params.k().min(params.n() * params.r());
    bounded_multiset_count(params.n(), params.r(), size)
}

/// [`verify_exhaustive`] with an explicit enumeration cap.
///
/// Sub-maximal requests need no separate check: a sub-multiset of a servable
/// request is servable. When `n*r < k` the largest request is every item `r`
/// times, so that size is used instead of `k`. The witness is the first
/// unservable request in lexicographic order.
pub fn verify_exhaustive_capped(
    code: &McbcCode,
    params: &CodeParams,
    cap: u128,
) -> Result<VerificationResult> {
    if code.n() != params.n() || code.m() != params.m() {
        return param(format!(
            "code has n = {}, m = {} but parameters say n = {}, m = {}",
            code.n(),
            code.m(),
            params.n(),
            params.m()
        ));
    }
    let count = maximal_request_count(params);
    if count > cap {
        return Err(Error::CapExceeded {
            what: "multiset requests",
            count,
            cap,
        });
    }
    let mut walk = RequestWalk {
        n: params.n(),
        r: params.r(),
        size: params.k().min(params.n() * params.r()),
        prefix: Vec::new(),
    };
    let flow = Flow::new(code, params.t());
    Ok(match walk.first_unservable(flow, 0, 0) {
        Some(items) => {
            VerificationResult::violated(Witness::Request(MultisetRequest::from_items(items)))
        }
        None => VerificationResult::valid(),
    })
}

/// Depth-first walk over nondecreasing item sequences, extending the flow by
/// one augmentation per step. A prefix that cannot be served condemns all its
/// extensions, and its lexicographically first completion is the witness.
struct RequestWalk {
    n: usize,
    r: usize,
    size: usize,
    prefix: Vec<usize>,
}

impl RequestWalk {
    /// `first` is the smallest 0-based item allowed next; `run` is how many
    /// times it already appears at the end of the prefix.
    fn first_unservable(&mut self, flow: Flow<'_>, first: usize, run: usize) -> Option<Vec<usize>> {
        let left = self.size - self.prefix.len();
        if left == 0 {
            return None;
        }
        for item in first..self.n {
            let used = if item == first { run } else { 0 };
            if used == self.r {
                continue;
            }
            // capacity still available from this item onwards
            if (self.r - used) + (self.n - item - 1) * self.r < left {
                break;
            }
            let mut next = flow.clone();
            self.prefix.push(item);
            if !next.augment(item) {
                return Some(self.complete(used + 1));
            }
            if let Some(found) = self.first_unservable(next, item, used + 1) {
                return Some(found);
            }
            self.prefix.pop();
        }
        None
    }

    /// Lexicographically first completion of the current prefix, 1-based.
    fn complete(&self, mut run: usize) -> Vec<usize> {
        let mut items = self.prefix.clone();
        let mut item = *items.last().expect("nonempty prefix");
        while items.len() < self.size {
            if run == self.r {
                item += 1;
                run = 0;
            }
            items.push(item);
            run += 1;
        }
        items.into_iter().map(|i| i + 1).collect()
    }
}
