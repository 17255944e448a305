//! Multiset combinatorial batch codes (MCBCs).
//!
//! An `(n, N, k, m, t; r)`-MCBC stores `n` items on `m` servers, `N` copies in
//! total, so that any multiset request of `k` items, each requested at most `r`
//! times, can be served reading at most `t` items per server.
//!
//! The crate covers:
//! - the set-system model of a code ([`SetSystem`], [`McbcCode`]) and its dual;
//! - Hall-type verifiers ([`verify_multiset_hall`], [`verify_kt_hall_cbc`]),
//!   a request server ([`serve_request`]) and an exhaustive request oracle
//!   ([`verify_exhaustive`]);
//! - explicit constructions in [`constructions`];
//! - lower bounds, known optimal storage values and an exhaustive optimum
//!   search in [`bounds`];
//! - the `mcbc` command-line front end in [`cli`].
//!
//! ```
//! use mcbc::{serve_request, verify_multiset_hall, McbcCode, MultisetRequest};
//!
//! let servers = vec![vec![1, 3, 5], vec![1, 4, 5], vec![2, 3, 5], vec![2, 4, 5], vec![3, 4, 5]];
//! let code = McbcCode::from_servers(5, servers)?;
//! assert!(verify_multiset_hall(code.item_view(), 5, 2)?.valid);
//!
//! let request: MultisetRequest = "3,3,4,4,5".parse()?;
//! let reads = serve_request(&code, &request, 1)?.expect("servable");
//! assert_eq!(reads.reads[0], vec![3]);
//! # Ok::<(), mcbc::Error>(())
//! ```

pub mod bounds;
pub mod cli;
pub mod combinat;
pub mod constructions;
pub mod error;
pub mod hall;
pub mod io;
pub mod request;
pub mod retrieval;
pub mod setsystem;

mod bitset;

pub use error::{Error, Result};
pub use hall::{union_size, verify_kt_hall_cbc, verify_multiset_hall, VerificationResult, Witness};
pub use request::{Assignment, MultisetRequest};
pub use retrieval::{
    serve_request, verify_exhaustive, verify_exhaustive_capped, DEFAULT_REQUEST_CAP,
};
pub use setsystem::{block_profile, BlockProfile, CodeParams, McbcCode, SetSystem};
