//! Order-preserving squares.
//!
//! A fragment `uv` of a string is an order-preserving square when `u != v`
//! and `u` is order-isomorphic to `v`. This crate enumerates every
//! occurrence of such squares in a string over an integer alphabet
//! `{1..σ}`, generating O(σ) candidates per suffix and verifying each in
//! constant time against an order-preserving suffix tree.
//!
//! Layout:
//!
//! - [`opcore`]: codes, the `cnt` character oracle, op-borders and op-periods.
//! - [`suffix_tree`]: the order-preserving suffix tree with LCA and
//!   string-depth ancestor fingerprints.
//! - [`enumerator`]: leftmost occurrences, k-active ranges, the result index
//!   and the candidate/verify loop.
//! - [`oracle`]: brute-force reference implementations.
//! - [`genbench`]: input generators, bound audits and benchmark reports.
//!
//! All public positions are 1-based.

pub mod enumerator;
pub mod error;
pub mod genbench;
pub mod lce;
pub mod opcore;
pub mod oracle;
pub mod radix;
pub mod rmq;
pub mod sequence;
pub mod suffix_tree;

pub use enumerator::{
    count_distinct_as_words, enumerate_op_squares, precompute_results, CandidateAudit, Enumeration, Enumerator,
    SquareOccurrence,
};
pub use error::{Error, Result};
pub use opcore::{compute_code, is_op_isomorphic, CntTable, CodeSymbol};
pub use sequence::Sequence;
pub use suffix_tree::{FingerprintIndex, LcaIndex, NodeId, OpLce, OpSuffixTree};
