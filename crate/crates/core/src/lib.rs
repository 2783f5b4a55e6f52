//! Constructing and verifying generating pairs of finite permutation groups:
//! Sylow pairs for alternating groups, pi / pi' pairs for arbitrary small
//! groups, and an exact counting bound over odd-index maximal subgroups.

pub mod altgen;
pub mod arith;
pub mod blocks;
pub mod bound;
pub mod bsgs;
pub mod classes;
pub mod coset;
pub mod engine;
pub mod error;
pub mod fixtures;
pub mod group;
pub mod groupfile;
pub mod perm;
pub mod ser;
pub mod sylow;

pub use error::{Error, Result};
pub use group::{GroupHandle, Limits};
pub use perm::{CycleType, Permutation};
