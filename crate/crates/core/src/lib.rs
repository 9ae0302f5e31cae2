//! Preimages of permutations under sorting with a queue that can be
//! bypassed: the sorting map itself, a recursive preimage enumerator, exact
//! counting formulas, and brute-force census tooling to check them.

pub mod census;
pub mod count;
mod error;
pub mod perm;
pub mod preimage;
pub mod queuesort;

pub use error::{Error, Result};
pub use perm::{parse_word, InjectiveWord, Permutation};
