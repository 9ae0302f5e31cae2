use std::collections::BTreeSet;

use super::PreimageSet;
use crate::error::{Error, Result};
use crate::perm::{for_each_arrangement, InjectiveWord};
use crate::queuesort::apply_moves_in_place;

/// Largest length scanned by default (9! forward maps).
pub const DEFAULT_ORACLE_CUTOFF: usize = 9;

/// Brute-force preimages: applies `q` to every arrangement of the target's
/// values and keeps those that land on the target.
pub fn preimages_oracle(w: &InjectiveWord) -> Result<PreimageSet> {
    preimages_oracle_with_cutoff(w, DEFAULT_ORACLE_CUTOFF)
}

pub fn preimages_oracle_with_cutoff(w: &InjectiveWord, cutoff: usize) -> Result<PreimageSet> {
    if w.len() > cutoff {
        return Err(Error::OracleCutoff {
            len: w.len(),
            cutoff,
        });
    }
    let target = w.values();
    let mut members = BTreeSet::new();
    let mut scratch = vec![0u32; target.len()];
    for_each_arrangement(target, |sigma| {
        scratch.copy_from_slice(sigma);
        apply_moves_in_place(&mut scratch);
        if scratch == target {
            members.insert(InjectiveWord::from_vec_unchecked(sigma.to_vec()));
        }
    });
    Ok(PreimageSet::new(w.clone(), members))
}
