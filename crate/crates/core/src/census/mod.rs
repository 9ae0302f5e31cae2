//! Whole-`S_n` preimage census, canonical witnesses and the named
//! verification suites.

mod suites;
mod table;
mod witness;

pub use suites::{
    run_suite, verify_suite, Failure, Suite, SuiteBounds, VerificationReport, DEFAULT_SEED,
};
pub use table::{
    census, census_with_cutoff, classify, classify_with_cutoff, CensusTable, ImageCounts,
    DEFAULT_CENSUS_CUTOFF,
};
pub use witness::{canonical_mpm_perm, not3_family, perm_with_ltr_positions};
