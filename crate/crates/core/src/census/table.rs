use std::collections::{BTreeMap, BTreeSet};
use std::sync::atomic::{AtomicU32, Ordering};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::perm::{lex_rank, lex_unrank, next_permutation, Permutation};
use crate::queuesort::apply_moves_in_place;

pub const DEFAULT_CENSUS_CUTOFF: usize = 10;

/// Preimage multiplicity of every permutation of length `n`, indexed by
/// lexicographic rank.
#[derive(Clone, Debug)]
pub struct ImageCounts {
    n: usize,
    counts: Vec<u32>,
}

impl ImageCounts {
    /// Applies `q` to all of `S_n` and tallies where each permutation lands.
    pub fn compute(n: usize) -> Self {
        let size = crate::perm::factorial(n) as usize;
        let counts: Vec<AtomicU32> = (0..size).map(|_| AtomicU32::new(0)).collect();
        let sweep = |first: u32| {
            let mut a: Vec<u32> = std::iter::once(first)
                .chain((1..=n as u32).filter(|&v| v != first))
                .collect();
            let mut scratch = a.clone();
            loop {
                scratch.copy_from_slice(&a);
                apply_moves_in_place(&mut scratch);
                counts[lex_rank(&scratch)].fetch_add(1, Ordering::Relaxed);
                if !next_permutation(&mut a[1..]) {
                    break;
                }
            }
        };
        if n == 0 {
            counts[0].store(1, Ordering::Relaxed);
        } else {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                (1..=n as u32).into_par_iter().for_each(sweep);
            }
            #[cfg(not(feature = "parallel"))]
            (1..=n as u32).for_each(sweep);
        }
        ImageCounts {
            n,
            counts: counts.into_iter().map(AtomicU32::into_inner).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `|q^{-1}(p)|` for a permutation of length `n`.
    pub fn count(&self, p: &[u32]) -> u32 {
        self.counts[lex_rank(p)]
    }

    /// `(permutation, preimage count)` in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<u32>, u32)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .map(move |(r, &c)| (lex_unrank(self.n, r), c))
    }

    pub fn tally(&self) -> CensusTable {
        let mut tally: BTreeMap<BigUint, BigUint> = BTreeMap::new();
        for &c in &self.counts {
            *tally.entry(BigUint::from(c)).or_default() += 1u32;
        }
        CensusTable { n: self.n, tally }
    }
}

/// `k -> q_n^(k)`: how many permutations of length `n` have exactly `k`
/// preimages. Only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusTable {
    n: usize,
    tally: BTreeMap<BigUint, BigUint>,
}

impl CensusTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tally(&self) -> &BTreeMap<BigUint, BigUint> {
        &self.tally
    }

    /// `q_n^(k)`, zero when absent.
    pub fn get(&self, k: u64) -> BigUint {
        self.tally
            .get(&BigUint::from(k))
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }

    pub fn contains_count(&self, k: u64) -> bool {
        self.tally.contains_key(&BigUint::from(k))
    }

    /// `sum_k q_n^(k)`; equals `n!`.
    pub fn total(&self) -> BigUint {
        self.tally.values().sum()
    }

    /// `sum_k k q_n^(k)`; also `n!`, since every permutation has one image.
    pub fn weighted_total(&self) -> BigUint {
        self.tally.iter().map(|(k, v)| k * v).sum()
    }
}

fn check_cutoff(n: usize, cutoff: usize) -> Result<()> {
    if n > cutoff {
        return Err(Error::CensusCutoff { n, cutoff });
    }
    Ok(())
}

/// Census of `S_n` by forward-mapping every permutation.
pub fn census(n: usize) -> Result<CensusTable> {
    census_with_cutoff(n, DEFAULT_CENSUS_CUTOFF)
}

pub fn census_with_cutoff(n: usize, cutoff: usize) -> Result<CensusTable> {
    check_cutoff(n, cutoff)?;
    Ok(ImageCounts::compute(n).tally())
}

/// `Q_n^(k)`: the permutations of length `n` with exactly `k` preimages.
pub fn classify(n: usize, k: u64) -> Result<BTreeSet<Permutation>> {
    classify_with_cutoff(n, k, DEFAULT_CENSUS_CUTOFF)
}

pub fn classify_with_cutoff(n: usize, k: u64, cutoff: usize) -> Result<BTreeSet<Permutation>> {
    check_cutoff(n, cutoff)?;
    Ok(ImageCounts::compute(n)
        .iter()
        .filter(|&(_, c)| u64::from(c) == k)
        .map(|(p, _)| Permutation::from_vec_unchecked(p))
        .collect())
}
