//! Preimages of the Queuesort map.
//!
//! [`preimages`] follows the recursive characterisation: a non-increasing
//! target `w = M_1 P_1 ... M_{k-1} P_{k-1} M_k` ending in its maximum `n`
//! has exactly two disjoint kinds of preimage.
//!
//! 1. `tau . mu_{k-1} P_{k-1} M_k'` for every preimage `tau` of
//!    `M_1 P_1 ... P_{k-2} M_{k-1}' n`, where primes drop the last entry.
//! 2. When `|M_k| >= 2`: take a preimage `sigma'` of `w` without `n`,
//!    decompose it as `N_1 R_1 ... N_s`, and insert `n` in any gap to the
//!    right of the last entry of `N_{s-1}`.
//!
//! Increasing targets are the base case: their preimages are the
//! 321-avoiding arrangements of the same values.

mod av321;
mod oracle;

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub use av321::{gen_av321, Av321};
pub use oracle::{preimages_oracle, preimages_oracle_with_cutoff, DEFAULT_ORACLE_CUTOFF};

use crate::count::{catalan, mpm_simple};
use crate::error::{Error, Result};
use crate::perm::{decompose, relabel, InjectiveWord};
use crate::queuesort::apply_moves;

/// `q^{-1}(target)`, kept in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreimageSet {
    target: InjectiveWord,
    members: BTreeSet<InjectiveWord>,
}

impl PreimageSet {
    pub(crate) fn new(target: InjectiveWord, members: BTreeSet<InjectiveWord>) -> Self {
        PreimageSet { target, members }
    }

    pub fn target(&self) -> &InjectiveWord {
        &self.target
    }

    pub fn members(&self) -> &BTreeSet<InjectiveWord> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &InjectiveWord> {
        self.members.iter()
    }

    pub fn contains(&self, w: &InjectiveWord) -> bool {
        self.members.contains(w)
    }

    /// Checks that every member maps onto the target and uses its values.
    pub fn is_sound(&self) -> bool {
        let values = self.target.sorted_values();
        self.members.iter().all(|m| {
            apply_moves(m.values()) == self.target.values() && m.sorted_values() == values
        })
    }
}

impl<'a> IntoIterator for &'a PreimageSet {
    type Item = &'a InjectiveWord;
    type IntoIter = std::collections::btree_set::Iter<'a, InjectiveWord>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// True iff the last entry of `w` is its maximum (vacuously for `w = ()`).
pub fn has_preimage(w: &InjectiveWord) -> bool {
    ends_with_max(w.values())
}

fn ends_with_max(values: &[u32]) -> bool {
    match values.split_last() {
        None => true,
        Some((&last, rest)) => rest.iter().all(|&v| v < last),
    }
}

fn is_increasing(values: &[u32]) -> bool {
    values.windows(2).all(|w| w[0] < w[1])
}

/// All preimages of `w` by the recursive characterisation.
pub fn preimages(w: &InjectiveWord) -> PreimageSet {
    let members = enumerate(w.values())
        .into_iter()
        .map(InjectiveWord::from_vec_unchecked)
        .collect();
    PreimageSet::new(w.clone(), members)
}

/// The preimages of `w` split by which recursion case produced them.
/// For the base case (increasing `w`) everything lands in `base`.
#[derive(Clone, Debug, Default)]
pub struct CaseSplit {
    pub base: BTreeSet<InjectiveWord>,
    pub prefix_case: BTreeSet<InjectiveWord>,
    pub insertion_case: BTreeSet<InjectiveWord>,
}

pub fn preimages_by_case(w: &InjectiveWord) -> CaseSplit {
    let values = w.values();
    let wrap = |v: Vec<Vec<u32>>| -> BTreeSet<InjectiveWord> {
        v.into_iter().map(InjectiveWord::from_vec_unchecked).collect()
    };
    let mut split = CaseSplit::default();
    if !ends_with_max(values) {
        return split;
    }
    if is_increasing(values) {
        split.base = wrap(increasing_preimages(values));
        return split;
    }
    split.prefix_case = wrap(prefix_case(values));
    split.insertion_case = wrap(insertion_case(values));
    split
}

fn enumerate(values: &[u32]) -> Vec<Vec<u32>> {
    if !ends_with_max(values) {
        return Vec::new();
    }
    if is_increasing(values) {
        return increasing_preimages(values);
    }
    let mut out = prefix_case(values);
    out.extend(insertion_case(values));
    out
}

fn increasing_preimages(values: &[u32]) -> Vec<Vec<u32>> {
    gen_av321(values.len())
        .map(|p| relabel(p.values(), values))
        .collect()
}

/// Case 1: recurse on `M_1 P_1 ... P_{k-2} M_{k-1}' n`, then append
/// `mu_{k-1} P_{k-1} M_k'`.
fn prefix_case(values: &[u32]) -> Vec<Vec<u32>> {
    let (sub, tail) = prefix_split(values);
    enumerate(&sub)
        .into_iter()
        .map(|mut sigma| {
            sigma.extend_from_slice(tail);
            sigma
        })
        .collect()
}

fn prefix_split(values: &[u32]) -> (Vec<u32>, &[u32]) {
    let d = decompose(values).expect("nonempty");
    let k = d.k();
    let n = values.len();
    let mu_end = d.m_block(k - 1).end;
    let mut sub = values[..mu_end - 1].to_vec();
    sub.push(values[n - 1]);
    (sub, &values[mu_end - 1..n - 1])
}

/// Case 2 (needs `|M_k| >= 2`): insert the maximum into preimages of the
/// target with its maximum removed.
fn insertion_case(values: &[u32]) -> Vec<Vec<u32>> {
    let d = decompose(values).expect("nonempty");
    if d.m_len(d.k()) < 2 {
        return Vec::new();
    }
    let (&max, rest) = values.split_last().expect("nonempty");
    let mut out = Vec::new();
    for sigma in enumerate(rest) {
        let from = insertion_start(&sigma);
        for gap in from..=sigma.len() {
            let mut s = sigma.clone();
            s.insert(gap, max);
            out.push(s);
        }
    }
    out
}

/// First admissible gap: just past the last entry of `N_{s-1}`.
fn insertion_start(sigma: &[u32]) -> usize {
    let d = decompose(sigma).expect("nonempty");
    // sigma is a preimage of a non-increasing word, so s >= 2
    debug_assert!(d.k() >= 2);
    d.m_block(d.k() - 1).end
}

/// Which counting route [`count_preimages`] should take.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMethod {
    Recursive,
    Formula,
    Oracle,
    Auto,
}

impl std::str::FromStr for CountMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "recursive" => Ok(CountMethod::Recursive),
            "formula" => Ok(CountMethod::Formula),
            "oracle" => Ok(CountMethod::Oracle),
            "auto" => Ok(CountMethod::Auto),
            other => Err(Error::InvalidParameter(format!("unknown method {other:?}"))),
        }
    }
}

/// `|q^{-1}(w)|` by the chosen route.
///
/// `Formula` covers increasing words (a Catalan number) and `M_1 P_1 M_2`
/// shapes (the ballot-number double sum); `Auto` uses it where it applies
/// and the recursion elsewhere.
pub fn count_preimages(w: &InjectiveWord, method: CountMethod) -> Result<BigUint> {
    match method {
        CountMethod::Recursive => Ok(count_recursive(w.values())),
        CountMethod::Oracle => Ok(BigUint::from(preimages_oracle(w)?.len())),
        CountMethod::Formula => count_by_formula(w.values())
            .ok_or_else(|| Error::IneligibleShape(w.to_string())),
        CountMethod::Auto => {
            Ok(count_by_formula(w.values()).unwrap_or_else(|| count_recursive(w.values())))
        }
    }
}

pub(crate) fn count_by_formula(values: &[u32]) -> Option<BigUint> {
    if is_increasing(values) {
        return Some(catalan(values.len()));
    }
    let d = decompose(values).ok()?;
    d.is_mpm()
        .then(|| mpm_simple(d.m_len(1), d.p_len(1), d.m_len(2)).expect("positive lengths"))
}

fn count_recursive(values: &[u32]) -> BigUint {
    if values.is_empty() {
        return BigUint::one();
    }
    if !ends_with_max(values) {
        return BigUint::zero();
    }
    if is_increasing(values) {
        return catalan(values.len());
    }
    let (sub, _) = prefix_split(values);
    let mut total = count_recursive(&sub);
    let d = decompose(values).expect("nonempty");
    if d.m_len(d.k()) >= 2 {
        let rest = &values[..values.len() - 1];
        for sigma in enumerate(rest) {
            total += sigma.len() + 1 - insertion_start(&sigma);
        }
    }
    total
}
