use std::collections::HashSet;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite sequence of distinct positive integers.
///
/// Every structural operation in this crate is defined on words rather than
/// on permutations, so sub-words cut out during preimage recursion never have
/// to be rescaled.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InjectiveWord(Vec<u32>);

impl InjectiveWord {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(values.len());
        for &v in &values {
            if v == 0 {
                return Err(Error::InvalidToken("0".into()));
            }
            if !seen.insert(v) {
                return Err(Error::DuplicateValue(v));
            }
        }
        Ok(InjectiveWord(values))
    }

    /// Caller guarantees distinct, positive values.
    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(InjectiveWord::new(values.clone()).is_ok());
        InjectiveWord(values)
    }

    pub fn empty() -> Self {
        InjectiveWord(Vec::new())
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_value(&self) -> Option<u32> {
        self.0.iter().copied().max()
    }

    pub fn last(&self) -> Option<u32> {
        self.0.last().copied()
    }

    /// True when the word equals its sorted copy.
    pub fn is_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }

    /// The values in increasing order.
    pub fn sorted_values(&self) -> Vec<u32> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v
    }

    /// Whether the value set is exactly `1..=n`.
    pub fn is_permutation(&self) -> bool {
        let n = self.0.len() as u32;
        self.0.iter().all(|&v| v <= n)
    }
}

impl fmt::Display for InjectiveWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for InjectiveWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

impl TryFrom<Vec<u32>> for InjectiveWord {
    type Error = Error;

    fn try_from(values: Vec<u32>) -> Result<Self> {
        InjectiveWord::new(values)
    }
}

/// Parses either separated integers (`"2 1 5 4 3"`, `"2,1,5"`) or a compact
/// digit string (`"21543"`, one digit per entry).
///
/// A text without any separator and longer than one character is read in
/// the compact form, so `"10"` is rejected; write `"10,"` for the one-entry
/// word.
pub fn parse_word(text: &str) -> Result<InjectiveWord> {
    let text = text.trim();
    let is_sep = |c: char| c.is_whitespace() || c == ',';
    if !text.contains(is_sep) && text.chars().count() > 1 {
        let mut values = Vec::with_capacity(text.len());
        for c in text.chars() {
            let d = c
                .to_digit(10)
                .ok_or_else(|| Error::InvalidToken(c.to_string()))?;
            if d == 0 {
                return Err(Error::ZeroInDigitString(text.to_string()));
            }
            values.push(d);
        }
        return InjectiveWord::new(values);
    }
    let values = text
        .split(is_sep)
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<u32>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(Error::InvalidToken(t.to_string())),
        })
        .collect::<Result<Vec<_>>>()?;
    InjectiveWord::new(values)
}

/// An injective word whose value set is exactly `{1, ..., n}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(InjectiveWord);

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        Permutation::try_from(InjectiveWord::new(values)?)
    }

    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        let w = InjectiveWord::from_vec_unchecked(values);
        debug_assert!(w.is_permutation());
        Permutation(w)
    }

    pub fn identity(n: usize) -> Self {
        Permutation(InjectiveWord((1..=n as u32).collect()))
    }

    pub fn as_word(&self) -> &InjectiveWord {
        &self.0
    }

    pub fn into_word(self) -> InjectiveWord {
        self.0
    }
}

impl Deref for Permutation {
    type Target = InjectiveWord;

    fn deref(&self) -> &InjectiveWord {
        &self.0
    }
}

impl TryFrom<InjectiveWord> for Permutation {
    type Error = Error;

    fn try_from(w: InjectiveWord) -> Result<Self> {
        if w.is_permutation() {
            Ok(Permutation(w))
        } else {
            Err(Error::NotAPermutation(w.to_string()))
        }
    }
}

impl From<Permutation> for InjectiveWord {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::try_from(parse_word(s)?)
    }
}

/// Replaces every entry by its rank, giving the order-isomorphic permutation.
pub fn standardize(w: &InjectiveWord) -> Permutation {
    let sorted = w.sorted_values();
    let values = w
        .values()
        .iter()
        .map(|v| sorted.binary_search(v).expect("value present") as u32 + 1)
        .collect();
    Permutation::from_vec_unchecked(values)
}

/// Maps a pattern over `1..=n` onto the given increasing value list:
/// entry `r` becomes `values[r - 1]`.
pub(crate) fn relabel(pattern: &[u32], values: &[u32]) -> Vec<u32> {
    pattern.iter().map(|&r| values[r as usize - 1]).collect()
}
