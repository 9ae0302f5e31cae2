use std::ops::Range;

use super::word::InjectiveWord;
use crate::error::{Error, Result};

/// 1-based positions of the left-to-right maxima of `w`.
pub fn ltr_maxima(w: &InjectiveWord) -> Vec<usize> {
    ltr_positions(w.values())
}

pub(crate) fn ltr_positions(values: &[u32]) -> Vec<usize> {
    let mut best = 0;
    let mut out = Vec::new();
    for (i, &v) in values.iter().enumerate() {
        if v > best {
            best = v;
            out.push(i + 1);
        }
    }
    out
}

/// Bitmask of LTR-maximum positions, bit `i - 1` for position `i`.
pub(crate) fn ltr_mask(values: &[u32]) -> u64 {
    let mut best = 0;
    let mut mask = 0u64;
    for (i, &v) in values.iter().enumerate() {
        if v > best {
            best = v;
            mask |= 1 << i;
        }
    }
    mask
}

/// The factorisation `M_1 P_1 ... M_{k-1} P_{k-1} M_k` of a nonempty word
/// into maximal runs of contiguous LTR maxima (the `M` blocks) and the
/// stretches between them (the `P` blocks).
///
/// Blocks are stored as slice ranges into the source word (0-based,
/// half-open). `M_k` is an empty range at the end of the word when the last
/// entry is not an LTR maximum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    m: Vec<Range<usize>>,
    p: Vec<Range<usize>>,
    mu: Vec<Option<u32>>,
    ltr: Vec<usize>,
}

impl Decomposition {
    /// Number of `M` blocks, the `k` of the factorisation.
    pub fn k(&self) -> usize {
        self.m.len()
    }

    /// Range of `M_i`, `1 <= i <= k`.
    pub fn m_block(&self, i: usize) -> Range<usize> {
        self.m[i - 1].clone()
    }

    /// Range of `P_i`, `1 <= i < k`.
    pub fn p_block(&self, i: usize) -> Range<usize> {
        self.p[i - 1].clone()
    }

    pub fn m_len(&self, i: usize) -> usize {
        self.m[i - 1].len()
    }

    pub fn p_len(&self, i: usize) -> usize {
        self.p[i - 1].len()
    }

    /// Last value of `M_i`; `None` only for an empty `M_k`.
    pub fn mu(&self, i: usize) -> Option<u32> {
        self.mu[i - 1]
    }

    pub fn m_lengths(&self) -> Vec<usize> {
        self.m.iter().map(|r| r.len()).collect()
    }

    pub fn p_lengths(&self) -> Vec<usize> {
        self.p.iter().map(|r| r.len()).collect()
    }

    /// 1-based LTR-maximum positions of the source word.
    pub fn ltr_positions(&self) -> &[usize] {
        &self.ltr
    }

    /// Blocks in source order, `M_1, P_1, ..., P_{k-1}, M_k`.
    pub fn blocks(&self) -> Vec<Range<usize>> {
        let mut out = Vec::with_capacity(2 * self.m.len());
        for i in 0..self.m.len() {
            out.push(self.m[i].clone());
            if i < self.p.len() {
                out.push(self.p[i].clone());
            }
        }
        out
    }

    /// True for the `M_1 P_1 M_2` shape with all three blocks nonempty.
    pub fn is_mpm(&self) -> bool {
        self.k() == 2 && !self.m[1].is_empty()
    }
}

/// LTR-max decomposition of a nonempty word.
pub fn ltr_decomposition(w: &InjectiveWord) -> Result<Decomposition> {
    decompose(w.values())
}

pub(crate) fn decompose(values: &[u32]) -> Result<Decomposition> {
    if values.is_empty() {
        return Err(Error::EmptyWord);
    }
    let n = values.len();
    let ltr = ltr_positions(values);
    let mut is_ltr = vec![false; n];
    for &pos in &ltr {
        is_ltr[pos - 1] = true;
    }
    let mut m = Vec::new();
    let mut p = Vec::new();
    let mut i = 0;
    while i < n {
        let start = i;
        while i < n && is_ltr[i] {
            i += 1;
        }
        m.push(start..i);
        if i == n {
            break;
        }
        let start = i;
        while i < n && !is_ltr[i] {
            i += 1;
        }
        p.push(start..i);
        if i == n {
            m.push(n..n);
        }
    }
    let mu = m
        .iter()
        .map(|r| (!r.is_empty()).then(|| values[r.end - 1]))
        .collect();
    Ok(Decomposition { m, p, mu, ltr })
}
