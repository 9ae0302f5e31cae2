use crate::error::{Error, Result};
use crate::perm::Permutation;

/// `(p1+1 ... p1+m1) (1 ... p1) (p1+m1+1 ... p1+m1+m2)`: a permutation whose
/// LTR-max decomposition is exactly `M_1 P_1 M_2` with the given lengths.
pub fn canonical_mpm_perm(m1: usize, p1: usize, m2: usize) -> Result<Permutation> {
    if m1 == 0 || p1 == 0 || m2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "block lengths must be positive, got ({m1}, {p1}, {m2})"
        )));
    }
    let (m1, p1, m2) = (m1 as u32, p1 as u32, m2 as u32);
    let values = (p1 + 1..=p1 + m1)
        .chain(1..=p1)
        .chain(p1 + m1 + 1..=p1 + m1 + m2)
        .collect();
    Ok(Permutation::from_vec_unchecked(values))
}

/// `n (n-1) ... 2 1 (n+2) (n+3) (n+1) (n+4)`, which has exactly `n + 2`
/// preimages for `n >= 2` and for `n = 0` (where it reads `2314`).
/// At `n = 1` the member `13425` has 5 preimages, so that case is rejected.
pub fn not3_family(n: usize) -> Result<Permutation> {
    if n == 1 {
        return Err(Error::FamilyException);
    }
    let n = n as u32;
    let values = (1..=n)
        .rev()
        .chain([n + 2, n + 3, n + 1, n + 4])
        .collect();
    Ok(Permutation::from_vec_unchecked(values))
}

/// Some permutation of length `n` whose LTR maxima sit exactly at the given
/// 1-based positions (which must include 1 when `n > 0`).
///
/// Non-LTR positions get `1..=r` left to right and LTR positions the values
/// above them, so every non-LTR entry is beaten by the first entry.
pub fn perm_with_ltr_positions(n: usize, positions: &[usize]) -> Result<Permutation> {
    let mut is_ltr = vec![false; n];
    for &pos in positions {
        if pos == 0 || pos > n {
            return Err(Error::InvalidParameter(format!("position {pos} outside 1..={n}")));
        }
        is_ltr[pos - 1] = true;
    }
    if n > 0 && !is_ltr[0] {
        return Err(Error::InvalidParameter("position 1 is always an LTR maximum".into()));
    }
    let low = is_ltr.iter().filter(|&&b| !b).count() as u32;
    let (mut next_low, mut next_high) = (1, low + 1);
    let values = is_ltr
        .iter()
        .map(|&ltr| {
            let slot = if ltr { &mut next_high } else { &mut next_low };
            *slot += 1;
            *slot - 1
        })
        .collect();
    Ok(Permutation::from_vec_unchecked(values))
}
