//! Preimage counts for targets of shape `M_1 P_1 M_2`.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::ballot::{ballot_b, ballot_g};
use super::numbers::{binomial, multiset_coeff};
use crate::error::{Error, Result};

/// 321-avoiders of length `n + k` whose `k` largest entries are LTR maxima:
/// `sum_{i=0}^{n-1} multiset(n - i + 1, k) b(n, i + 1)`.
pub fn count_k_largest_ltr(n: usize, k: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidParameter("count_k_largest_ltr needs n >= 1".into()));
    }
    let mut sum = BigUint::zero();
    for i in 0..n {
        sum += multiset_coeff(n - i + 1, k) * ballot_b(n, i + 1)?;
    }
    Ok(sum)
}

fn check_shape(m1: usize, p1: usize, m2: usize) -> Result<()> {
    if m1 == 0 || p1 == 0 || m2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "block lengths must be positive, got ({m1}, {p1}, {m2})"
        )));
    }
    Ok(())
}

/// The full triple sum over `(i, j)` with the two inner sums over `l` and
/// `k`. An inner sum over an empty index range counts as 1.
pub fn mpm_full(m1: usize, p1: usize, m2: usize) -> Result<BigUint> {
    check_shape(m1, p1, m2)?;
    let mut total = BigUint::zero();
    for i in 1..=m2 {
        for j in 0..i {
            let left = if m1 >= 2 {
                let mut s = BigUint::zero();
                for l in 0..=m1 - 2 {
                    s += multiset_coeff(m1 - l, j + 1) * ballot_b(m1 - 1, l + 1)?;
                }
                s
            } else {
                BigUint::one()
            };
            let right = if m2 - i + 1 >= 2 {
                let mut s = BigUint::zero();
                for k in 2..=m2 - i + 1 {
                    s += ballot_g(m2 - i, k)? * multiset_coeff(k, p1 + i - j - 1);
                }
                s
            } else {
                BigUint::one()
            };
            total += binomial(i - 1, j) * left * right;
        }
    }
    Ok(total)
}

/// `sum_{i=1}^{m2} sum_{j=0}^{i-1} binom(i-1, j) b(m1+j+1, m1) b(m2+p1-j, m2-i+1)`.
pub fn mpm_simple(m1: usize, p1: usize, m2: usize) -> Result<BigUint> {
    check_shape(m1, p1, m2)?;
    let mut total = BigUint::zero();
    for i in 1..=m2 {
        for j in 0..i {
            total += binomial(i - 1, j)
                * ballot_b(m1 + j + 1, m1)?
                * ballot_b(m2 + p1 - j, m2 - i + 1)?;
        }
    }
    Ok(total)
}
