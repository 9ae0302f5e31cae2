use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// Number of fixed-point-free permutations of length `n`, from
/// `D_n = (n - 1)(D_{n-1} + D_{n-2})`, `D_0 = 1`, `D_1 = 0`.
pub fn derangement(n: usize) -> BigUint {
    let (mut prev, mut cur) = (BigUint::one(), BigUint::zero());
    if n == 0 {
        return prev;
    }
    for m in 2..=n {
        let next = (&prev + &cur) * (m - 1);
        prev = cur;
        cur = next;
    }
    cur
}

/// Number of `v`-element multisets over a `u`-element set,
/// `binom(u + v - 1, v)`, with `(u, 0) -> 1` and `(0, v > 0) -> 0`.
pub fn multiset_coeff(u: usize, v: usize) -> BigUint {
    if v == 0 {
        return BigUint::one();
    }
    if u == 0 {
        return BigUint::zero();
    }
    binomial(u + v - 1, v)
}

fn require_positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter(format!("{what} needs n >= 1")));
    }
    Ok(())
}

/// Permutations of length `n` with no preimage: `(n - 1)! (n - 1)`.
pub fn count_q0(n: usize) -> Result<BigUint> {
    require_positive(n, "q0")?;
    Ok(factorial(n - 1) * (n - 1))
}

/// Permutations of length `n` with exactly one preimage: `D_{n-1}`.
pub fn count_q1(n: usize) -> Result<BigUint> {
    require_positive(n, "q1")?;
    Ok(derangement(n - 1))
}

/// Permutations of length `n` with exactly two preimages, from
/// `q_{m+1} = (m - 1)(q_m + q_{m-1})` for `m >= 3` with
/// `q_0 = q_1 = q_3 = 0`, `q_2 = 1`.
pub fn count_q2(n: usize) -> BigUint {
    match n {
        0 | 1 | 3 => return BigUint::zero(),
        2 => return BigUint::one(),
        _ => {}
    }
    // (q_{m-1}, q_m) starting at m = 3
    let (mut prev, mut cur) = (BigUint::one(), BigUint::zero());
    for m in 3..n {
        let next = (&cur + &prev) * (m - 1);
        prev = cur;
        cur = next;
    }
    cur
}
