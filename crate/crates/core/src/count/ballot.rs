//! The two ballot-number triangles.
//!
//! `b(n, i)` counts 321-avoiders of length `n` with `n` at position `i`
//! (`1 <= i <= n`); `g(n, i)` counts 321-avoiders whose first non-LTR
//! maximum sits at position `i` (`2 <= i <= n + 1`, with `g(n, n + 1) = 1`
//! for the identity).

use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::numbers::{binomial, catalan};
use crate::error::{Error, Result};

/// Memoised `b` and `g` triangles, grown row by row.
///
/// `b` rows come from the row-sum recurrence
/// `b(n + 1, i) = sum_{j <= i} b(n, j)`; `g` rows come from the closed form
/// `binom(2n - i + 1, n) (i - 1) / (2n - i + 1)`.
#[derive(Clone, Debug, Default)]
pub struct BallotTable {
    // b[n - 1][i - 1]
    b: Vec<Vec<BigUint>>,
    // g[n - 1][i - 2]
    g: Vec<Vec<BigUint>>,
}

impl BallotTable {
    pub fn new() -> Self {
        BallotTable::default()
    }

    pub fn with_rows(n: usize) -> Self {
        let mut t = BallotTable::new();
        t.ensure_rows(n);
        t
    }

    pub fn rows(&self) -> usize {
        self.b.len()
    }

    pub fn ensure_rows(&mut self, n: usize) {
        while self.b.len() < n {
            let row = match self.b.last() {
                None => vec![BigUint::one()],
                Some(prev) => {
                    let mut row = Vec::with_capacity(prev.len() + 1);
                    let mut acc = BigUint::zero();
                    for v in prev {
                        acc += v;
                        row.push(acc.clone());
                    }
                    row.push(acc);
                    row
                }
            };
            self.b.push(row);
            let m = self.b.len();
            self.g.push((2..=m + 1).map(|i| g_closed_form(m, i)).collect());
        }
    }

    pub fn b(&self, n: usize, i: usize) -> Option<&BigUint> {
        if i == 0 || n == 0 {
            return None;
        }
        self.b.get(n - 1)?.get(i - 1)
    }

    pub fn g(&self, n: usize, i: usize) -> Option<&BigUint> {
        if i < 2 || n == 0 {
            return None;
        }
        self.g.get(n - 1)?.get(i - 2)
    }

    pub fn b_row(&self, n: usize) -> Option<&[BigUint]> {
        self.b.get(n.checked_sub(1)?).map(Vec::as_slice)
    }

    pub fn g_row(&self, n: usize) -> Option<&[BigUint]> {
        self.g.get(n.checked_sub(1)?).map(Vec::as_slice)
    }
}

fn shared_table() -> &'static RwLock<BallotTable> {
    static TABLE: OnceLock<RwLock<BallotTable>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(BallotTable::new()))
}

/// `b(n, i)` from the shared memoised triangle.
pub fn ballot_b(n: usize, i: usize) -> Result<BigUint> {
    if n == 0 || i == 0 || i > n {
        return Err(Error::IndexOutOfRange { table: "b", n, i });
    }
    {
        let table = shared_table().read().expect("ballot table poisoned");
        if let Some(v) = table.b(n, i) {
            return Ok(v.clone());
        }
    }
    let mut table = shared_table().write().expect("ballot table poisoned");
    table.ensure_rows(n);
    Ok(table.b(n, i).expect("row built").clone())
}

fn g_closed_form(n: usize, i: usize) -> BigUint {
    let d = 2 * n + 1 - i;
    binomial(d, n) * (i - 1) / d
}

/// `g(n, i)` by the closed form.
pub fn ballot_g(n: usize, i: usize) -> Result<BigUint> {
    if n == 0 || i < 2 || i > n + 1 {
        return Err(Error::IndexOutOfRange { table: "g", n, i });
    }
    Ok(g_closed_form(n, i))
}

/// `sum_{h=1}^{i-1} binom(n - h, n - i) b(i - 1, h)`, which equals `b(n, i)`
/// for `2 <= i <= n`.
pub fn ballot_collapse(n: usize, i: usize) -> Result<BigUint> {
    if n == 0 || i < 2 || i > n {
        return Err(Error::IndexOutOfRange {
            table: "ballot collapse",
            n,
            i,
        });
    }
    let mut sum = BigUint::zero();
    for h in 1..i {
        sum += binomial(n - h, n - i) * ballot_b(i - 1, h)?;
    }
    Ok(sum)
}

/// `b(m1 + j + 1, m1)` expanded over Catalan numbers:
/// `sum_{h=1}^{floor((j+1)/2)+1} (-1)^{h-1} binom(j + 2 - h, h - 1) C_{m1+j+1-h}`.
pub fn ballot_to_catalan(m1: usize, j: usize) -> Result<BigInt> {
    if m1 == 0 {
        return Err(Error::InvalidParameter("ballot_to_catalan needs m1 >= 1".into()));
    }
    let mut sum = BigInt::zero();
    for h in 1..=(j + 1) / 2 + 1 {
        let term = BigInt::from(binomial(j + 2 - h, h - 1) * catalan(m1 + j + 1 - h));
        if h % 2 == 1 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn first_rows() {
        let t = BallotTable::with_rows(5);
        let row = |n| t.b_row(n).unwrap().to_vec();
        assert_eq!(row(1), vec![big(1)]);
        assert_eq!(row(2), vec![big(1), big(1)]);
        assert_eq!(row(3), vec![big(1), big(2), big(2)]);
        assert_eq!(row(4), vec![big(1), big(3), big(5), big(5)]);
        assert_eq!(row(5), vec![big(1), big(4), big(9), big(14), big(14)]);
        assert_eq!(t.g(4, 2), Some(&big(5)));
        assert_eq!(t.g(4, 5), Some(&big(1)));
        assert_eq!(t.g(4, 1), None);
        assert_eq!(t.b(4, 5), None);
    }

    #[test]
    fn b_examples() {
        assert_eq!(ballot_b(1, 1).unwrap(), big(1));
        assert_eq!(ballot_b(2, 1).unwrap(), big(1));
        assert_eq!(ballot_b(4, 3).unwrap(), big(5));
        assert!(ballot_b(3, 4).is_err());
        assert!(ballot_b(3, 0).is_err());
    }

    #[test]
    fn g_examples() {
        assert_eq!(ballot_g(4, 2).unwrap(), big(5));
        assert_eq!(ballot_g(4, 4).unwrap(), big(3));
        assert_eq!(ballot_g(4, 3).unwrap(), big(5));
        assert_eq!(ballot_g(4, 5).unwrap(), big(1));
        assert_eq!(ballot_g(1, 2).unwrap(), big(1));
        assert!(ballot_g(4, 1).is_err());
        assert!(ballot_g(4, 6).is_err());
    }

    #[test]
    fn collapse_examples() {
        assert_eq!(ballot_collapse(4, 3).unwrap(), big(5));
        assert_eq!(ballot_collapse(2, 2).unwrap(), big(1));
        for n in 2..12u64 {
            assert_eq!(ballot_collapse(n as usize, 2).unwrap(), big(n - 1));
        }
        assert!(ballot_collapse(4, 1).is_err());
    }

    #[test]
    fn catalan_expansion_examples() {
        for m1 in 1..8 {
            assert_eq!(ballot_to_catalan(m1, 0).unwrap(), BigInt::from(catalan(m1)));
        }
        // C_3 - C_2 = b(4, 2)
        assert_eq!(ballot_to_catalan(2, 1).unwrap(), BigInt::from(3));
        assert_eq!(ballot_b(4, 2).unwrap(), big(3));
        // C_5 - 2 C_4 = b(6, 3)
        assert_eq!(ballot_to_catalan(3, 2).unwrap(), BigInt::from(14));
        assert_eq!(ballot_b(6, 3).unwrap(), big(14));
    }
}
