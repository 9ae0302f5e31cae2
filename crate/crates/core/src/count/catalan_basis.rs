//! Rewriting `M_1 P_1 M_2` preimage counts over the Catalan numbers
//! `C_{m1}, ..., C_{m1 + m2 - 1}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::mpm::mpm_simple;
use super::numbers::catalan;
use super::poly::RationalPolynomial;
use crate::error::{Error, Result};

fn rational(v: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(v.into())
}

/// Coefficients `(c_0, ..., c_{m2-1})` with
/// `mpm_simple(m1, p1, m2) = sum_t c_t C_{m1 + t}` for every `m1 >= 1`.
///
/// Fitted from the `m2 x m2` system at `m1 = 1..=m2` in exact rationals,
/// then checked at `m1 = m2 + 1..=m2 + 3`.
pub fn catalan_decomposition(m2: usize, p1: usize) -> Result<Vec<BigInt>> {
    if m2 == 0 || p1 == 0 {
        return Err(Error::InvalidParameter(format!(
            "catalan_decomposition needs m2, p1 >= 1, got ({m2}, {p1})"
        )));
    }
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(m2);
    for m1 in 1..=m2 {
        let mut row: Vec<BigRational> = (0..m2).map(|t| rational(catalan(m1 + t))).collect();
        row.push(rational(mpm_simple(m1, p1, m2)?));
        rows.push(row);
    }
    let solution = solve(rows).ok_or(Error::SingularSystem { m2, p1 })?;
    let coeffs = solution
        .into_iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::NonIntegral {
                    m2,
                    p1,
                    value: c.to_string(),
                })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    for m1 in m2 + 1..=m2 + 3 {
        let combined: BigInt = coeffs
            .iter()
            .enumerate()
            .map(|(t, c)| c * BigInt::from(catalan(m1 + t)))
            .sum();
        if combined != BigInt::from(mpm_simple(m1, p1, m2)?) {
            return Err(Error::ReconstructionMismatch { m2, p1, m1 });
        }
    }
    Ok(coeffs)
}

/// Gauss-Jordan elimination on an augmented square system.
fn solve(mut rows: Vec<Vec<BigRational>>) -> Option<Vec<BigRational>> {
    let n = rows.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(col, pivot);
        let inv = BigRational::one() / &rows[col][col];
        for v in rows[col].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r != col && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..=n {
                    let delta = &factor * &rows[col][c];
                    rows[r][c] -= delta;
                }
            }
        }
    }
    Some(rows.into_iter().map(|mut r| r.pop().expect("augmented")).collect())
}

/// The coefficient of `C_{m1 + t}` as a polynomial in `p1`.
///
/// Interpolated through `p1 = 1..=m2 - t` (enough for degree
/// `m2 - t - 1`); one further point must agree or the degree bound fails.
pub fn omega_poly(m2: usize, t: usize) -> Result<RationalPolynomial> {
    if m2 == 0 || t >= m2 {
        return Err(Error::InvalidParameter(format!(
            "omega_poly needs 0 <= t < m2, got m2 = {m2}, t = {t}"
        )));
    }
    let degree = m2 - t - 1;
    let coeff_at = |p1: usize| -> Result<BigRational> {
        Ok(rational(catalan_decomposition(m2, p1)?[t].clone()))
    };
    let points = (1..=degree + 1)
        .map(|p1| Ok((rational(p1 as i64), coeff_at(p1)?)))
        .collect::<Result<Vec<_>>>()?;
    let poly = RationalPolynomial::interpolate(&points);
    let extra = degree + 2;
    if poly.eval_int(extra as i64) != coeff_at(extra)? {
        return Err(Error::DegreeMismatch {
            m2,
            t,
            degree,
            p1: extra,
        });
    }
    Ok(poly)
}
