//! Exact counting: Catalan and derangement numbers, the ballot triangles,
//! the few-preimage census formulas, and the `M_1 P_1 M_2` formulas.

mod ballot;
mod catalan_basis;
mod mpm;
mod numbers;
mod poly;

pub use ballot::{ballot_b, ballot_collapse, ballot_g, ballot_to_catalan, BallotTable};
pub use catalan_basis::{catalan_decomposition, omega_poly};
pub use mpm::{count_k_largest_ltr, mpm_full, mpm_simple};
pub use numbers::{
    binomial, catalan, count_q0, count_q1, count_q2, derangement, factorial, multiset_coeff,
};
pub use poly::RationalPolynomial;
