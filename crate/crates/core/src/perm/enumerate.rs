//! Lexicographic traversal, ranking and unranking of permutations.

use super::word::Permutation;

/// Rearranges `a` into its lexicographic successor. Returns false (leaving
/// `a` sorted ascending) when `a` was already the last arrangement.
pub fn next_permutation(a: &mut [u32]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        a.reverse();
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Calls `f` on every arrangement of `values` in lexicographic order.
pub fn for_each_arrangement<F: FnMut(&[u32])>(values: &[u32], mut f: F) {
    let mut a = values.to_vec();
    a.sort_unstable();
    loop {
        f(&a);
        if !next_permutation(&mut a) {
            break;
        }
    }
}

/// Every permutation of length `n`, lexicographically.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let ident: Vec<u32> = (1..=n as u32).collect();
    let mut out = Vec::with_capacity(factorial(n) as usize);
    for_each_arrangement(&ident, |a| out.push(Permutation::from_vec_unchecked(a.to_vec())));
    out
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Lexicographic rank of a permutation of `1..=n`, in `0..n!`.
pub fn lex_rank(values: &[u32]) -> usize {
    let n = values.len();
    let mut rank = 0usize;
    for i in 0..n {
        let smaller_after = values[i + 1..].iter().filter(|&&v| v < values[i]).count();
        rank = rank * (n - i) + smaller_after;
    }
    rank
}

/// Inverse of [`lex_rank`].
pub fn lex_unrank(n: usize, mut rank: usize) -> Vec<u32> {
    let mut digits = vec![0usize; n];
    for i in (0..n).rev() {
        let base = n - i;
        digits[i] = rank % base;
        rank /= base;
    }
    let mut pool: Vec<u32> = (1..=n as u32).collect();
    digits.into_iter().map(|d| pool.remove(d)).collect()
}
