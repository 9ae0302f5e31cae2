use super::word::Permutation;

/// Foata's fundamental bijection.
///
/// Reads `p` in one-line notation, opens a new cycle in front of every LTR
/// maximum, and returns the permutation with those cycles in one-line
/// notation. For `21543` the cycles are `(2 1)(5 4 3)`, giving `21534`.
pub fn foata(p: &Permutation) -> Permutation {
    let values = p.values();
    let n = values.len();
    let mut image = vec![0u32; n];
    let mut start = 0;
    while start < n {
        let head = values[start];
        let mut end = start + 1;
        while end < n && values[end] < head {
            end += 1;
        }
        let cycle = &values[start..end];
        for (i, &c) in cycle.iter().enumerate() {
            image[c as usize - 1] = cycle[(i + 1) % cycle.len()];
        }
        start = end;
    }
    Permutation::from_vec_unchecked(image)
}

/// 1-based positions `i` with `p_i = i`.
pub fn fixed_points(p: &Permutation) -> Vec<usize> {
    p.values()
        .iter()
        .enumerate()
        .filter(|&(i, &v)| v as usize == i + 1)
        .map(|(i, _)| i + 1)
        .collect()
}
