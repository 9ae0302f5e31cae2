use crate::perm::Permutation;

/// Lexicographic stream of the 321-avoiding permutations of length `n`.
///
/// Built by prefix extension: a prefix stays alive only while every unused
/// value exceeds the largest entry that already has a bigger entry before
/// it. Such a prefix always completes (append the rest in increasing
/// order), so the walk never dead-ends and the successor step is
/// `O(n^2)`.
pub fn gen_av321(n: usize) -> Av321 {
    Av321 {
        n,
        current: None,
        done: false,
    }
}

#[derive(Clone, Debug)]
pub struct Av321 {
    n: usize,
    current: Option<Vec<u32>>,
    done: bool,
}

/// Prefix statistics: running maximum and largest non-LTR-maximum entry.
fn prefix_stats(prefix: &[u32]) -> (u32, u32) {
    let (mut top, mut middle) = (0, 0);
    for &v in prefix {
        if v > top {
            top = v;
        } else {
            middle = middle.max(v);
        }
    }
    (top, middle)
}

impl Av321 {
    fn successor(&self, a: &[u32]) -> Option<Vec<u32>> {
        let n = self.n;
        for i in (0..n).rev() {
            let (top, middle) = prefix_stats(&a[..i]);
            let mut free: Vec<u32> = a[i..].to_vec();
            free.sort_unstable();
            for (idx, &v) in free.iter().enumerate() {
                if v <= a[i] || v < middle {
                    continue;
                }
                let new_middle = if v > top { middle } else { v };
                let min_rest = free
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != idx)
                    .map(|(_, &x)| x)
                    .next();
                if min_rest.is_none_or(|m| m > new_middle) {
                    let mut next = a[..i].to_vec();
                    next.push(v);
                    next.extend(free.iter().enumerate().filter(|&(j, _)| j != idx).map(|(_, &x)| x));
                    return Some(next);
                }
            }
        }
        None
    }
}

impl Iterator for Av321 {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let next = match &self.current {
            None => Some((1..=self.n as u32).collect()),
            Some(a) => self.successor(a),
        };
        match next {
            Some(v) => {
                self.current = Some(v.clone());
                Some(Permutation::from_vec_unchecked(v))
            }
            None => {
                self.done = true;
                None
            }
        }
    }
}
