use super::word::{InjectiveWord, Permutation};

/// Whether some subsequence of `w` is order-isomorphic to `pat`.
///
/// Plain backtracking over subsequences; the relative order of each new
/// entry is checked against the entries already chosen.
pub fn contains_pattern(w: &InjectiveWord, pat: &Permutation) -> bool {
    let pat = pat.values();
    if pat.is_empty() {
        return true;
    }
    let mut chosen = Vec::with_capacity(pat.len());
    extend(w.values(), 0, pat, &mut chosen)
}

fn extend(text: &[u32], from: usize, pat: &[u32], chosen: &mut Vec<u32>) -> bool {
    let depth = chosen.len();
    if depth == pat.len() {
        return true;
    }
    if text.len() - from < pat.len() - depth {
        return false;
    }
    for i in from..text.len() {
        let v = text[i];
        let consistent = chosen
            .iter()
            .zip(pat)
            .all(|(&c, &pc)| (c < v) == (pc < pat[depth]));
        if consistent {
            chosen.push(v);
            if extend(text, i + 1, pat, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// 321-avoidance in one pass.
///
/// Tracks the largest entry seen so far and the largest entry that already
/// has a bigger entry before it; a later entry below the latter closes a
/// 321.
pub fn avoids_321(w: &InjectiveWord) -> bool {
    avoids_321_slice(w.values())
}

pub(crate) fn avoids_321_slice(values: &[u32]) -> bool {
    let mut top = 0;
    let mut middle = 0;
    for &v in values {
        if v < middle {
            return false;
        }
        if v > top {
            top = v;
        } else {
            middle = v;
        }
    }
    true
}
