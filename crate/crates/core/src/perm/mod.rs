//! Words, permutations and their LTR-maximum structure.

mod cycles;
mod decomposition;
mod enumerate;
mod pattern;
mod word;

pub use cycles::{fixed_points, foata};
pub use decomposition::{ltr_decomposition, ltr_maxima, Decomposition};
pub(crate) use decomposition::{decompose, ltr_mask, ltr_positions};
pub use enumerate::{
    all_permutations, factorial, for_each_arrangement, lex_rank, lex_unrank, next_permutation,
};
pub use pattern::{avoids_321, contains_pattern};
pub(crate) use pattern::avoids_321_slice;
pub use word::{parse_word, standardize, InjectiveWord, Permutation};
pub(crate) use word::relabel;
