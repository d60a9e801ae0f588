//! Enumeration and recognition of C-permutations, index functions, descent
//! statistics and the cyclic deletion process.

mod circular;
mod index;
mod permutation;

pub use circular::{circular_final_block, shifted_division, CircularState};
pub use index::{enumerate_index_functions, index_function, IndexFunction};
pub use permutation::{
    all_permutations, count, descent_count, descent_count_with_prefix, enumerate,
    enumerate_with_limit, is_c_permutation, Permutation, DEFAULT_ENUMERATION_LIMIT,
};
