//! Permutations, compositions, double cosets and matrix statistics.

mod composition;
mod matrix;
mod perm;

pub use composition::{compositions, is_double_coset_rep, Composition};
pub use matrix::{blm_leq, blm_lt, BaseMatrix, SuperMatrix};
pub use perm::{all_perms, Perm, MAX_RANK};
