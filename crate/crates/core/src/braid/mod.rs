//! Exact computation in the braid group: words, permutations, Garside
//! normal forms, linking numbers and the Lawrence–Krammer oracle.

pub mod dual;
mod garside;
mod linking;
pub mod lk;
mod perm;
mod word;

pub use dual::{DualNormalForm, DualSimple};
pub use garside::NormalForm;
pub use linking::LinkingMatrix;
pub use lk::{lk_equal, lk_matrix, LkMatrix};
pub use perm::Permutation;
pub use word::BraidWord;
