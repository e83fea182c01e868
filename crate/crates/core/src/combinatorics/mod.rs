//! Partitions, permutations, tableaux and symmetric group characters.

mod characters;
mod partition;
mod permutation;
mod tableau;

pub use characters::{
    centralizer_order, character_value, class_representative_word, class_size, factorial, hook_dimension,
    mn_character,
};
pub use partition::{check_composition, Partition};
pub use permutation::{coset_factor, min_coset_reps, Permutation};
pub use tableau::StandardTableau;
