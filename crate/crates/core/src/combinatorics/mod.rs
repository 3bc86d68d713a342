//! Index combinatorics: partitions, compositions, set partitions,
//! permutations and tableaux.

pub mod partition;
pub mod permutation;
pub mod set_partition;
pub mod tableau;

pub use partition::{
    partition_stats, shape_concat, Composition, ConcatMode, IntegerPartition, SkewShape,
    WeakComposition,
};
pub use permutation::Permutation;
pub use set_partition::{bell_number, SetPartition};
pub use tableau::{
    delta_pi, enumerate_ssyt, kostka, ssyt_with_content, standard_tableaux_count,
    SemistandardTableau, YoungTableau,
};
