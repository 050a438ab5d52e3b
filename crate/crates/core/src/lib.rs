//! Tableau operators on semistandard Young tableaux: Bender-Knuth
//! involutions, promotion and evacuation, the domino involution `D` and the
//! conjugating operator `P`, domino tableaux, and the symmetric-group
//! actions generated by `s_i`, `σ_i` and `τ_k`, together with an exhaustive
//! verification harness for their relations and counts.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod domino;
pub mod operators;
pub mod partition;
pub mod permutation;
pub mod space;
pub mod sym_action;
pub mod tableau;
pub mod verify;
pub mod word;

pub use domino::{
    domino_from_tableau, domino_weight, enumerate_domino, enumerate_tilings, first_unfixed_factor,
    is_domino_fixed, is_valid_tiling, tableau_from_domino, tiling_of_fixed, two_tableau_of_tiling,
    DominoError, DominoPlacement, DominoTableau, DominoWeight,
};
pub use operators::{
    apply_word, bender_knuth, bk_skew, d_operator, evacuation, p_operator, p_operator_inv,
    partial_evacuation, promotion, promotion_inv, OperatorError,
};
pub use partition::{
    contains, is_horizontal_strip, partitions_in_box, Cell, Partition, PartitionError, Segment,
    SkewShape,
};
pub use permutation::Permutation;
pub use space::{Op, TableauSpace};
pub use sym_action::{domino_weight_action_check, s_action, sigma_action, tau_action};
pub use tableau::{enumerate_tableaux, enumerate_tableaux_weight, Tableau, TableauError, Weight};
pub use verify::{
    check_bijection_thm12, check_identity, check_relation_suite, check_schur_specialization,
    count_self_evacuating, domino_weights, kostka, kostka2, Bounds, Expect, Outcome, Report,
    Search, SignedMonomialTable, Suite, VerifyError, Witness,
};
pub use word::{parse_word, weight_permutation, Expander, Generator, TWord, Word, WordError};
