//! Label-level representation theory of `B_n = (Z/2) wr S_n`: twists,
//! dimensions, branching rules, Clifford splitting and exact character
//! values, plus multiplicity formulas for abelian `(Z/r) wr S_n`.
//!
//! Irreducibles of `B_n` are labelled by ordered pairs of partitions
//! `(lambda, mu)` with `|lambda| + |mu| = n`; the pair labels the module
//! induced from `(trivial; S^lambda) boxtimes (sign-of-flips; S^mu)`.

mod branching;
mod char_value;
mod label;
mod wreath_label;

pub use branching::{branch_up_b1, branch_up_b2, branch_up_sub2, B1Factor, B2SubIrrep, LabelMultiset};
pub use char_value::{bn_char_value, signed_class_size, signed_classes};
pub use label::{all_labels, BnIrrepLabel, ChiOrSplit, LinearChar, SignedClass};
pub use wreath_label::{nail_decompose, passive_induction_mult, AbelianWreathLabel};

pub use label::clifford_split;
pub use label::dim_bn;
pub use label::twist;
pub use label::IndexTwoKernel;
