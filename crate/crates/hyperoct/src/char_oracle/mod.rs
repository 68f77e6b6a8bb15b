//! Independent brute-force ground truth: conjugacy classes, exact
//! character tables by Dixon's modular method, class fusion,
//! restriction/induction multiplicities, and Gelfand / strong-Gelfand
//! predicates for arbitrary materialised groups.

pub mod cache;
pub mod classes;
pub mod dixon;
pub mod label_match;
pub mod modp;
pub mod mults;
pub mod oracle;

pub use cache::DiskCache;
pub use classes::ConjClasses;
pub use dixon::{character_table, select_prime, CharTable};
pub use label_match::{
    match_bn_rows, match_product_rows, match_rows, match_wreath_rows, signed_classes_of_table,
    wreath_char_value_modp, ProductLabel, TailIrrep, TailKind,
};
pub use mults::{
    fusion_map, induce_mult, is_gelfand, is_strong_gelfand, restriction_mult, MultiplicityWitness,
    PairVerdict,
};
pub use oracle::Oracle;
