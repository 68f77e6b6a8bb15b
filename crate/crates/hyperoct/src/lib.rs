//! Exact computational representation theory of wreath products `(Z/r) wr S_n`,
//! specialising to the hyperoctahedral groups `B_n = (Z/2) wr S_n`.
//!
//! The crate has two independent computational routes to the same facts, and a
//! test suite that plays them against each other:
//!
//! * a *label calculus* ([`combinatorics`], [`bn_theory`]) that works purely on
//!   partition pairs: Littlewood–Richardson products, Pieri-style branching
//!   rules for `B_{n-1}` and `B_{n-2} x B_2` and their order-4/order-2
//!   subgroups, twists by linear characters, Clifford splitting, and exact
//!   character values of `S^{lambda,mu}`;
//! * a brute-force *character oracle* ([`groups`], [`char_oracle`]) that
//!   materialises subgroups element by element, computes exact character
//!   tables by Dixon's modular method, and answers restriction/induction
//!   multiplicity and (strong) Gelfand questions for arbitrary materialised
//!   groups.
//!
//! On top of both sits [`classifier`]: the fast-path verdict table for every
//! named strong-Gelfand family of `B_n`, exhaustive lattice searches at small
//! `n`, and cross-validation of the two routes.
//!
//! All arithmetic is exact (big integers or residues modulo a published
//! prime); nothing in the crate uses floating point or randomness.

pub mod bn_theory;
pub mod char_oracle;
pub mod classifier;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod groups;
pub mod verification;

pub use error::{Error, Result};
