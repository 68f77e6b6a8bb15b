//! Exact partition combinatorics: conjugation, strip addition,
//! Littlewood–Richardson coefficients, symmetric-group characters and
//! dimensions.
//!
//! Everything here is a pure function of its inputs over exact big-integer
//! arithmetic; there is no shared mutable state and no floating point.

mod lr;
mod partition;
mod sym_char;

pub use lr::{induced_multiplicity_sym, lr_coefficient, lr_expand};
pub use partition::{partitions_of, Composition, Partition, StripOrientation};
pub use sym_char::{cycle_type_centralizer, dimension_sym, sym_char_value};
