//! Explicit wreath-product elements, the block embedding into a symmetric
//! group, constructors for every subgroup family of the classification,
//! gamma/fiber analysis and subgroup-lattice search.

pub mod chars;
pub mod descriptor;
pub mod element;
pub mod lattice;
pub mod perm;
pub mod subgroup;

pub use chars::{linear_char_value, AnyChar, RootOfUnity};
pub use descriptor::{make_subgroup, CharName, SubgroupDescriptor};
pub use element::WreathElement;
pub use lattice::{subgroups_up_to_conjugacy, SubgroupClass};
pub use perm::{Perm, PermGroup};
pub use subgroup::{are_conjugate, closure, Subgroup, SubgroupInfo};
