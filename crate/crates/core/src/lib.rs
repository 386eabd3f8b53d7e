//! Finite permutation groups and the conjugacy classes of groups defined by
//! conjugacy of equal-order subgroups.
//!
//! Permutations act on the right: `f * g` first applies `f`, then `g`.

pub mod caps;
pub mod classes;
pub mod error;
pub mod field;
pub mod group;
pub mod harness;
pub mod mat2;
pub mod perm;
pub mod structure;
pub mod subgroups;
pub mod zoo;

pub use caps::Caps;
pub use classes::{ClassId, ClassReport, Verdict, Witness};
pub use error::{Error, Result};
pub use group::{Elt, Enumeration, Group, Subgroup, SubgroupFingerprint};
pub use perm::Permutation;
