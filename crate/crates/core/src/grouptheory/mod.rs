//! Small finite groups given by permutation or integer matrix generators.

mod element;
mod group;
mod subgroup;

pub use element::{GroupElement, Perm, SmallMat};
pub use group::{ConjClass, FinGroup, DEFAULT_GROUP_CAP};
pub use subgroup::{enumerate_subgroups, Subgroup};
