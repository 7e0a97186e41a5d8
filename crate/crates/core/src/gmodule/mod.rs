//! Integer lattices with group action: Smith normal form, invariants and
//! first cohomology.

mod intmat;
mod lattice;

pub use intmat::{coordinates, kernel, smith_normal_form, IntMatrix, Snf};
pub use lattice::{fmt_divisors, GLattice, H1Report, H1Row};
