//! The quartic del Pezzo surface cut out by two diagonal quadrics over
//! `Q(zeta_3)`: its 16 lines, a basis of `Pic`, the action of the two
//! generators and the canonical class.

mod linalg;
mod picard;
mod surface;

pub use linalg::{rank, rref, solve, CycMatrix};
pub use picard::{
    picard_data, select_basis, Alignment, BasisSelection, PicardData, REFERENCE_B_ROWS,
    REFERENCE_C_ROWS, REFERENCE_GRAM, REFERENCE_MINUS_K,
};
pub use surface::{enumerate_lines, intersection_number, perm_order, Line, LineConfiguration, SurfaceDP4};
