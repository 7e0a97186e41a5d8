//! Exact computational toolkit for equivariant birational geometry.
//!
//! The crate mechanizes a family of finite, exact computations around group
//! actions on varieties:
//!
//! * [`exactnum`]: rationals and cyclotomic fields `Q(zeta_n)`.
//! * [`grouptheory`]: small finite groups from generators, conjugacy
//!   classes, power maps and subgroup lattices.
//! * [`characters`]: class functions, `Sym^2`/`Wedge^2` characters and
//!   decomposition against fixture character tables.
//! * [`gmodule`]: integer lattices with group action, Smith normal form,
//!   invariants and `H^1`.
//! * [`dp4geom`]: the 16 lines on a special quartic del Pezzo surface and its
//!   Picard lattice.
//! * [`k0euler`]: the Euler pairing on the Chow lattice of that surface.
//! * [`numexc`]: mod-`p` certificates ruling out invariant full exceptional
//!   sequences.
//! * [`sl2rep`]: weight calculus for `sl_2` on `Sym^n` and its exterior square.
//! * [`linsec`]: dimension bookkeeping for linear sections of `Gr(2, n)`.
//! * [`cli`]: the command-line front end.

pub mod characters;
pub mod cli;
pub mod dp4geom;
pub mod error;
pub mod exactnum;
pub mod fixtures;
pub mod gmodule;
pub mod grouptheory;
pub mod k0euler;
pub mod linsec;
pub mod numexc;
pub mod report;
pub mod sl2rep;

pub use error::{Error, Result};

/// Version string embedded in every emitted certificate.
pub const TOOLKIT_VERSION: &str = concat!(env!("CARGO_PKG_NAME"), " ", env!("CARGO_PKG_VERSION"));
