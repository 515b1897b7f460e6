//! Exact computations around numerically pluricanonical cyclic coverings of
//! complex surfaces.

pub mod arrangements;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod evenclass;
pub mod f2geom;
pub mod gf2;
pub mod glgroup;
pub mod invariants;
pub mod scalar;
pub mod torsion;

pub use error::{Error, Result};
