//! Exact-arithmetic engine for finite-dimensional duoidal categories:
//! verifies weak-bimonoid axioms on user-supplied (monoid, comonoid) data,
//! constructs the derived base objects with their separable Frobenius
//! structures, builds Hopf modules and the Galois comparison map, and
//! decides the fundamental-theorem criterion on probe modules — reporting
//! every failure with a concrete witness.

pub mod bases;
pub mod bimonoid;
pub mod defs;
pub mod duoidal;
pub mod error;
pub mod expr;
pub mod field;
pub mod fixtures;
pub mod group;
pub mod hopf;
pub mod instance;
pub mod matrix;
pub mod morph;
pub mod report;
pub mod runner;
pub mod wbm;

pub use error::Error;
pub use expr::{ObjExpr, Product};
pub use field::{Field, Scalar};
pub use group::GroupTable;
pub use instance::{make_braided_vec, make_graded_vec, Dims, DuoidalInstance, Transform};
pub use matrix::{Inverse, Mat, Splitting};
pub use morph::{chain, chain_from, chain_to, Morph};
pub use report::{CheckEntry, CheckReport, Status, Witness};
