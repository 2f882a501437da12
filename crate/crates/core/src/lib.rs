//! Exact computations around supersingular K3 surfaces and their Zariski
//! constructions: quaternion-order arithmetic, Néron–Severi lattices of
//! `E × E` via Hermitian matrices, integral lattices and gluing, Euler
//! characteristic bookkeeping for covers, Mordell–Weil height pairings, and
//! a registry that checks every published numeric value.

pub mod arith;
pub mod cover;
pub mod elliptic;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod ns;
pub mod quat;
pub mod repro;

pub use error::{Error, Result};
pub use linalg::RatMatrix;
