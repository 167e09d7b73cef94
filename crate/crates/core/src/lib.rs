//! Gröbner bases, minimal graded free resolutions and local cohomology over
//! prime fields, with constructions and audits for surfaces and curves of
//! maximal regularity.

pub mod constructions;
pub mod error;
pub mod groebner;
pub mod ideal_ops;
pub mod invariants;
pub mod linalg;
pub mod reproduce;
pub mod ring;
pub mod verify;

pub use error::{Error, Result};
