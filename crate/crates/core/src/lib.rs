//! Bezout equations in the constrained algebra `C + B H^inf` for a finite
//! Blaschke product `B`, on rational-function data.

pub mod blaschke;
pub mod cli;
pub mod error;
pub mod interp;
pub mod numcore;
pub mod reduce;
pub mod sample;
pub mod skew;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
