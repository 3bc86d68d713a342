//! Exact computer algebra for symmetric functions in noncommuting variables.

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod lgv;
pub mod lincomb;
pub mod linalg;
pub mod ncpoly;
pub mod ncschur;
pub mod ncsym;
pub mod nsym;
pub mod rational;
pub mod sym;
pub mod text;
pub mod transition;
pub mod verify;

pub use error::{Error, Result};
pub use rational::Q;
