//! Exact computations on finite-rank associative rings presented by integer
//! structure constants.

pub mod error;
pub mod exactalg;
pub mod ideal;
pub mod center;
pub mod cli;
pub mod constructions;
pub mod ring;
pub mod verify;

pub use error::{Error, Result};
