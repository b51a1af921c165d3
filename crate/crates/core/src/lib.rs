//! Exact computations over finite, possibly noncommutative rings given by
//! their addition and multiplication tables.

pub mod annihilators;
pub mod catalog;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod format;
pub mod ideal;
pub mod poly;
pub mod properties;
pub mod ring;

pub use error::{Error, Result};
pub use ring::{Elem, FiniteRing};
