//! Exact free Lie algebra computation, Groebner-Shirshov completion, and the
//! weak commutativity construction `chi(g)` with its ideal `L(g)`.

pub mod analysis;
pub mod chi;
pub mod cli;
pub mod error;
pub mod gs;
pub mod lie;

pub use error::{Error, Result};
