//! Mobi algebras and mobi spaces: ternary "position at time `t` between `x`
//! and `y`" structures, their axiom harnesses, the standard constructions,
//! the bridge to modules over rings, and sphere/hyperbolic geodesics.

pub mod algebra;
pub mod cli;
pub mod constructions;
pub mod coords;
pub mod error;
pub mod geodesic;
pub mod harness;
pub mod registry;
pub mod module_bridge;
pub mod scalar;
pub mod space;

pub use error::{MobiError, Result};
