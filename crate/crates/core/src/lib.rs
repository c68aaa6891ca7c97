//! Graded point functors over `F_1` for Chevalley group schemes, computed
//! with exact arithmetic and checked against finite-field matrix groups.

pub mod arith;
pub mod chevalley;
pub mod error;
pub mod gadgets;
pub mod roots;
pub mod tits;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
