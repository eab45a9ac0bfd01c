//! Generalized Zetterberg codes over F_{q0}: construction, minimum distance,
//! covering radius and the threshold tables that bound the undecided cases.

pub mod arith;
pub mod charsum;
pub mod classify;
pub mod code;
pub mod config;
pub mod error;
pub mod gf;
pub mod radius;
pub mod thresholds;
pub mod tower;

pub use config::Caps;
pub use error::{Error, Result};
pub use gf::{make_field, Arena, Fe, FieldContext, FieldSpec, Level, Subgroup};
