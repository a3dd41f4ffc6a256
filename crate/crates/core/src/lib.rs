//! Duality theory and dimension bounds for locally recoverable codes.

pub mod bounds;
pub mod codecore;
pub mod combin;
pub mod corpus;
pub mod error;
pub mod gf;
pub mod identities;
pub mod lpcore;
pub mod verify;
pub mod weights;

pub use codecore::{CoordSet, LinearCode};
pub use error::{LrcError, Result};
pub use gf::{Field, FieldConfig, FieldElement, FieldOp};
