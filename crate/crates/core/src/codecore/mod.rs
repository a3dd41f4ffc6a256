//! Linear codes over GF(q): canonical generators, duals, shortening,
//! projection and enumeration.

mod code;
pub mod coords;
pub mod io;
mod matrix;
pub mod named;

pub use code::{check_budget, code_size, default_budget, dot, support, weight, Codewords, LinearCode, DEFAULT_BUDGET};
pub use coords::{subsets_of_size, CoordSet, MAX_LENGTH};
pub use io::{parse_code, CodeFile};
pub use matrix::MatrixGF;
