//! Exact linear programming and the two LP models built on it.

mod delsarte;
pub mod dump;
mod lrc;
mod simplex;

pub use crate::combin::krawtchouk;
pub use delsarte::{delsarte_kopt_bound, delsarte_problem, delsarte_size_bound};
pub use lrc::{
    build_lrc_lp, build_symmetric_lrc_lp, ceil_log, lp_dimension_bound, notation45_coefficient, notation45_constant,
    ConstraintCensus, KMax, LpBound, LrcLpModel, LrcParams,
};
pub use simplex::{simplex_solve, Constraint, LpProblem, LpSolution, LpStatus, Relation, Sense};
