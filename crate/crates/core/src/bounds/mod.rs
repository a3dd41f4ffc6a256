//! Closed-form bound catalog, k_opt providers and the bound report.

mod catalog;
mod kopt;
mod report;
pub mod tables;

pub use catalog::*;
pub use kopt::{embedded_kopt_table, parse_kopt_csv, KoptEntry, KoptMode, KoptProvider, KoptTable};
pub use report::{aggregate_report, BoundForm, BoundRecord, BoundReport, CodeParams};
