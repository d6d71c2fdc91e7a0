//! Exact identity checks with JSON reports, and the runner that applies the
//! symbolic/numeric evidence policy.

mod checks;
mod report;
mod runner;

pub use checks::{check_compare_cg, check_compare_cg_against, check_param_count, Checker};
pub use report::{reports_to_json, CheckReport, Mode, Size, Witness};
pub use runner::{generic_assignment, run_checks, CheckKind, RunOptions};
