//! Command-line surface for the reflection-group laboratory: JSON run
//! reports, the acceptance suites, and thin wrappers that expose each
//! library module as a subcommand.

pub mod commands;
pub mod report;
pub mod suites;

/// brute-force enumeration bound for matrix groups
pub const GROUP_CAP: usize = 200_000;
/// Weyl group enumeration bound
pub const WEYL_CAP: usize = 1_000_000;
/// largest module dimension the cohomology solvers accept
pub const MODULE_DIM_CAP: usize = 256;
/// largest representation dimension the character suite evaluates
pub const REP_DIM_CAP: i128 = 1_000_000;
