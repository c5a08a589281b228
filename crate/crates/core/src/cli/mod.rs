//! Report assembly behind the `charclass` binary. Every command returns a
//! [`Report`] that renders to markdown or JSON with identical values.

mod checks;
mod commands;
mod report;

pub use checks::{cmd_report_all, pinned_checks, Check};
pub use commands::{
    cmd_compare, cmd_deduce, cmd_invariants, lattice_of, run_pipeline, Catalog, DeduceArgs, Pins,
    Pipeline,
};
pub use report::{Format, Report, Table};

/// Success, or a pinned verdict that matched.
pub const EXIT_OK: i32 = 0;
/// A deduction or regression check failed.
pub const EXIT_FAIL: i32 = 1;
/// Bad arguments or unreadable input.
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Debug)]
pub struct CmdOutput {
    pub report: Report,
    pub exit: i32,
}
