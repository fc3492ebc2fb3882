//! Verification suites and table emission for the functor workbench.
//!
//! Each suite is a fixed list of finite cases with an expected and an
//! observed value; a suite passes when they agree on every case. Reports
//! contain no timing data so that runs with equal configurations are
//! byte-identical.

pub mod config;
pub mod report;
pub mod suites;
pub mod table;

pub use config::{ConfigError, Format, SuiteConfig};
pub use report::{render_json, render_tsv, Case, Failure, SuiteReport};
pub use suites::{run_selected, run_suite, suite_ids, SUITES};
pub use table::{emit_table, Table, TableKind, TableParams};

/// Renders reports in the configured format.
pub fn render(reports: &[SuiteReport], format: Format) -> String {
    match format {
        Format::Json => render_json(reports),
        Format::Tsv => render_tsv(reports),
    }
}
