//! System files, JSON reports and the command layer on top of
//! `involutive-core`.

pub mod commands;
pub mod parse;
pub mod report;

pub use commands::{bench, check_report, run, Algorithm, RunError, RunOptions, SyzMethod};
pub use parse::{parse_polynomial, parse_system, parse_system_file, ParseError, SystemFile};
pub use report::{BenchReport, BenchRun, RunReport, Stats};
