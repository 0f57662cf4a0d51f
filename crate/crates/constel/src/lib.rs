//! File formats, verification suites and the `constel` command line on top
//! of [`constel_core`].

pub mod cli;
pub mod corpus;
pub mod io;
pub mod report;
pub mod suites;

pub use cli::{dispatch, Dispatch, Run};
pub use report::{Outcome, RunReport, Verdict};
