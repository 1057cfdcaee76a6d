//! Input documents, built-in examples, reports and the command runner.

pub mod builtin;
pub mod document;
pub mod report;
pub mod run;
