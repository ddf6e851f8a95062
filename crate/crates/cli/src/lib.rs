//! Command-line front end for `prym-core`.

pub mod app;
pub mod render;
pub mod report;
