//! Standard-library companion to `ktminor-core`: graph IO (graph6 and JSON),
//! multi-threaded drivers, JSON/CSV reports and the `ktminor` command line.

pub mod cli;
pub mod io;
pub mod parallel;
pub mod report;
