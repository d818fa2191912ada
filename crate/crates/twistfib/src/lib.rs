//! IO, file formats and the command-line interface on top of
//! [`twistfib_core`].

pub mod cli;
pub mod dump;
pub mod golden;
pub mod report;

pub use twistfib_core as core;
