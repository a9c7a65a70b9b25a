//! Exact verification engine for the modular proof of the Chudnovsky series.

pub mod cli;
pub mod modeq;
pub mod numkernel;
pub mod pi;
pub mod qseries;
pub mod quatforms;
pub mod report;
pub mod singular;
