//! Verification harness, statistics and file formats on top of
//! `hasseflex-core`.

pub mod checks;
pub mod config;
pub mod output;
pub mod satotate;
