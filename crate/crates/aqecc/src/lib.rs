//! Command-line front end and fixture reproduction for additive quantum codes.

pub mod fixtures;
pub mod io;
pub mod output;
pub mod reproduce;
pub mod spec;

/// Tag written into every JSON document.
pub const SCHEMA: &str = "aqecc/1";
