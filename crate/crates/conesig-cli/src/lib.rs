//! Support library for the `conesig` binary: claim verification routines,
//! report serialization, and table regeneration.

pub mod claims;
pub mod report;
pub mod tables;
