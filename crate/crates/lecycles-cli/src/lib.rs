//! Library surface of the CLI: corpus file parsing, deterministic report
//! rendering, and the command implementations, so integration tests can
//! drive them in-process.

pub mod corpus;
pub mod report;
pub mod run;
