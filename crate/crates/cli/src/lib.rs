//! Library surface of the command-line front end: file formats, reports,
//! command implementations and the bench harness. The `smith` binary is a
//! thin argument-parsing wrapper over this.

pub mod bench;
pub mod commands;
pub mod formats;
pub mod report;
