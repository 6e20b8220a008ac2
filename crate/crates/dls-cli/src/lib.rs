//! Engine behind the `dls` command line tool: corpus scanning, exhaustive
//! enumeration audits and report assembly. Kept as a library so integration
//! tests can drive the same code paths the binary uses.

pub mod engine;
pub mod input;
pub mod output;

pub use engine::{RunConfig, ScanReport};
