//! Identity suite, enumeration output and command-line front end built on
//! `chordlab-core`.

pub mod ctx;
pub mod emit;
pub mod families;
pub mod report;
pub mod suite;
