//! File formats, seeded verification suites and the command-line front end
//! for `convexval-core`.

pub mod cli;
pub mod corpus;
pub mod format;
pub mod oracle;
pub mod suite;
