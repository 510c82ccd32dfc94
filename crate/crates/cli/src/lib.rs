//! Front end for `tdhopf-core`: expression syntax, text and JSON output,
//! and the seeded law harness behind the `tdhopf` binary.

pub mod app;
pub mod laws;
pub mod parse;
pub mod random;
pub mod render;
