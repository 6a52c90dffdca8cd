//! Corpus generation, campaigns over it, and the command line.

pub mod campaign;
pub mod cli;
pub mod corpus;
