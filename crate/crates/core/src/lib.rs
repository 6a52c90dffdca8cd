pub mod binrep;
pub mod combinatorics;
pub mod complex;
pub mod decomposition;
pub mod error;
pub mod fvector;
pub mod harness;
pub mod poly;
pub mod triangle;
