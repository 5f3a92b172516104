//! Two-sided Gröbner bases in the free associative algebra over the rationals.
//!
//! The crate implements the non-commutative division algorithm, enumeration of
//! non-trivial obstructions, and a Buchberger procedure that can prune
//! obstructions with non-commutative versions of the Gebauer-Möller criteria
//! (multiply, leading word, tail reduction and backward).

pub mod basis;
pub mod cli;
pub mod criteria;
pub mod division;
pub mod engine;
pub mod error;
pub mod obstructions;
pub mod parse;
pub mod polynomial;
pub mod words;

pub use basis::BasisState;
pub use error::{Error, Result};
pub use polynomial::{Coefficient, NcPolynomial};
pub use words::{Alphabet, LLex, Word, WordOrder};
