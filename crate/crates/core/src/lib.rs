//! Exact arithmetic for diagram algebras on four-fold alphabets: insertion
//! algorithms, multiset partition diagrams, simple modules with straightening,
//! and symmetric-function expansions, together with independent brute-force
//! oracles for every computation.

pub mod algebra;
pub mod letter;
pub mod msetpart;
pub mod oracle;
pub mod par;
pub mod partitions;
pub mod perm;
pub mod poly;
pub mod repr;
pub mod setpart;
pub mod smrsk;
pub mod srsk;
pub mod symfun;
pub mod tableau;
pub mod text;
pub mod uf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input text; positions are 1-based.
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    /// Structurally valid input that violates a mathematical precondition.
    #[error("invalid input: {0}")]
    Invalid(String),
    /// Request exceeds a configured resource bound.
    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
