//! Minimum-distance verification for classical linear, CSS and stabilizer
//! codes over small Galois fields, together with the analytic complexity
//! exponents of the search techniques.

pub mod code;
pub mod ensembles;
pub mod error;
pub mod exponents;
pub mod field;
pub mod matrix;
pub mod quaternary;
pub mod rng;
pub mod search;

pub use code::{Codeword, CssCode, LinearCode, ParityCheckMatrix, StabilizerCode, SymbolCode, ValidationReport};
pub use error::{Error, Result};
pub use field::{field_arith, ArithOp, Field, FieldElement};
pub use quaternary::{trace_inner_product, QuaternaryVector};
pub use search::{search, Algorithm, EngineOptions, SearchBudget, SearchResult};
