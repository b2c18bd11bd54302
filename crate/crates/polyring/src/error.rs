//! Error type for the polynomial engine.

use crate::poly::Polynomial;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum PolyError {
    /// A basis computation ran out of its step/time budget. Carries the
    /// partial basis accumulated so far.
    #[error("budget exhausted after {pairs_done} S-pairs ({} partial basis elements)", partial.len())]
    BudgetExhausted {
        pairs_done: u64,
        partial: Vec<Polynomial>,
    },

    #[error("arity mismatch: expected {expected} variables, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("the unit ideal has no Krull dimension")]
    UnitIdeal,

    #[error("cannot saturate by the zero polynomial")]
    ZeroSaturation,

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}
