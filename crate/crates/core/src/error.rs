// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

use crate::forms::BinaryForm;

/// Errors produced by the exact algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: String, found: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("cannot contract a constant")]
    ContractConstant,

    #[error("basis vectors are linearly dependent")]
    DependentBasis,

    #[error("characteristic ≤ degree (characteristic {characteristic}, degree {degree})")]
    CharacteristicTooSmall { characteristic: u64, degree: usize },

    #[error("not divisible (remainder {remainder})")]
    NotDivisible { remainder: BinaryForm },

    #[error("zero input: {0}")]
    ZeroInput(&'static str),

    #[error("plane not contained in hypersurface")]
    PlaneNotContained,

    #[error("point not on the line")]
    PointNotOnLine,

    #[error("point not on the hypersurface")]
    PointNotOnHypersurface,

    #[error("not constant rank two: {0}")]
    NotConstantRankTwo(String),

    #[error("chain identity violated in block {block} at position {position}")]
    ChainIdentityViolated { block: usize, position: usize },

    #[error("degree too small for block (block size {block_size}, degree {degree})")]
    DegreeTooSmall { block_size: usize, degree: usize },

    #[error("budget exceeded: {estimate} candidates, budget {budget}")]
    BudgetExceeded { estimate: u128, budget: u128 },

    #[error("a finite field is required")]
    FiniteFieldRequired,

    #[error("codimension exceeds dimension: {0} classes on a surface")]
    CodimensionExceedsDimension(usize),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
