use thiserror::Error;

use crate::partition::{Partition, Rectangle};

/// Which hypothesis of the constrained skew cover theorem a shape failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constraint {
    /// The first inner part is wider than the last outer row.
    InnerTooWide { inner_first: usize, outer_last: usize },
    /// The inner partition reaches below the block of full-width outer rows.
    InnerTooLong { inner_len: usize, block_rows: usize },
}

impl std::fmt::Display for Constraint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Constraint::InnerTooWide { inner_first, outer_last } => write!(
                f,
                "first inner part {inner_first} exceeds last outer part {outer_last}"
            ),
            Constraint::InnerTooLong { inner_len, block_rows } => write!(
                f,
                "inner length {inner_len} exceeds the {block_rows} leading full-width rows"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("parts {0:?} are not weakly decreasing")]
    NotWeaklyDecreasing(Vec<usize>),

    #[error("rectangle {width}x{height} must have positive sides")]
    DegenerateRectangle { width: usize, height: usize },

    #[error("partition {partition} does not fit in {rect}")]
    ShapeDoesNotFit { partition: Partition, rect: Rectangle },

    #[error("inner partition {inner} is not contained in outer partition {outer}")]
    InnerNotContained { outer: Partition, inner: Partition },

    #[error("factor {factor} does not fit in {rect}")]
    FactorOutsideRectangle { factor: Partition, rect: Rectangle },

    #[error("{nu} overlaps the rotated copy of {mu} inside {rect}; the product is zero")]
    OverlappingBlocks { mu: Partition, nu: Partition, rect: Rectangle },

    #[error("the skew shape is empty")]
    EmptyShape,

    #[error("constraint violated: {0}")]
    ConstraintViolated(Constraint),

    #[error("the decomposition has no constituents")]
    EmptyDecomposition,

    #[error("instance has {boxes} boxes, above the ceiling of {limit}")]
    InstanceTooLarge { boxes: usize, limit: usize },

    #[error("multiplicity overflowed 64 bits")]
    Overflow,
}

impl Error {
    /// Stable name used by the command line diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "ParseError",
            Error::NotWeaklyDecreasing(_) => "NotWeaklyDecreasing",
            Error::DegenerateRectangle { .. } => "DegenerateRectangle",
            Error::ShapeDoesNotFit { .. } => "ShapeDoesNotFit",
            Error::InnerNotContained { .. } => "InnerNotContained",
            Error::FactorOutsideRectangle { .. } => "FactorOutsideRectangle",
            Error::OverlappingBlocks { .. } => "OverlappingBlocks",
            Error::EmptyShape => "EmptyShape",
            Error::ConstraintViolated(_) => "ConstraintViolated",
            Error::EmptyDecomposition => "EmptyDecomposition",
            Error::InstanceTooLarge { .. } => "InstanceTooLarge",
            Error::Overflow => "Overflow",
        }
    }

    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
