use alloc::string::String;
use core::fmt;

use crate::partition::Partition;

/// Errors produced by the core library.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Partition text could not be parsed, or the parts increase.
    MalformedPartition(String),
    /// Two partitions that must have equal size do not.
    SizeMismatch {
        left: usize,
        right: usize,
    },
    /// The inner shape of a skew shape is not contained in the outer shape.
    NotContained {
        inner: Partition,
        outer: Partition,
    },
    NotARimHook,
    /// The skew shape is a rim hook, but not of the required size.
    NotASizeKRimHook {
        size: usize,
        k: usize,
    },
    /// The abacus profile needs fewer than `k` parts.
    TooManyParts {
        length: usize,
        k: usize,
    },
    /// A numeric argument is outside its allowed range.
    InvalidParameter {
        name: &'static str,
        value: usize,
        requirement: &'static str,
    },
    /// An exact integer computation left the representable range.
    Overflow,
    /// `(k, m, n)` is outside the region where a witness exists.
    PreconditionViolated {
        k: usize,
        m: usize,
        n: usize,
    },
    /// A result failed its own post-condition check. Always a defect.
    InternalInvariantFailure(String),
    /// A transition matrix entry links two different k-cores.
    BlockViolation {
        row: Partition,
        col: Partition,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MalformedPartition(why) => write!(f, "malformed partition: {why}"),
            Error::SizeMismatch { left, right } => {
                write!(f, "partition sizes differ: {left} vs {right}")
            }
            Error::NotContained { inner, outer } => {
                write!(f, "{inner} is not contained in {outer}")
            }
            Error::NotARimHook => f.write_str("skew shape is not a rim hook"),
            Error::NotASizeKRimHook { size, k } => {
                write!(f, "expected a rim hook of size {k}, found size {size}")
            }
            Error::TooManyParts { length, k } => {
                write!(
                    f,
                    "partition has {length} parts, at most {} allowed for k = {k}",
                    k - 1
                )
            }
            Error::InvalidParameter {
                name,
                value,
                requirement,
            } => write!(f, "invalid {name} = {value}: must be {requirement}"),
            Error::Overflow => f.write_str("integer overflow in exact arithmetic"),
            Error::PreconditionViolated { k, m, n } => write!(
                f,
                "(k, m, n) = ({k}, {m}, {n}) is not in the non-multiplicity-free region"
            ),
            Error::InternalInvariantFailure(what) => {
                write!(f, "internal invariant failure: {what}")
            }
            Error::BlockViolation { row, col } => {
                write!(f, "transition entry ({row}, {col}) crosses k-core blocks")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn require(
    name: &'static str,
    value: usize,
    min: usize,
    requirement: &'static str,
) -> Result<()> {
    if value < min {
        Err(Error::InvalidParameter {
            name,
            value,
            requirement,
        })
    } else {
        Ok(())
    }
}
