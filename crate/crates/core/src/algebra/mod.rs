//! Sparse group-algebra elements: ring operations, involution, norms, inner product and
//! the Υ functional.

mod element;
mod expr;

use thiserror::Error;

pub use element::{AlgebraElement, Upsilon};
pub use expr::{parse_element, parse_group_element, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("operands belong to different groups")]
    SpecMismatch,
    #[error("element does not belong to group {0}")]
    NotInGroup(String),
    #[error("Υ is only defined on self-adjoint elements")]
    NotSelfAdjoint,
}
