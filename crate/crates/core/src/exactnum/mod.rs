//! Exact arithmetic: rationals, real quadratic fields and symbolic angles.

mod angle;
mod quadratic;
pub mod rational;

pub use angle::{angle_eq, AngleMode, ExactAngle};
pub use quadratic::{is_squarefree, QuadraticNumber, Sign};
pub use rational::Rational;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("radicand mismatch: √{left} vs √{right}")]
    RadicandMismatch { left: u32, right: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("radicand {0} is not squarefree")]
    NotSquarefree(u32),
    #[error("cannot parse {0:?} as a quadratic number")]
    Parse(String),
    #[error("alpha = {0}/{1}·π is outside (0, π/2)")]
    InvalidAngle(i64, i64),
}
