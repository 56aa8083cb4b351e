//! Symbolic angles `a·α + c·(π/2)`.
//!
//! Only integer combinations of the trapezoid's acute angle α and the right
//! angle are ever needed, so no radian values are represented. `β = π − α` is
//! the combination `−α + 2·(π/2)`.

use super::rational::{int, rat, Rational};
use super::ExactError;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::Add;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExactAngle {
    /// coefficient of α
    pub alpha: i64,
    /// coefficient of π/2
    pub right: i64,
}

impl ExactAngle {
    pub const fn new(alpha: i64, right: i64) -> Self {
        ExactAngle { alpha, right }
    }

    pub const ALPHA: ExactAngle = ExactAngle::new(1, 0);
    pub const BETA: ExactAngle = ExactAngle::new(-1, 2);
    pub const RIGHT: ExactAngle = ExactAngle::new(0, 1);
    pub const STRAIGHT: ExactAngle = ExactAngle::new(0, 2);
    pub const FULL: ExactAngle = ExactAngle::new(0, 4);
    pub const ZERO: ExactAngle = ExactAngle::new(0, 0);

    /// The angle as a rational multiple of π, when α is bound.
    pub fn pi_multiple(&self, mode: AngleMode) -> Option<Rational> {
        match mode {
            AngleMode::GenericAlpha => {
                if self.alpha == 0 {
                    Some(rat(self.right, 2))
                } else {
                    None
                }
            }
            AngleMode::BoundAlpha { p, q } => {
                Some(int(self.alpha) * rat(p, q) + rat(self.right, 2))
            }
        }
    }

    pub fn is_alpha(&self, mode: AngleMode) -> bool {
        angle_eq(*self, ExactAngle::ALPHA, mode)
    }

    pub fn is_beta(&self, mode: AngleMode) -> bool {
        angle_eq(*self, ExactAngle::BETA, mode)
    }
}

impl Add for ExactAngle {
    type Output = ExactAngle;
    fn add(self, o: ExactAngle) -> ExactAngle {
        ExactAngle::new(self.alpha + o.alpha, self.right + o.right)
    }
}

impl std::iter::Sum for ExactAngle {
    fn sum<I: Iterator<Item = ExactAngle>>(iter: I) -> ExactAngle {
        iter.fold(ExactAngle::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for ExactAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.alpha, self.right) {
            (1, 0) => write!(f, "α"),
            (-1, 2) => write!(f, "β"),
            (0, 1) => write!(f, "π/2"),
            (0, 2) => write!(f, "π"),
            (0, 4) => write!(f, "2π"),
            (a, c) => write!(f, "{a}α+{c}(π/2)"),
        }
    }
}

/// Whether α is an independent symbol or bound to `(p/q)·π`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum AngleMode {
    #[serde(rename = "generic")]
    GenericAlpha,
    #[serde(rename = "bound")]
    BoundAlpha { p: i64, q: i64 },
}

impl AngleMode {
    /// Bound mode with `0 < p/q < 1/2`, stored in lowest terms.
    pub fn bound(p: i64, q: i64) -> Result<AngleMode, ExactError> {
        if q == 0 {
            return Err(ExactError::InvalidAngle(p, q));
        }
        let r = rat(p, q);
        if r <= int(0) || r >= rat(1, 2) {
            return Err(ExactError::InvalidAngle(p, q));
        }
        let p = i64::try_from(r.numer().clone()).map_err(|_| ExactError::InvalidAngle(p, q))?;
        let q = i64::try_from(r.denom().clone()).map_err(|_| ExactError::InvalidAngle(p, q))?;
        Ok(AngleMode::BoundAlpha { p, q })
    }

    pub fn validate(self) -> Result<AngleMode, ExactError> {
        match self {
            AngleMode::GenericAlpha => Ok(self),
            AngleMode::BoundAlpha { p, q } => AngleMode::bound(p, q),
        }
    }

    /// α as a multiple of π, if bound.
    pub fn alpha(&self) -> Option<Rational> {
        match *self {
            AngleMode::GenericAlpha => None,
            AngleMode::BoundAlpha { p, q } => Some(rat(p, q)),
        }
    }
}

/// Equality of symbolic angles. Generic mode compares coefficients; bound
/// mode compares the evaluated multiples of π.
pub fn angle_eq(x: ExactAngle, y: ExactAngle, mode: AngleMode) -> bool {
    match mode {
        AngleMode::GenericAlpha => x == y,
        AngleMode::BoundAlpha { .. } => x.pi_multiple(mode) == y.pi_multiple(mode),
    }
}
