//! Isometries from the finite rotation/reflection group of a field.

use super::point::Point;
use super::GeometryError;
use crate::exactnum::rational::{int, rat};
use crate::exactnum::{QuadraticNumber, Rational};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

type Qn = QuadraticNumber;

/// Number of rotations available in `Q(√d)`: multiples of π/6 for d = 3,
/// of π/4 for d = 2, and of π/2 otherwise.
pub fn rotation_order(d: u32) -> u32 {
    match d {
        3 => 12,
        2 => 8,
        _ => 4,
    }
}

/// `(cos, sin)` of `k · 2π / rotation_order(d)`, exactly.
pub fn rotation_entries(k: u32, d: u32) -> (Qn, Qn) {
    let order = rotation_order(d);
    let k = k % order;
    // Table of (cos, sin) as (rational part, coefficient of √d).
    let pair = |c: (Rational, Rational), s: (Rational, Rational)| {
        (Qn::new(c.0, c.1, d), Qn::new(s.0, s.1, d))
    };
    let z = || Rational::zero();
    let r = |n, m| (rat(n, m), Rational::zero());
    let h = |n, m| (Rational::zero(), rat(n, m));
    match order {
        12 => {
            // cos(30k°), sin(30k°)
            let table: [((Rational, Rational), (Rational, Rational)); 12] = [
                (r(1, 1), (z(), z())),
                (h(1, 2), r(1, 2)),
                (r(1, 2), h(1, 2)),
                ((z(), z()), r(1, 1)),
                (r(-1, 2), h(1, 2)),
                (h(-1, 2), r(1, 2)),
                (r(-1, 1), (z(), z())),
                (h(-1, 2), r(-1, 2)),
                (r(-1, 2), h(-1, 2)),
                ((z(), z()), r(-1, 1)),
                (r(1, 2), h(-1, 2)),
                (h(1, 2), r(-1, 2)),
            ];
            let (c, s) = table[k as usize].clone();
            pair(c, s)
        }
        8 => {
            let table: [((Rational, Rational), (Rational, Rational)); 8] = [
                (r(1, 1), (z(), z())),
                (h(1, 2), h(1, 2)),
                ((z(), z()), r(1, 1)),
                (h(-1, 2), h(1, 2)),
                (r(-1, 1), (z(), z())),
                (h(-1, 2), h(-1, 2)),
                ((z(), z()), r(-1, 1)),
                (h(1, 2), h(-1, 2)),
            ];
            let (c, s) = table[k as usize].clone();
            pair(c, s)
        }
        _ => {
            let (c, s) = [(1, 0), (0, 1), (-1, 0), (0, -1)][k as usize];
            (Qn::from_rational(int(c), d), Qn::from_rational(int(s), d))
        }
    }
}

/// `p ↦ R_k · F(p) + t`, where `F` is the reflection `(x, y) ↦ (x, −y)` when
/// `reflect` is set and `R_k` the rotation by `k · 2π / order`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Isometry {
    #[serde(rename = "rot")]
    pub rotation: u32,
    pub reflect: bool,
    pub dx: Qn,
    pub dy: Qn,
}

impl Isometry {
    pub fn identity(d: u32) -> Self {
        Isometry { rotation: 0, reflect: false, dx: Qn::zero(d), dy: Qn::zero(d) }
    }

    pub fn new(rotation: u32, reflect: bool, translation: Point) -> Self {
        Isometry { rotation, reflect, dx: translation.x, dy: translation.y }
    }

    pub fn radicand(&self) -> u32 {
        self.dx.radicand()
    }

    pub fn translation(&self) -> Point {
        Point::new(self.dx.clone(), self.dy.clone())
    }

    pub fn validate(&self) -> Result<(), GeometryError> {
        let d = self.radicand();
        if self.dy.radicand() != d {
            return Err(GeometryError::RadicandMismatch);
        }
        if self.rotation >= rotation_order(d) {
            return Err(GeometryError::RotationOutsideGroup { rotation: self.rotation, order: rotation_order(d) });
        }
        Ok(())
    }

    /// Linear part only.
    pub fn apply_linear(&self, p: &Point) -> Point {
        let (c, s) = rotation_entries(self.rotation, p.radicand());
        let y = if self.reflect { -&p.y } else { p.y.clone() };
        Point::new(&c * &p.x - &s * &y, &s * &p.x + &c * &y)
    }

    /// Exact image of `p`. Panics if the point lives in another field; see
    /// [`Isometry::try_apply`].
    pub fn apply(&self, p: &Point) -> Point {
        let q = self.apply_linear(p);
        Point::new(&q.x + &self.dx, &q.y + &self.dy)
    }

    pub fn try_apply(&self, p: &Point) -> Result<Point, GeometryError> {
        self.validate()?;
        if p.radicand() != self.radicand() || p.y.radicand() != p.x.radicand() {
            return Err(GeometryError::NotRepresentable);
        }
        Ok(self.apply(p))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        let order = rotation_order(self.radicand());
        // R_k F^r R_j F^s = R_k R_{±j} F^{r+s}, since F R_j = R_{−j} F.
        let j = if self.reflect { (order - other.rotation % order) % order } else { other.rotation % order };
        let rotation = (self.rotation + j) % order;
        let t = self.apply(&other.translation());
        Isometry { rotation, reflect: self.reflect ^ other.reflect, dx: t.x, dy: t.y }
    }

    pub fn inverse(&self) -> Isometry {
        let d = self.radicand();
        let order = rotation_order(d);
        // (R F)^{-1} = F R^{-1}; for a reflection F R_{-k} = R_k F.
        let linear = if self.reflect {
            Isometry { rotation: self.rotation, reflect: true, dx: Qn::zero(d), dy: Qn::zero(d) }
        } else {
            Isometry { rotation: (order - self.rotation) % order, reflect: false, dx: Qn::zero(d), dy: Qn::zero(d) }
        };
        let t = linear.apply(&self.translation());
        Isometry { dx: -&t.x, dy: -&t.y, ..linear }
    }

    /// Every linear group element (rotation × reflection) of the field, in
    /// `(rotation, reflect)` order.
    pub fn group(d: u32) -> Vec<Isometry> {
        let order = rotation_order(d);
        (0..order)
            .flat_map(|k| [false, true].map(|r| (k, r)))
            .map(|(k, r)| Isometry { rotation: k, reflect: r, dx: Qn::zero(d), dy: Qn::zero(d) })
            .collect()
    }
}
