use crate::exactnum::{QuadraticNumber, Sign};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

type Qn = QuadraticNumber;

/// A point (or free vector) with coordinates in one quadratic field.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Point {
    pub x: Qn,
    pub y: Qn,
}

impl Point {
    pub fn new(x: Qn, y: Qn) -> Self {
        debug_assert_eq!(x.radicand(), y.radicand());
        Point { x, y }
    }

    pub fn origin(d: u32) -> Self {
        Point::new(Qn::zero(d), Qn::zero(d))
    }

    pub fn from_ints(x: i64, y: i64, d: u32) -> Self {
        Point::new(Qn::from_int(x, d), Qn::from_int(y, d))
    }

    pub fn radicand(&self) -> u32 {
        self.x.radicand()
    }

    pub fn scale(&self, k: &Qn) -> Point {
        Point::new(&self.x * k, &self.y * k)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn norm2(&self) -> Qn {
        &self.x * &self.x + &self.y * &self.y
    }

    /// Lexicographic order on (y, x): the "lowest, then leftmost" order.
    pub fn cmp_yx(&self, other: &Point) -> Ordering {
        self.y.cmp(&other.y).then_with(|| self.x.cmp(&other.x))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }

    /// Rotation by +90°.
    pub fn perp(&self) -> Point {
        Point::new(-&self.y, self.x.clone())
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic (y, x), matching [`Point::cmp_yx`].
impl Ord for Point {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_yx(other)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Add<&Point> for &Point {
    type Output = Point;
    fn add(self, o: &Point) -> Point {
        Point::new(&self.x + &o.x, &self.y + &o.y)
    }
}

impl Sub<&Point> for &Point {
    type Output = Point;
    fn sub(self, o: &Point) -> Point {
        Point::new(&self.x - &o.x, &self.y - &o.y)
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        &self + &o
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        &self - &o
    }
}

impl Neg for &Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-&self.x, -&self.y)
    }
}

pub fn cross(u: &Point, v: &Point) -> Qn {
    &u.x * &v.y - &u.y * &v.x
}

pub fn dot(u: &Point, v: &Point) -> Qn {
    &u.x * &v.x + &u.y * &v.y
}

/// Sign of the turn `a → b → c` (positive = counterclockwise).
pub fn orient(a: &Point, b: &Point, c: &Point) -> Sign {
    cross(&(b - a), &(c - a)).sign()
}

/// A nonzero direction, compared projectively (never normalised).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Direction {
    pub dx: Qn,
    pub dy: Qn,
}

impl Direction {
    pub fn new(dx: Qn, dy: Qn) -> Option<Self> {
        if dx.is_zero() && dy.is_zero() {
            None
        } else {
            Some(Direction { dx, dy })
        }
    }

    pub fn between(from: &Point, to: &Point) -> Option<Self> {
        let v = to - from;
        Direction::new(v.x, v.y)
    }

    pub fn as_vector(&self) -> Point {
        Point::new(self.dx.clone(), self.dy.clone())
    }

    pub fn is_parallel(&self, other: &Direction) -> bool {
        cross(&self.as_vector(), &other.as_vector()).is_zero()
    }

    /// Same ray direction (parallel and pointing the same way).
    pub fn same_ray(&self, other: &Direction) -> bool {
        self.is_parallel(other) && dot(&self.as_vector(), &other.as_vector()).is_positive()
    }

    /// Upper half-plane test used by the angular order: directions with
    /// argument in `[0, π)` come first.
    fn half(&self) -> u8 {
        match self.dy.sign() {
            Sign::Positive => 0,
            Sign::Zero if self.dx.is_positive() => 0,
            _ => 1,
        }
    }

    /// Order by argument in `[0, 2π)`, exactly.
    pub fn cmp_angle(&self, other: &Direction) -> Ordering {
        self.half().cmp(&other.half()).then_with(|| {
            // Within a half-plane, u before v iff v is counterclockwise of u.
            cross(&other.as_vector(), &self.as_vector()).sign().to_ordering()
        })
    }
}

/// `u ∼ v`: parallel or perpendicular.
pub fn direction_equiv(u: &Direction, v: &Direction) -> bool {
    let (a, b) = (u.as_vector(), v.as_vector());
    cross(&a, &b).is_zero() || dot(&a, &b).is_zero()
}
