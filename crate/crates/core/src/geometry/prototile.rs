//! The single polygon every tile is congruent to.

use super::isometry::Isometry;
use super::point::Point;
use super::polygon::{is_strictly_convex_ccw, signed_area};
use super::GeometryError;
use crate::exactnum::rational::{int, rat};
use crate::exactnum::{AngleMode, ExactAngle, QuadraticNumber, Sign};

type Qn = QuadraticNumber;

/// Which of the four trapezoid sides a side is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SideKind {
    /// c–b, length x.
    Short,
    /// b–a, the slanted side of length 2.
    Hypotenuse,
    /// a–d, length x + 2cos α.
    Long,
    /// d–c, length 2sin α, perpendicular to both bases.
    Leg,
    /// Any side of a non-trapezoid prototile.
    Plain,
}

/// Labels of the trapezoid corners: `a` carries α, `b` carries β.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Corner {
    A,
    B,
    C,
    D,
}

/// Trapezoid vertices are stored counterclockwise as `c, b, a, d`.
const TRAPEZOID_ORDER: [Corner; 4] = [Corner::C, Corner::B, Corner::A, Corner::D];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Prototile {
    /// Right trapezoid with acute angle `α = (p/q)·π` and short base `x`.
    RightTrapezoid { x: Qn, p: i64, q: i64 },
    Rectangle { w: Qn, h: Qn },
    /// Strictly convex, counterclockwise.
    ConvexPolygon { vertices: Vec<Point> },
}

/// `(2 sin α, 2 cos α)` for the supported acute angles, in the field of `d`.
fn trapezoid_trig(p: i64, q: i64, d: u32) -> Option<(Qn, Qn)> {
    let z = || int(0);
    match (p, q, d) {
        (1, 3, 3) => Some((Qn::new(z(), int(1), 3), Qn::new(int(1), z(), 3))),
        (1, 4, 2) => Some((Qn::new(z(), int(1), 2), Qn::new(z(), int(1), 2))),
        (1, 6, 3) => Some((Qn::new(int(1), z(), 3), Qn::new(z(), int(1), 3))),
        _ => None,
    }
}

impl Prototile {
    pub fn trapezoid(x: Qn, mode: AngleMode) -> Result<Prototile, GeometryError> {
        let (p, q) = match mode {
            AngleMode::BoundAlpha { p, q } => (p, q),
            AngleMode::GenericAlpha => return Err(GeometryError::UnsupportedAlpha { p: 0, q: 0 }),
        };
        let t = Prototile::RightTrapezoid { x, p, q };
        t.validate()?;
        Ok(t)
    }

    pub fn rectangle(w: Qn, h: Qn) -> Result<Prototile, GeometryError> {
        let t = Prototile::Rectangle { w, h };
        t.validate()?;
        Ok(t)
    }

    pub fn convex(vertices: Vec<Point>) -> Result<Prototile, GeometryError> {
        let t = Prototile::ConvexPolygon { vertices };
        t.validate()?;
        Ok(t)
    }

    pub fn radicand(&self) -> u32 {
        match self {
            Prototile::RightTrapezoid { x, .. } => x.radicand(),
            Prototile::Rectangle { w, .. } => w.radicand(),
            Prototile::ConvexPolygon { vertices } => vertices.first().map_or(1, Point::radicand),
        }
    }

    pub fn validate(&self) -> Result<(), GeometryError> {
        match self {
            Prototile::RightTrapezoid { x, p, q } => {
                if trapezoid_trig(*p, *q, x.radicand()).is_none() {
                    return Err(GeometryError::UnsupportedAlpha { p: *p, q: *q });
                }
                if !x.is_positive() {
                    return Err(GeometryError::DegeneratePrototile(format!("x = {x} is not positive")));
                }
            }
            Prototile::Rectangle { w, h } => {
                if w.radicand() != h.radicand() {
                    return Err(GeometryError::RadicandMismatch);
                }
                if !w.is_positive() || !h.is_positive() {
                    return Err(GeometryError::DegeneratePrototile("rectangle sides must be positive".into()));
                }
            }
            Prototile::ConvexPolygon { vertices } => {
                let d = self.radicand();
                if vertices.iter().any(|v| v.radicand() != d || v.y.radicand() != d) {
                    return Err(GeometryError::RadicandMismatch);
                }
                if !is_strictly_convex_ccw(vertices) {
                    return Err(GeometryError::DegeneratePrototile(
                        "polygon is not strictly convex and counterclockwise".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn is_trapezoid(&self) -> bool {
        matches!(self, Prototile::RightTrapezoid { .. })
    }

    /// The angle mode implied by the prototile, if it fixes α.
    pub fn angle_mode(&self) -> Option<AngleMode> {
        match self {
            Prototile::RightTrapezoid { p, q, .. } => Some(AngleMode::BoundAlpha { p: *p, q: *q }),
            _ => None,
        }
    }

    /// Vertices in counterclockwise order.
    pub fn vertices(&self) -> Vec<Point> {
        match self {
            Prototile::RightTrapezoid { x, p, q } => {
                let d = x.radicand();
                let (h, off) = trapezoid_trig(*p, *q, d).expect("validated trapezoid");
                let zero = Qn::zero(d);
                vec![
                    Point::new(zero.clone(), zero.clone()),
                    Point::new(x.clone(), zero.clone()),
                    Point::new(x + &off, h.clone()),
                    Point::new(zero, h),
                ]
            }
            Prototile::Rectangle { w, h } => {
                let zero = Qn::zero(w.radicand());
                vec![
                    Point::new(zero.clone(), zero.clone()),
                    Point::new(w.clone(), zero.clone()),
                    Point::new(w.clone(), h.clone()),
                    Point::new(zero, h.clone()),
                ]
            }
            Prototile::ConvexPolygon { vertices } => vertices.clone(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            Prototile::ConvexPolygon { vertices } => vertices.len(),
            _ => 4,
        }
    }

    /// Index (into [`Prototile::vertices`]) of a trapezoid corner.
    pub fn corner_index(&self, c: Corner) -> Option<usize> {
        if !self.is_trapezoid() {
            return None;
        }
        TRAPEZOID_ORDER.iter().position(|&k| k == c)
    }

    pub fn corner_of(&self, index: usize) -> Option<Corner> {
        self.is_trapezoid().then(|| TRAPEZOID_ORDER[index])
    }

    /// Kind of the side from vertex `i` to vertex `i + 1`.
    pub fn side_kind(&self, i: usize) -> SideKind {
        if self.is_trapezoid() {
            [SideKind::Short, SideKind::Hypotenuse, SideKind::Long, SideKind::Leg][i]
        } else {
            SideKind::Plain
        }
    }

    /// Interior angle at each vertex as a symbolic angle. Only available when
    /// every angle is α, β or a right angle.
    pub fn angles(&self) -> Result<Vec<ExactAngle>, GeometryError> {
        match self {
            Prototile::RightTrapezoid { .. } => {
                Ok(vec![ExactAngle::RIGHT, ExactAngle::BETA, ExactAngle::ALPHA, ExactAngle::RIGHT])
            }
            Prototile::Rectangle { .. } => Ok(vec![ExactAngle::RIGHT; 4]),
            Prototile::ConvexPolygon { vertices } => {
                let n = vertices.len();
                (0..n)
                    .map(|i| {
                        let prev = &vertices[(i + n - 1) % n];
                        let cur = &vertices[i];
                        let next = &vertices[(i + 1) % n];
                        let u = prev - cur;
                        let v = next - cur;
                        if super::point::dot(&u, &v).is_zero() {
                            Ok(ExactAngle::RIGHT)
                        } else {
                            Err(GeometryError::AngleNotSymbolic(i))
                        }
                    })
                    .collect()
            }
        }
    }

    pub fn area(&self) -> Qn {
        signed_area(&self.vertices())
    }

    /// `2 sin α`: the trapezoid height.
    pub fn height(&self) -> Option<Qn> {
        match self {
            Prototile::RightTrapezoid { x, p, q } => trapezoid_trig(*p, *q, x.radicand()).map(|t| t.0),
            _ => None,
        }
    }

    /// Side lengths in vertex order, when each is in the field.
    pub fn side_lengths(&self) -> Vec<Option<Qn>> {
        let v = self.vertices();
        let n = v.len();
        (0..n).map(|i| (&v[(i + 1) % n] - &v[i]).norm2().sqrt()).collect()
    }

    /// Exact image polygon of this prototile under `iso`, counterclockwise,
    /// with the prototile vertex index of each image vertex.
    pub fn place(&self, iso: &Isometry) -> (Vec<Point>, Vec<usize>) {
        let verts = self.vertices();
        let mut pts: Vec<Point> = verts.iter().map(|p| iso.apply(p)).collect();
        let mut idx: Vec<usize> = (0..verts.len()).collect();
        if iso.reflect {
            pts.reverse();
            idx.reverse();
        }
        (pts, idx)
    }
}

/// Whether a placed trapezoid is positive (`φ(a), φ(b), φ(c), φ(d)` run
/// clockwise) or negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Positive,
    Negative,
}

pub fn tile_orientation(proto: &Prototile, iso: &Isometry) -> Result<Orientation, GeometryError> {
    if !proto.is_trapezoid() {
        return Err(GeometryError::NotTrapezoid);
    }
    let verts = proto.vertices();
    let labelled: Vec<Point> = [Corner::A, Corner::B, Corner::C, Corner::D]
        .iter()
        .map(|&c| iso.apply(&verts[proto.corner_index(c).unwrap()]))
        .collect();
    Ok(match signed_area(&labelled).sign() {
        Sign::Negative => Orientation::Positive,
        _ => Orientation::Negative,
    })
}

/// The trapezoid area `½(2x + 2cos α)·2sin α` written out, for cross-checks.
pub fn trapezoid_area_formula(x: &Qn, p: i64, q: i64) -> Option<Qn> {
    let (h, off) = trapezoid_trig(p, q, x.radicand())?;
    Some((x.scale(&int(2)) + off) * h * Qn::from_rational(rat(1, 2), x.radicand()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::isometry::rotation_order;

    fn pi3() -> AngleMode {
        AngleMode::BoundAlpha { p: 1, q: 3 }
    }

    fn x0() -> Qn {
        Qn::new(rat(-1, 2), rat(1, 2), 3)
    }

    #[test]
    fn area_of_the_standard_trapezoid() {
        let t = Prototile::trapezoid(x0(), pi3()).unwrap();
        assert_eq!(t.area(), Qn::from_rational(rat(3, 2), 3));
        assert_eq!(trapezoid_area_formula(&x0(), 1, 3).unwrap(), t.area());
    }

    #[test]
    fn symbolic_area() {
        // S_P = (2r+1)/2·√3 + 3s for x = r + s√3.
        for (r, s) in [((1, 3), (2, 5)), ((-1, 2), (1, 2)), ((0, 1), (1, 3))] {
            let (r, s) = (rat(r.0, r.1), rat(s.0, s.1));
            let x = Qn::new(r.clone(), s.clone(), 3);
            let expect = Qn::new(int(3) * s, (int(2) * r + int(1)) / int(2), 3);
            assert_eq!(Prototile::trapezoid(x, pi3()).unwrap().area(), expect);
        }
    }

    #[test]
    fn side_lengths_at_pi_over_3() {
        let t = Prototile::trapezoid(x0(), pi3()).unwrap();
        let l: Vec<Qn> = t.side_lengths().into_iter().map(Option::unwrap).collect();
        let one = Qn::one(3);
        assert_eq!(l, vec![x0(), Qn::from_int(2, 3), &x0() + &one, Qn::sqrt_d(3)]);
    }

    #[test]
    fn angles_match_geometry() {
        for (mode, d) in [(pi3(), 3), (AngleMode::BoundAlpha { p: 1, q: 4 }, 2), (AngleMode::BoundAlpha { p: 1, q: 6 }, 3)] {
            let t = Prototile::trapezoid(Qn::one(d), mode).unwrap();
            let v = t.vertices();
            let a = t.corner_index(Corner::A).unwrap();
            // at a: the inward directions toward b and d span α
            let to_b = &v[1] - &v[a];
            let to_d = &v[3] - &v[a];
            let cos_num = super::super::point::dot(&to_b, &to_d);
            assert!(cos_num.is_positive(), "acute angle at a");
            assert!(is_strictly_convex_ccw(&v));
        }
    }

    #[test]
    fn orientation_examples() {
        let t = Prototile::trapezoid(x0(), pi3()).unwrap();
        let id = Isometry::identity(3);
        assert_eq!(tile_orientation(&t, &id).unwrap(), Orientation::Positive);
        let refl = Isometry { reflect: true, ..id.clone() };
        assert_eq!(tile_orientation(&t, &refl).unwrap(), Orientation::Negative);
        for k in 0..rotation_order(3) {
            let rot = Isometry { rotation: k, ..id.clone() };
            assert_eq!(tile_orientation(&t, &rot).unwrap(), Orientation::Positive);
        }
        let sq = Prototile::rectangle(Qn::one(1), Qn::one(1)).unwrap();
        assert!(tile_orientation(&sq, &Isometry::identity(1)).is_err());
    }

    #[test]
    fn degenerate_prototiles_rejected() {
        assert!(matches!(
            Prototile::trapezoid(Qn::zero(3), pi3()),
            Err(GeometryError::DegeneratePrototile(_))
        ));
        assert!(matches!(
            Prototile::trapezoid(Qn::one(3), AngleMode::BoundAlpha { p: 2, q: 5 }),
            Err(GeometryError::UnsupportedAlpha { .. })
        ));
    }
}
