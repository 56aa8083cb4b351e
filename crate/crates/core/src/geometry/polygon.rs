//! Exact polygon predicates: area, convexity, point location, segment
//! intersection, convex clipping.

use super::point::{cross, dot, orient, Direction, Point};
use super::GeometryError;
use crate::exactnum::rational::rat;
use crate::exactnum::{QuadraticNumber, Sign};

type Qn = QuadraticNumber;

/// Shoelace area; positive for counterclockwise input. No checks.
pub fn signed_area(poly: &[Point]) -> Qn {
    let d = poly.first().map_or(1, Point::radicand);
    let n = poly.len();
    let twice = (0..n).fold(Qn::zero(d), |acc, i| acc + cross(&poly[i], &poly[(i + 1) % n]));
    twice.scale(&rat(1, 2))
}

/// Shoelace area of a simple polygon, rejecting collinear and
/// self-intersecting input.
pub fn polygon_area(poly: &[Point]) -> Result<Qn, GeometryError> {
    if poly.len() < 3 {
        return Err(GeometryError::Degenerate("fewer than three vertices".into()));
    }
    let n = poly.len();
    for i in 0..n {
        for j in i + 1..n {
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            let s = Segment::new(poly[i].clone(), poly[(i + 1) % n].clone());
            let t = Segment::new(poly[j].clone(), poly[(j + 1) % n].clone());
            if s.is_degenerate() || t.is_degenerate() {
                return Err(GeometryError::Degenerate("repeated vertex".into()));
            }
            match segment_relation(&s, &t) {
                SegmentRelation::Disjoint => {}
                SegmentRelation::Point(_) if adjacent => {}
                _ => return Err(GeometryError::Degenerate("self-intersecting boundary".into())),
            }
        }
    }
    let a = signed_area(poly);
    if a.is_zero() {
        return Err(GeometryError::Degenerate("zero area".into()));
    }
    Ok(a)
}

/// Every turn is a strict left turn, and the boundary winds once.
pub fn is_strictly_convex_ccw(poly: &[Point]) -> bool {
    let n = poly.len();
    if n < 3 {
        return false;
    }
    let turns_left = (0..n).all(|i| orient(&poly[i], &poly[(i + 1) % n], &poly[(i + 2) % n]) == Sign::Positive);
    if !turns_left {
        return false;
    }
    // Left turns everywhere still allow a star that winds twice; the edge
    // arguments must increase with exactly one wrap past 2π.
    let dirs: Vec<Direction> = (0..n)
        .map(|i| Direction::between(&poly[i], &poly[(i + 1) % n]).expect("left turns imply distinct vertices"))
        .collect();
    let wraps = (0..n).filter(|&i| dirs[(i + 1) % n].cmp_angle(&dirs[i]).is_lt()).count();
    wraps == 1
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Self {
        Segment { a, b }
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }

    pub fn vector(&self) -> Point {
        &self.b - &self.a
    }

    /// Endpoints ordered by (y, x).
    pub fn normalized(&self) -> Segment {
        if self.a.cmp_yx(&self.b).is_le() {
            self.clone()
        } else {
            Segment::new(self.b.clone(), self.a.clone())
        }
    }

    /// `p` on the closed segment.
    pub fn contains(&self, p: &Point) -> bool {
        let v = self.vector();
        let w = p - &self.a;
        cross(&v, &w).is_zero() && !dot(&v, &w).is_negative() && dot(&v, &w) <= dot(&v, &v)
    }

    /// `p` on the segment but not an endpoint.
    pub fn contains_strictly(&self, p: &Point) -> bool {
        self.contains(p) && p != &self.a && p != &self.b
    }

    pub fn length2(&self) -> Qn {
        self.vector().norm2()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SegmentRelation {
    Disjoint,
    Point(Point),
    Overlap(Segment),
}

/// Exact classification of the intersection of two closed segments.
pub fn segment_relation(s1: &Segment, s2: &Segment) -> SegmentRelation {
    let r = s1.vector();
    let s = s2.vector();
    let qp = &s2.a - &s1.a;
    let denom = cross(&r, &s);
    if denom.is_zero() {
        if !cross(&qp, &r).is_zero() {
            return SegmentRelation::Disjoint;
        }
        // Collinear: project onto r.
        let rr = dot(&r, &r);
        let t0 = dot(&qp, &r);
        let t1 = dot(&(&s2.b - &s1.a), &r);
        let (lo, hi) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
        let zero = Qn::zero(rr.radicand());
        let start = if lo > zero { lo } else { zero };
        let end = if hi < rr { hi } else { rr.clone() };
        return match start.cmp(&end) {
            std::cmp::Ordering::Greater => SegmentRelation::Disjoint,
            ord => {
                let at = |t: &Qn| {
                    let f = t.checked_div(&rr).expect("nonzero length");
                    &s1.a + &r.scale(&f)
                };
                if ord.is_eq() {
                    SegmentRelation::Point(at(&start))
                } else {
                    SegmentRelation::Overlap(Segment::new(at(&start), at(&end)))
                }
            }
        };
    }
    let t_num = cross(&qp, &s);
    let u_num = cross(&qp, &r);
    let within = |num: &Qn| {
        let (n, d) = if denom.is_negative() { (-num, -&denom) } else { (num.clone(), denom.clone()) };
        !n.is_negative() && n <= d
    };
    if within(&t_num) && within(&u_num) {
        let t = t_num.checked_div(&denom).expect("nonzero");
        SegmentRelation::Point(&s1.a + &r.scale(&t))
    } else {
        SegmentRelation::Disjoint
    }
}

/// Intersection point of the infinite lines through two segments, if they
/// are not parallel.
pub fn line_intersection(p: &Point, r: &Point, q: &Point, s: &Point) -> Option<Point> {
    let denom = cross(r, s);
    if denom.is_zero() {
        return None;
    }
    let t = cross(&(q - p), s).checked_div(&denom).ok()?;
    Some(p + &r.scale(&t))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Inside,
    Boundary,
    Outside,
}

/// Locate `p` relative to a counterclockwise convex polygon.
pub fn locate_convex(poly: &[Point], p: &Point) -> Location {
    let n = poly.len();
    let mut on_edge = false;
    for i in 0..n {
        match orient(&poly[i], &poly[(i + 1) % n], p) {
            Sign::Negative => return Location::Outside,
            Sign::Zero => on_edge = true,
            Sign::Positive => {}
        }
    }
    if on_edge {
        Location::Boundary
    } else {
        Location::Inside
    }
}

/// Whether two counterclockwise convex polygons have overlapping interiors.
/// Separating-axis test over the edge normals of both: exact, no division.
pub fn convex_interiors_overlap(p: &[Point], q: &[Point]) -> bool {
    !(separated_by_edge_of(p, q) || separated_by_edge_of(q, p))
}

fn separated_by_edge_of(p: &[Point], q: &[Point]) -> bool {
    let n = p.len();
    (0..n).any(|i| {
        let a = &p[i];
        let b = &p[(i + 1) % n];
        q.iter().all(|v| orient(a, b, v) != Sign::Positive)
    })
}

/// Keep the part of a convex polygon on the closed left of the directed line
/// through `a` with direction `dir`.
pub fn clip_halfplane(poly: &[Point], a: &Point, dir: &Point) -> Vec<Point> {
    let n = poly.len();
    let side = |p: &Point| cross(dir, &(p - a)).sign();
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..n {
        let cur = &poly[i];
        let next = &poly[(i + 1) % n];
        let (sc, sn) = (side(cur), side(next));
        if sc != Sign::Negative {
            out.push(cur.clone());
        }
        if (sc == Sign::Positive && sn == Sign::Negative) || (sc == Sign::Negative && sn == Sign::Positive) {
            out.push(line_intersection(cur, &(next - cur), a, dir).expect("edge crosses the line"));
        }
    }
    dedup_cyclic(out)
}

fn dedup_cyclic(mut pts: Vec<Point>) -> Vec<Point> {
    pts.dedup();
    while pts.len() > 1 && pts.first() == pts.last() {
        pts.pop();
    }
    pts
}

/// Sutherland–Hodgman clipping of a convex polygon by another (both
/// counterclockwise). The result may be degenerate (fewer than three
/// vertices, or collinear).
pub fn clip_convex(subject: &[Point], clip: &[Point]) -> Vec<Point> {
    let n = clip.len();
    let mut out = subject.to_vec();
    for i in 0..n {
        if out.is_empty() {
            break;
        }
        let a = &clip[i];
        let dir = &clip[(i + 1) % n] - a;
        out = clip_halfplane(&out, a, &dir);
    }
    out
}

/// Area of the intersection of two convex polygons.
pub fn convex_intersection_area(p: &[Point], q: &[Point]) -> Qn {
    let d = p.first().map_or(1, Point::radicand);
    let c = clip_convex(p, q);
    if c.len() < 3 {
        Qn::zero(d)
    } else {
        signed_area(&c)
    }
}

/// Split a convex polygon by a line into its closed left and right parts;
/// parts with empty interior are dropped.
pub fn split_convex(poly: &[Point], a: &Point, dir: &Point) -> (Option<Vec<Point>>, Option<Vec<Point>>) {
    let keep = |v: Vec<Point>| (v.len() >= 3 && !signed_area(&v).is_zero()).then_some(v);
    let left = keep(clip_halfplane(poly, a, dir));
    let right = keep(clip_halfplane(poly, a, &-dir));
    (left, right)
}

/// Average of the vertices: an interior point of any convex polygon with
/// nonempty interior.
pub fn vertex_centroid(poly: &[Point]) -> Point {
    let d = poly[0].radicand();
    let n = poly.len() as i64;
    let sum = poly.iter().fold(Point::origin(d), |acc, p| &acc + p);
    sum.scale(&Qn::from_rational(rat(1, n), d))
}
