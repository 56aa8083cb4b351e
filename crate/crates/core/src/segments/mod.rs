//! Maximal segments of the union of tile boundaries, their side sequences,
//! and the algebra and special-segment analysis built on them.

mod relations;
mod special;

pub use relations::{
    area_constraint, area_constraint_check, boundary_identified_relations, pure2_check, solve_x, AreaConstraint,
    LabeledRelation, Pure2Witness, RelationSource, SideRelation, SolveX,
};
pub use special::{
    chain_step, find_3beta_vertices, head_at, heads_from, odd_n_obstruction_report, prec, scan_special_segments,
    ChainOutcome, ChainReport, ChainStep, Delta, HeadInformation, SpecialSegment, Theta, ThreeBeta, ThreeBetaKind,
};

use crate::exactnum::QuadraticNumber;
use crate::geometry::{cross, dot, Point, SideKind};
use crate::tiling::Tiling;
use serde::Serialize;
use thiserror::Error;

type Qn = QuadraticNumber;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SegmentError {
    #[error("the prototile is not a right trapezoid")]
    WrongPrototile,
    #[error("this analysis needs α = π/3 in the field ℚ(√3)")]
    NeedsPiOverThree,
    #[error("the region is not a square")]
    NotSquare,
    #[error("x is not of the form r + s√3")]
    NotInField,
}

/// One tile side lying on a segment, with endpoints ordered along it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SegmentSide {
    pub tile: usize,
    /// Image side index within the tile.
    #[serde(skip)]
    pub side: usize,
    #[serde(skip)]
    pub kind: SideKind,
    pub length: Option<Qn>,
    pub from: Point,
    pub to: Point,
}

impl SegmentSide {
    pub fn is_two(&self) -> bool {
        self.length.as_ref().is_some_and(|l| *l == Qn::from_int(2, l.radicand()))
    }
}

/// A connected piece of the union of collinear tile sides, from `u` (the
/// lower-left endpoint in `(y, x)` order) to `v`. The upper sequence lists
/// the sides of tiles on the left of `u → v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MaximalSegment {
    pub u: Point,
    pub v: Point,
    pub upper: Vec<SegmentSide>,
    pub lower: Vec<SegmentSide>,
    /// Lies on the region boundary (so one sequence is empty).
    pub boundary: bool,
}

impl MaximalSegment {
    pub fn direction(&self) -> Point {
        &self.v - &self.u
    }

    pub fn contains(&self, p: &Point) -> bool {
        let d = self.direction();
        let w = p - &self.u;
        cross(&d, &w).is_zero() && !dot(&d, &w).is_negative() && dot(&d, &w) <= dot(&d, &d)
    }
}

fn canonical_dir(d: Point) -> Point {
    if d.y.is_negative() || (d.y.is_zero() && d.x.is_negative()) {
        -&d
    } else {
        d
    }
}

/// Decompose the union of tile boundaries into maximal segments, ordered by
/// `(u, v)`.
pub fn extract_maximal_segments(t: &Tiling) -> Vec<MaximalSegment> {
    let lengths = t.prototile().side_lengths();
    // group sides by supporting line
    let mut lines: Vec<(Point, Point, Vec<(usize, usize)>)> = Vec::new();
    for (j, img) in t.images().iter().enumerate() {
        for k in 0..img.len() {
            let s = img.side(k);
            let dir = canonical_dir(s.vector());
            match lines
                .iter_mut()
                .find(|(p, d, _)| cross(d, &dir).is_zero() && cross(d, &(&s.a - p)).is_zero())
            {
                Some(line) => line.2.push((j, k)),
                None => lines.push((s.a.clone(), dir, vec![(j, k)])),
            }
        }
    }
    let region = t.region();
    let mut out = Vec::new();
    for (anchor, dir, sides) in lines {
        let param = |p: &Point| dot(&(p - &anchor), &dir);
        let mut items: Vec<(Qn, Qn, SegmentSide, bool)> = sides
            .into_iter()
            .map(|(j, k)| {
                let s = t.image(j).side(k);
                let forward = dot(&s.vector(), &dir).is_positive();
                let (from, to) = if forward { (s.a, s.b) } else { (s.b, s.a) };
                let side = SegmentSide {
                    tile: j,
                    side: k,
                    kind: t.side_kind(j, k),
                    length: lengths[t.image(j).proto_side(k)].clone(),
                    from,
                    to,
                };
                (param(&side.from), param(&side.to), side, forward)
            })
            .collect();
        items.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)).then_with(|| a.2.tile.cmp(&b.2.tile)));
        let mut start = 0;
        while start < items.len() {
            let mut end = start + 1;
            let mut reach = items[start].1.clone();
            while end < items.len() && items[end].0 <= reach {
                if items[end].1 > reach {
                    reach = items[end].1.clone();
                }
                end += 1;
            }
            let group = &items[start..end];
            let u = group[0].2.from.clone();
            let v = group.iter().max_by(|a, b| a.1.cmp(&b.1)).unwrap().2.to.clone();
            // A tile traversed forward (counterclockwise) along u → v lies on
            // the left of it.
            let upper: Vec<SegmentSide> = group.iter().filter(|g| g.3).map(|g| g.2.clone()).collect();
            let lower: Vec<SegmentSide> = group.iter().filter(|g| !g.3).map(|g| g.2.clone()).collect();
            let on_edge = |f: &dyn Fn(&Point) -> bool| f(&u) && f(&v);
            let boundary = on_edge(&|p: &Point| p.y.is_zero())
                || on_edge(&|p: &Point| p.x.is_zero())
                || on_edge(&|p: &Point| p.y == region.height)
                || on_edge(&|p: &Point| p.x == region.width);
            out.push(MaximalSegment { u, v, upper, lower, boundary });
            start = end;
        }
    }
    out.sort_by(|a, b| a.u.cmp(&b.u).then_with(|| a.v.cmp(&b.v)));
    out
}

/// A basic segment `[u, v]` running to an endpoint `v` of a maximal segment,
/// with side sequences read from `u` and upper meaning left of `u → v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HalfMaximalSegment {
    pub u: Point,
    pub v: Point,
    /// Index of the maximal segment it lies in.
    pub parent: usize,
    pub upper: Vec<SegmentSide>,
    pub lower: Vec<SegmentSide>,
}

/// The half-maximal segment starting at `u` and heading along `dir`, if `u`
/// splits no side on that line and is not already the far end.
pub fn half_maximal_from(segs: &[MaximalSegment], u: &Point, dir: &Point) -> Option<HalfMaximalSegment> {
    let (parent, m) = segs
        .iter()
        .enumerate()
        .find(|(_, m)| cross(&m.direction(), dir).is_zero() && m.contains(u))?;
    let forward = dot(&m.direction(), dir).is_positive();
    let v = if forward { m.v.clone() } else { m.u.clone() };
    if &v == u {
        return None;
    }
    let along = &v - u;
    let t = |p: &Point| dot(&(p - u), &along);
    let zero = Qn::zero(u.radicand());
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for (list, left_of_m) in [(&m.upper, true), (&m.lower, false)] {
        for s in list {
            let (a, b) = if forward { (s.from.clone(), s.to.clone()) } else { (s.to.clone(), s.from.clone()) };
            let (ta, tb) = (t(&a), t(&b));
            if ta < zero && tb > zero {
                return None;
            }
            if ta >= zero {
                let s = SegmentSide { from: a, to: b, ..s.clone() };
                if left_of_m == forward {
                    upper.push((ta, s));
                } else {
                    lower.push((ta, s));
                }
            }
        }
    }
    upper.sort_by(|a, b| a.0.cmp(&b.0));
    lower.sort_by(|a, b| a.0.cmp(&b.0));
    Some(HalfMaximalSegment {
        u: u.clone(),
        v,
        parent,
        upper: upper.into_iter().map(|p| p.1).collect(),
        lower: lower.into_iter().map(|p| p.1).collect(),
    })
}
