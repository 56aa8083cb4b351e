//! Vertex census: which tiles meet at each tile vertex, with which angles,
//! and the counting identities that follow.

use crate::exactnum::rational::{int, rat, Rational};
use crate::exactnum::{angle_eq, AngleMode, ExactAngle};
use crate::geometry::{Direction, GeometryError, Point};
use crate::par;
use crate::tiling::Tiling;
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IncidenceError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("angles at {w} sum to {sum}, which fits no vertex class")]
    AngleSum { w: Point, sum: ExactAngle },
    #[error("census mismatch: F + H + hbar = {got}, expected N·q = {expected}")]
    CensusMismatch { got: i64, expected: i64 },
    #[error("q = {0} is below 6")]
    QTooSmall(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum VertexClass {
    /// A corner of the region (angle sum π/2).
    Corner,
    /// On the region boundary, not a corner (π).
    Boundary,
    /// Interior to the region and to no tile side (2π).
    Interior,
    /// Interior to the region but inside another tile's side (π).
    SideInterior,
}

impl VertexClass {
    pub fn expected_sum(self) -> ExactAngle {
        match self {
            VertexClass::Corner => ExactAngle::RIGHT,
            VertexClass::Boundary | VertexClass::SideInterior => ExactAngle::STRAIGHT,
            VertexClass::Interior => ExactAngle::FULL,
        }
    }
}

/// Tiles having `w` as a vertex, clockwise from the positive x-axis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexIncidence {
    pub w: Point,
    pub tiles: Vec<usize>,
    /// Image vertex index of `w` within each incident tile.
    #[serde(skip)]
    pub corners: Vec<usize>,
    pub angles: Vec<ExactAngle>,
    pub class: VertexClass,
}

impl VertexIncidence {
    pub fn degree(&self) -> usize {
        self.tiles.len()
    }

    pub fn angle_sum(&self) -> ExactAngle {
        self.angles.iter().copied().sum()
    }
}

/// Clockwise angle from the positive x-axis of a direction, compared in
/// `(0, 2π]`.
fn cw_key_cmp(a: &Direction, b: &Direction) -> std::cmp::Ordering {
    let conj = |d: &Direction| Direction::new(d.dx.clone(), -&d.dy).unwrap();
    let (ca, cb) = (conj(a), conj(b));
    let on_axis = |d: &Direction| d.dy.is_zero() && d.dx.is_positive();
    match (on_axis(&ca), on_axis(&cb)) {
        (true, true) => std::cmp::Ordering::Equal,
        (true, false) => std::cmp::Ordering::Greater,
        (false, true) => std::cmp::Ordering::Less,
        (false, false) => ca.cmp_angle(&cb),
    }
}

pub fn classify_point(t: &Tiling, w: &Point) -> VertexClass {
    let region = t.region();
    if region.is_corner(w) {
        VertexClass::Corner
    } else if region.on_boundary(w) {
        VertexClass::Boundary
    } else {
        let hanging = t.images().iter().any(|img| (0..img.len()).any(|k| img.side(k).contains_strictly(w)));
        if hanging {
            VertexClass::SideInterior
        } else {
            VertexClass::Interior
        }
    }
}

/// One record per distinct tile vertex, sorted by `(y, x)`.
pub fn build_incidence(t: &Tiling) -> Result<Vec<VertexIncidence>, IncidenceError> {
    incidence_impl(t, true)
}

/// Like [`build_incidence`] but without checking angle sums, for partial
/// configurations.
pub fn collect_incidence(t: &Tiling) -> Result<Vec<VertexIncidence>, IncidenceError> {
    incidence_impl(t, false)
}

fn incidence_impl(t: &Tiling, strict: bool) -> Result<Vec<VertexIncidence>, IncidenceError> {
    let proto_angles = t.prototile().angles()?;
    let mut at: BTreeMap<Point, Vec<(usize, usize)>> = BTreeMap::new();
    for (j, img) in t.images().iter().enumerate() {
        for (i, p) in img.points.iter().enumerate() {
            at.entry(p.clone()).or_default().push((j, i));
        }
    }
    let entries: Vec<(Point, Vec<(usize, usize)>)> = at.into_iter().collect();
    let mode = t.angle_mode();
    par::map(&entries, |(w, list)| {
        let mut list = list.clone();
        // Sector of tile j at w runs counterclockwise from (next − w) to
        // (prev − w); walking clockwise, it is left through (next − w).
        let exit = |&(j, i): &(usize, usize)| {
            let img = t.image(j);
            Direction::between(w, &img.points[(i + 1) % img.len()]).unwrap()
        };
        list.sort_by(|a, b| cw_key_cmp(&exit(a), &exit(b)));
        let tiles: Vec<usize> = list.iter().map(|&(j, _)| j).collect();
        let corners: Vec<usize> = list.iter().map(|&(_, i)| i).collect();
        let angles: Vec<ExactAngle> =
            list.iter().map(|&(j, i)| proto_angles[t.image(j).proto_index[i]]).collect();
        let class = classify_point(t, w);
        let sum: ExactAngle = angles.iter().copied().sum();
        if strict && !angle_eq(sum, class.expected_sum(), mode) {
            return Err(IncidenceError::AngleSum { w: w.clone(), sum });
        }
        Ok(VertexIncidence { w: w.clone(), tiles, corners, angles, class })
    })
    .into_iter()
    .collect()
}

/// The vertex census. Vertices inside another tile's side count with the
/// straight-angle vertices, since their angle sum is π.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CountingSummary {
    pub q: i64,
    #[serde(rename = "N")]
    pub n: i64,
    #[serde(rename = "cardF")]
    pub card_f: i64,
    #[serde(rename = "cardH")]
    pub card_h: i64,
    #[serde(rename = "F")]
    pub f: i64,
    #[serde(rename = "H")]
    pub h: i64,
    pub hbar: i64,
    #[serde(rename = "Delta")]
    pub delta: i64,
}

pub fn counting_summary(inc: &[VertexIncidence], q: i64, n: i64) -> Result<CountingSummary, IncidenceError> {
    let (mut card_f, mut card_h, mut f, mut h, mut hbar, mut corners) = (0, 0, 0, 0, 0, 0);
    for v in inc {
        let k = v.degree() as i64;
        match v.class {
            VertexClass::Interior => {
                card_f += 1;
                f += k;
            }
            VertexClass::Boundary | VertexClass::SideInterior => {
                card_h += 1;
                h += k;
            }
            VertexClass::Corner => {
                hbar += k;
                corners += 1;
            }
        }
    }
    let got = f + h + hbar;
    if got != n * q {
        return Err(IncidenceError::CensusMismatch { got, expected: n * q });
    }
    let delta = f + h + hbar - 3 * card_f - 2 * card_h - corners;
    Ok(CountingSummary { q, n, card_f, card_h, f, h, hbar, delta })
}

/// `(2|ℱ| + |ℋ| + 2) / (F + H + ħ) = (q − 2)/q`, exactly.
pub fn check_ratio_identity(s: &CountingSummary) -> bool {
    let total = s.f + s.h + s.hbar;
    if total == 0 || s.q == 0 {
        return false;
    }
    let lhs: Rational = rat(2 * s.card_f + s.card_h + 2, total);
    lhs == rat(s.q - 2, s.q)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "camelCase")]
pub enum LinearIdentity {
    Holds,
    Violation { lhs: i64 },
}

/// `(q − 6)|ℱ| + (q − 4)|ℋ| + (q − 2)Δ + 2q = 8`.
pub fn linear_identity_lhs(s: &CountingSummary) -> i64 {
    (s.q - 6) * s.card_f + (s.q - 4) * s.card_h + (s.q - 2) * s.delta + 2 * s.q
}

pub fn check_linear_identity(s: &CountingSummary) -> LinearIdentity {
    match linear_identity_lhs(s) {
        8 => LinearIdentity::Holds,
        lhs => LinearIdentity::Violation { lhs },
    }
}

/// Least value of the linear identity's left side over nonnegative
/// `|ℱ|, |ℋ|, Δ` when `q ≥ 6`: every coefficient is nonnegative, so it is
/// `2q`, which exceeds 8.
pub fn six_gon_obstruction(q: i64) -> Result<i64, IncidenceError> {
    if q < 6 {
        return Err(IncidenceError::QTooSmall(q));
    }
    Ok(2 * q)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum TotalAngle {
    Right,
    Straight,
    Full,
}

impl TotalAngle {
    pub const ALL: [TotalAngle; 3] = [TotalAngle::Right, TotalAngle::Straight, TotalAngle::Full];

    pub fn pi_multiple(self) -> Rational {
        match self {
            TotalAngle::Right => rat(1, 2),
            TotalAngle::Straight => int(1),
            TotalAngle::Full => int(2),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VDecomposition {
    pub sum: Option<TotalAngle>,
    /// α as a multiple of π, when the total can only be reached for one α.
    #[serde(rename = "forcedAlpha", serialize_with = "ser_opt_rat")]
    pub forced_alpha: Option<Rational>,
}

fn ser_opt_rat<S: serde::Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(r) => s.serialize_some(&crate::exactnum::rational::fmt_rational(r)),
        None => s.serialize_none(),
    }
}

/// Which vertex total `a·α + b·β + c·(π/2)` can equal. With α generic and
/// `a ≠ b` the total pins α down; only solutions with `0 < α < π/2` count.
pub fn v_decomposition_classify(counts: (i64, i64, i64), mode: AngleMode) -> VDecomposition {
    let (a, b, c) = counts;
    let angle = ExactAngle::new(a - b, 2 * b + c);
    match mode {
        AngleMode::BoundAlpha { .. } => {
            let v = angle.pi_multiple(mode).expect("bound");
            VDecomposition { sum: TotalAngle::ALL.into_iter().find(|t| t.pi_multiple() == v), forced_alpha: None }
        }
        AngleMode::GenericAlpha => {
            let fixed = rat(angle.right, 2);
            if angle.alpha == 0 {
                return VDecomposition {
                    sum: TotalAngle::ALL.into_iter().find(|t| t.pi_multiple() == fixed),
                    forced_alpha: None,
                };
            }
            for t in TotalAngle::ALL {
                let alpha = (t.pi_multiple() - &fixed) / int(angle.alpha);
                if alpha > int(0) && alpha < rat(1, 2) {
                    return VDecomposition { sum: Some(t), forced_alpha: Some(alpha) };
                }
            }
            VDecomposition { sum: None, forced_alpha: None }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn grid_centre_and_midpoints() {
        let inc = build_incidence(&catalog::unit_grid(2, 2)).unwrap();
        let centre = inc.iter().find(|v| v.w == Point::from_ints(1, 1, 1)).unwrap();
        assert_eq!(centre.class, VertexClass::Interior);
        assert_eq!(centre.angles, vec![ExactAngle::RIGHT; 4]);
        // clockwise from +x: the lower-right square comes first
        assert_eq!(centre.tiles, vec![1, 0, 2, 3]);
        let mid = inc.iter().find(|v| v.w == Point::from_ints(1, 0, 1)).unwrap();
        assert_eq!((mid.class, mid.degree()), (VertexClass::Boundary, 2));
    }

    #[test]
    fn grid_census() {
        let inc = build_incidence(&catalog::unit_grid(2, 2)).unwrap();
        let s = counting_summary(&inc, 4, 4).unwrap();
        assert_eq!((s.card_f, s.card_h, s.f, s.h, s.hbar, s.delta), (1, 4, 4, 8, 4, 1));
        assert!(check_ratio_identity(&s));
        assert_eq!(check_linear_identity(&s), LinearIdentity::Holds);
        let bad = CountingSummary { card_f: s.card_f + 1, ..s };
        assert!(!check_ratio_identity(&bad));
    }

    #[test]
    fn single_square_census() {
        let inc = build_incidence(&catalog::unit_grid(1, 1)).unwrap();
        let s = counting_summary(&inc, 4, 1).unwrap();
        assert_eq!((s.card_f, s.card_h, s.f, s.h, s.hbar, s.delta), (0, 0, 0, 0, 4, 0));
        assert!(check_ratio_identity(&s));
        assert_eq!(check_linear_identity(&s), LinearIdentity::Holds);
    }

    #[test]
    fn pair_census() {
        let inc = build_incidence(&catalog::trapezoid_pair()).unwrap();
        assert_eq!(inc.iter().filter(|v| v.class == VertexClass::Corner).count(), 4);
        let s = counting_summary(&inc, 4, 2).unwrap();
        assert_eq!((s.card_f, s.card_h, s.f, s.h, s.hbar, s.delta), (0, 2, 0, 4, 4, 0));
        assert!(check_ratio_identity(&s));
        assert_eq!(check_linear_identity(&s), LinearIdentity::Holds);
    }

    #[test]
    fn hexagon_identity_cannot_hold() {
        let s = CountingSummary { q: 6, n: 1, card_f: 0, card_h: 0, f: 0, h: 0, hbar: 0, delta: 0 };
        assert_eq!(check_linear_identity(&s), LinearIdentity::Violation { lhs: 12 });
        assert_eq!(six_gon_obstruction(6).unwrap(), 12);
        assert_eq!(six_gon_obstruction(7).unwrap(), 14);
        assert_eq!(six_gon_obstruction(100).unwrap(), 200);
        assert!(six_gon_obstruction(5).is_err());
    }

    #[test]
    fn basket_weave_has_hanging_vertices() {
        let t = catalog::basket_weave(2, 2);
        let inc = build_incidence(&t).unwrap();
        assert!(inc.iter().any(|v| v.class == VertexClass::SideInterior));
        let s = counting_summary(&inc, 4, t.len() as i64).unwrap();
        assert!(s.delta >= 0);
        assert!(check_ratio_identity(&s));
        assert_eq!(check_linear_identity(&s), LinearIdentity::Holds);
    }

    #[test]
    fn v_decomposition_examples() {
        let g = AngleMode::GenericAlpha;
        let r = v_decomposition_classify((0, 3, 0), g);
        assert_eq!((r.sum, r.forced_alpha), (Some(TotalAngle::Full), Some(rat(1, 3))));
        let r = v_decomposition_classify((0, 2, 1), g);
        assert_eq!((r.sum, r.forced_alpha), (Some(TotalAngle::Full), Some(rat(1, 4))));
        for mode in [g, AngleMode::BoundAlpha { p: 1, q: 3 }, AngleMode::BoundAlpha { p: 1, q: 4 }] {
            let r = v_decomposition_classify((1, 1, 0), mode);
            assert_eq!((r.sum, r.forced_alpha), (Some(TotalAngle::Straight), None));
        }
    }
}
