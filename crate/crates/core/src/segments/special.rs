use super::{extract_maximal_segments, half_maximal_from, HalfMaximalSegment, MaximalSegment, SegmentError, SegmentSide};
use crate::exactnum::{ExactAngle, QuadraticNumber};
use crate::geometry::{cross, rotation_entries, Direction, Orientation, Point, Prototile, SideKind};
use crate::hgraph::{build_hgraph, degree_balance, PatternSymbol};
use crate::incidence::{collect_incidence, VertexClass, VertexIncidence};
use crate::par;
use crate::tiling::Tiling;
use serde::Serialize;
use std::collections::BTreeSet;

type Qn = QuadraticNumber;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Delta {
    Upper,
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Theta {
    #[serde(rename = "α")]
    Alpha,
    #[serde(rename = "β")]
    Beta,
}

/// The head `(u, x, δ, θ)` of a special segment: its start, unit direction,
/// the side whose first length is 2, and that tile's angle at `u`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct HeadInformation {
    pub u: Point,
    pub x: Point,
    pub delta: Delta,
    pub theta: Theta,
}

/// A special half-maximal segment with its head.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialSegment {
    pub segment: HalfMaximalSegment,
    pub head: HeadInformation,
}

fn lift3(p: &Point) -> Option<Point> {
    let lift = |q: &Qn| match q.radicand() {
        3 => Some(q.clone()),
        1 => Some(Qn::new(q.rat().clone(), q.rad().clone(), 3)),
        _ => None,
    };
    Some(Point::new(lift(&p.x)?, lift(&p.y)?))
}

/// Rotate by `k·π/6` in `ℚ(√3)`.
fn rotate(p: &Point, k: u32) -> Point {
    let (c, s) = rotation_entries(k % 12, 3);
    Point::new(&c * &p.x - &s * &p.y, &s * &p.x + &c * &p.y)
}

fn unit(v: &Point) -> Option<Point> {
    let n = v.norm2().sqrt()?;
    Some(v.scale(&n.inverse().ok()?))
}

/// `u ≺ v` in the frame `x`: `v − u = a·x + b·ω²x` with `a, b ≥ 0` not both
/// zero, where `ω = e^{2πi/3}`.
pub fn prec(u: &Point, v: &Point, x: &Point) -> bool {
    let (Some(u), Some(v), Some(x)) = (lift3(u), lift3(v), lift3(x)) else {
        return false;
    };
    let y = rotate(&x, 8);
    let w = &v - &u;
    let det = cross(&x, &y);
    if det.is_zero() || w.is_zero() {
        return false;
    }
    // Cramer's rule; only the signs of a and b relative to det matter.
    let a = cross(&w, &y);
    let b = cross(&x, &w);
    let same = |q: &Qn| q.is_zero() || q.is_positive() == det.is_positive();
    same(&a) && same(&b)
}

/// The chain frame of a head: the direction an upper head would carry.
fn frame(h: &HeadInformation) -> Point {
    match (h.delta, h.theta) {
        (Delta::Upper, _) => h.x.clone(),
        (Delta::Lower, Theta::Beta) => rotate(&h.x, 8),
        (Delta::Lower, Theta::Alpha) => rotate(&h.x, 10),
    }
}

/// Reference direction for `≺` along a chain through `h`.
fn reference(h: &HeadInformation) -> Point {
    rotate(&frame(h), 4)
}

fn tile_angle_at(t: &Tiling, tile: usize, p: &Point) -> Option<ExactAngle> {
    let img = t.image(tile);
    let i = img.points.iter().position(|q| q == p)?;
    let angles = t.prototile().angles().ok()?;
    Some(angles[img.proto_index[i]])
}

fn theta_of(a: Option<ExactAngle>) -> Option<Theta> {
    match PatternSymbol::of(a?) {
        PatternSymbol::Alpha => Some(Theta::Alpha),
        PatternSymbol::Beta => Some(Theta::Beta),
        PatternSymbol::Right => None,
    }
}

fn head_of(t: &Tiling, segs: &[MaximalSegment], hm: &HalfMaximalSegment) -> Option<HeadInformation> {
    if segs[hm.parent].boundary {
        return None;
    }
    let (a1, b1) = (hm.upper.first()?, hm.lower.first()?);
    if a1.from != hm.u || b1.from != hm.u || a1.is_two() == b1.is_two() {
        return None;
    }
    let (delta, side) = if a1.is_two() { (Delta::Upper, a1) } else { (Delta::Lower, b1) };
    let theta = theta_of(tile_angle_at(t, side.tile, &hm.u))?;
    Some(HeadInformation { u: hm.u.clone(), x: unit(&(&hm.v - &hm.u))?, delta, theta })
}

/// The head of the special segment starting at `u` along `dir`, if special.
pub fn head_at(t: &Tiling, segs: &[MaximalSegment], u: &Point, dir: &Point) -> Option<HeadInformation> {
    head_of(t, segs, &half_maximal_from(segs, u, dir)?)
}

/// Heads of all special segments starting at `u`, counterclockwise from the
/// positive x-axis.
pub fn heads_from(t: &Tiling, segs: &[MaximalSegment], u: &Point) -> Vec<HeadInformation> {
    let mut dirs: Vec<Direction> = Vec::new();
    for img in t.images() {
        if let Some(i) = img.points.iter().position(|q| q == u) {
            let n = img.len();
            for q in [&img.points[(i + 1) % n], &img.points[(i + n - 1) % n]] {
                let d = Direction::between(u, q).expect("distinct vertices");
                if !dirs.iter().any(|e| e.same_ray(&d)) {
                    dirs.push(d);
                }
            }
        }
    }
    let east = Direction::new(Qn::one(u.radicand()), Qn::zero(u.radicand())).unwrap();
    let key = |d: &Direction| (d.same_ray(&east), d.clone());
    dirs.sort_by(|a, b| {
        let (ka, kb) = (key(a), key(b));
        kb.0.cmp(&ka.0).then_with(|| ka.1.cmp_angle(&kb.1))
    });
    dirs.iter().filter_map(|d| head_at(t, segs, u, &d.as_vector())).collect()
}

/// Every special segment of the tiling. Segments on the region boundary are
/// skipped: they have only one side sequence.
pub fn scan_special_segments(t: &Tiling) -> Vec<SpecialSegment> {
    let segs = extract_maximal_segments(t);
    let idx: Vec<usize> = (0..segs.len()).filter(|&i| !segs[i].boundary).collect();
    let found = par::map(&idx, |&i| {
        let m = &segs[i];
        let breaks: BTreeSet<Point> =
            m.upper.iter().chain(&m.lower).flat_map(|s| [s.from.clone(), s.to.clone()]).collect();
        let mut out = Vec::new();
        for u in &breaks {
            for end in [&m.v, &m.u] {
                if end == u {
                    continue;
                }
                if let Some(hm) = half_maximal_from(&segs, u, &(end - u)) {
                    if let Some(head) = head_of(t, &segs, &hm) {
                        out.push(SpecialSegment { segment: hm, head });
                    }
                }
            }
        }
        out
    });
    found.into_iter().flatten().collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum ThreeBetaKind {
    /// All three tiles have the same orientation.
    Pinwheel,
    /// Orientations are mixed.
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThreeBeta {
    pub w: Point,
    pub tiles: Vec<usize>,
    pub kind: ThreeBetaKind,
}

/// Interior vertices with angle pattern `(β, β, β)`.
pub fn find_3beta_vertices(t: &Tiling, inc: &[VertexIncidence]) -> Vec<ThreeBeta> {
    inc.iter()
        .filter(|v| {
            v.class == VertexClass::Interior
                && v.angles.len() == 3
                && v.angles.iter().all(|&a| PatternSymbol::of(a) == PatternSymbol::Beta)
        })
        .map(|v| {
            let o: Vec<Option<Orientation>> = v.tiles.iter().map(|&j| t.orientation(j).ok()).collect();
            let kind = if o.iter().all(|x| *x == o[0]) { ThreeBetaKind::Pinwheel } else { ThreeBetaKind::Mixed };
            ThreeBeta { w: v.w.clone(), tiles: v.tiles.clone(), kind }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase", tag = "step")]
pub enum ChainStep {
    /// The next head, reached by turning at `turn`.
    Next { head: HeadInformation, turn: Point },
    /// The configuration forces a forbidden pattern.
    Contradiction { at: Point, reason: String, tiles: Vec<usize> },
    /// The local configuration does not match any case of the argument.
    Terminated { reason: String },
}

fn terminated(reason: &str) -> ChainStep {
    ChainStep::Terminated { reason: reason.to_string() }
}

/// Follow a special segment from `head` to the next head in the chain.
pub fn chain_step(t: &Tiling, head: &HeadInformation) -> ChainStep {
    step_in(t, &extract_maximal_segments(t), head)
}

fn other_side_direction(t: &Tiling, side: &SegmentSide, at: &Point) -> Option<Point> {
    let img = t.image(side.tile);
    let n = img.len();
    let i = img.points.iter().position(|q| q == at)?;
    let (next, prev) = (&img.points[(i + 1) % n], &img.points[(i + n - 1) % n]);
    let onto = if cross(&(&side.to - &side.from), &(next - at)).is_zero() { prev } else { next };
    unit(&(onto - at))
}

fn step_in(t: &Tiling, segs: &[MaximalSegment], head: &HeadInformation) -> ChainStep {
    let Some(hm) = half_maximal_from(segs, &head.u, &head.x) else {
        return terminated("no half-maximal segment starts at the head");
    };
    let main = match head.delta {
        Delta::Upper => &hm.upper,
        Delta::Lower => &hm.lower,
    };
    if !main.first().is_some_and(|s| s.is_two() && s.from == head.u) {
        return terminated("the head does not start a side of length 2");
    }
    let Some(k) = main.iter().position(|s| !s.is_two()) else {
        return terminated("the run of length-2 sides reaches the end of the segment");
    };
    let (prev, cur) = (&main[k - 1], &main[k]);
    let u1 = cur.from.clone();
    if prev.to != u1 {
        return terminated("the side sequence has a gap");
    }
    let prev_theta = theta_of(tile_angle_at(t, prev.tile, &u1));
    if head.theta == Theta::Beta && prev_theta == Some(Theta::Beta) {
        return ChainStep::Contradiction {
            at: u1,
            reason: "a β corner ends the run of length-2 sides, leaving an α corner after it".into(),
            tiles: vec![prev.tile, cur.tile],
        };
    }
    if !matches!(cur.kind, SideKind::Short | SideKind::Long) {
        return terminated("the side after the run is neither base");
    }
    let Some(y) = other_side_direction(t, cur, &u1) else {
        return terminated("the turning tile has no corner at the turn");
    };
    let reference = reference(head);

    if head.theta == Theta::Beta && cur.kind == SideKind::Long {
        let Some(seg) = half_maximal_from(segs, &u1, &y) else {
            return terminated("no half-maximal segment after the turn");
        };
        let (d, c) = if seg.lower.first().is_some_and(|s| s.tile == cur.tile) {
            (&seg.lower, &seg.upper)
        } else if seg.upper.first().is_some_and(|s| s.tile == cur.tile) {
            (&seg.upper, &seg.lower)
        } else {
            return terminated("the turning tile does not start the next segment");
        };
        let Some(c1) = c.first() else {
            return terminated("the next segment is one-sided");
        };
        if !c1.is_two() {
            return ChainStep::Contradiction {
                at: u1,
                reason: "the side facing the turning tile's hypotenuse is not of length 2".into(),
                tiles: vec![cur.tile, c1.tile],
            };
        }
        let p = c.iter().zip(d.iter()).take_while(|(a, b)| a.is_two() && b.is_two()).count();
        if p < c.len() || p < d.len() {
            let at = c[p - 1].to.clone();
            let tiles = c.get(p).into_iter().chain(d.get(p)).map(|s| s.tile).collect();
            return ChainStep::Contradiction {
                at,
                reason: "the paired run of length-2 sides stops inside the segment".into(),
                tiles,
            };
        }
        let u2 = seg.v.clone();
        return match heads_from(t, segs, &u2)
            .into_iter()
            .find(|h| h.theta == Theta::Beta && prec(&head.u, &h.u, &reference))
        {
            Some(h) => ChainStep::Next { head: h, turn: u1 },
            None => terminated("no special β head at the end of the paired run"),
        };
    }

    let Some(next) = head_at(t, segs, &u1, &y) else {
        return terminated("the segment after the turn is not special");
    };
    if head.theta == Theta::Beta && next.theta == Theta::Alpha {
        return ChainStep::Contradiction {
            at: u1,
            reason: "a chain of β heads reaches an α head".into(),
            tiles: vec![cur.tile],
        };
    }
    if !prec(&head.u, &next.u, &reference) {
        return terminated("the next head does not increase");
    }
    ChainStep::Next { head: next, turn: u1 }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase", tag = "kind")]
pub enum ChainOutcome {
    /// The hypotenuse graph is balanced at every vertex.
    Eulerian,
    NoThreeBetaVertex,
    NoStartingHead,
    Contradiction { at: Point, reason: String, tiles: Vec<usize> },
    Terminated { reason: String },
    /// A head repeated, which an increasing chain cannot do.
    Repeated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ChainReport {
    pub start: Option<ThreeBeta>,
    pub heads: Vec<HeadInformation>,
    /// Every step increased under `≺`.
    pub increasing: bool,
    pub outcome: ChainOutcome,
}

/// Follow the chain of special segments from the first `(β, β, β)` vertex of
/// a π/3 configuration whose hypotenuse graph is unbalanced.
pub fn odd_n_obstruction_report(t: &Tiling) -> Result<ChainReport, SegmentError> {
    match t.prototile() {
        Prototile::RightTrapezoid { p: 1, q: 3, .. } => {}
        p if p.is_trapezoid() => return Err(SegmentError::NeedsPiOverThree),
        _ => return Err(SegmentError::WrongPrototile),
    }
    let report = |start, heads, outcome| ChainReport { start, heads, increasing: true, outcome };
    let g = build_hgraph(t).map_err(|_| SegmentError::WrongPrototile)?;
    if degree_balance(&g).balanced {
        return Ok(report(None, Vec::new(), ChainOutcome::Eulerian));
    }
    let inc = collect_incidence(t).map_err(|_| SegmentError::WrongPrototile)?;
    let Some(start) = find_3beta_vertices(t, &inc).into_iter().next() else {
        return Ok(report(None, Vec::new(), ChainOutcome::NoThreeBetaVertex));
    };
    let segs = extract_maximal_segments(t);
    let Some(first) = heads_from(t, &segs, &start.w).into_iter().find(|h| h.theta == Theta::Beta) else {
        return Ok(report(Some(start), Vec::new(), ChainOutcome::NoStartingHead));
    };
    let mut heads = vec![first];
    let mut seen: BTreeSet<(Point, Point, Delta, Theta)> = BTreeSet::new();
    let mut increasing = true;
    loop {
        let h = heads.last().unwrap().clone();
        if !seen.insert((h.u.clone(), h.x.clone(), h.delta, h.theta)) {
            heads.pop();
            return Ok(ChainReport { start: Some(start), heads, increasing, outcome: ChainOutcome::Repeated });
        }
        match step_in(t, &segs, &h) {
            ChainStep::Next { head, .. } => {
                increasing &= prec(&h.u, &head.u, &reference(&h));
                heads.push(head);
            }
            ChainStep::Contradiction { at, reason, tiles } => {
                let outcome = ChainOutcome::Contradiction { at, reason, tiles };
                return Ok(ChainReport { start: Some(start), heads, increasing, outcome });
            }
            ChainStep::Terminated { reason } => {
                let outcome = ChainOutcome::Terminated { reason };
                return Ok(ChainReport { start: Some(start), heads, increasing, outcome });
            }
        }
    }
}
