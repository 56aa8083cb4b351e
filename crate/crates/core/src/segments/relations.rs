use super::{extract_maximal_segments, MaximalSegment, SegmentError, SegmentSide};
use crate::exactnum::rational::{int, Rational};
use crate::exactnum::QuadraticNumber;
use crate::geometry::{Prototile, SideKind};
use crate::tiling::Tiling;
use num_traits::{Signed, Zero};
use serde::Serialize;

type Qn = QuadraticNumber;

/// `a·x + b·(x+1) + c·√3 + d·2 = 0`, as differences of side counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct SideRelation {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl SideRelation {
    pub fn is_zero(&self) -> bool {
        *self == SideRelation::default()
    }

    /// Coefficient of x; zero means the relation says nothing about x.
    pub fn x_coefficient(&self) -> i64 {
        self.a + self.b
    }

    fn counts(seq: &[SegmentSide]) -> SideRelation {
        let mut r = SideRelation::default();
        for s in seq {
            match s.kind {
                SideKind::Short => r.a += 1,
                SideKind::Long => r.b += 1,
                SideKind::Leg => r.c += 1,
                SideKind::Hypotenuse => r.d += 1,
                SideKind::Plain => {}
            }
        }
        r
    }

    fn minus(self, o: SideRelation) -> SideRelation {
        SideRelation { a: self.a - o.a, b: self.b - o.b, c: self.c - o.c, d: self.d - o.d }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase", tag = "kind", content = "segment")]
pub enum RelationSource {
    /// Upper minus lower sequence of an interior maximal segment.
    Interior(usize),
    /// Bottom side minus top side of the region.
    BottomTop,
    /// Left side minus right side of the region.
    LeftRight,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledRelation {
    pub source: RelationSource,
    pub relation: SideRelation,
}

/// One relation per interior maximal segment, then the two relations from
/// identifying opposite sides of the region.
pub fn boundary_identified_relations(t: &Tiling) -> Result<Vec<LabeledRelation>, SegmentError> {
    if !t.prototile().is_trapezoid() {
        return Err(SegmentError::WrongPrototile);
    }
    Ok(relations_of(t, &extract_maximal_segments(t)))
}

pub(crate) fn relations_of(t: &Tiling, segs: &[MaximalSegment]) -> Vec<LabeledRelation> {
    let region = t.region();
    let mut out = Vec::new();
    let (mut bottom, mut top, mut left, mut right) = Default::default();
    for (i, m) in segs.iter().enumerate() {
        if !m.boundary {
            let relation = SideRelation::counts(&m.upper).minus(SideRelation::counts(&m.lower));
            out.push(LabeledRelation { source: RelationSource::Interior(i), relation });
            continue;
        }
        let target: &mut SideRelation = if m.u.y.is_zero() && m.v.y.is_zero() {
            &mut bottom
        } else if m.u.y == region.height && m.v.y == region.height {
            &mut top
        } else if m.u.x.is_zero() {
            &mut left
        } else {
            &mut right
        };
        let c = SideRelation::counts(if m.upper.is_empty() { &m.lower } else { &m.upper });
        *target = SideRelation { a: target.a + c.a, b: target.b + c.b, c: target.c + c.c, d: target.d + c.d };
    }
    out.push(LabeledRelation { source: RelationSource::BottomTop, relation: bottom.minus(top) });
    out.push(LabeledRelation { source: RelationSource::LeftRight, relation: left.minus(right) });
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase", tag = "status")]
pub enum SolveX {
    /// `x = r + s√3`.
    Solved {
        #[serde(with = "crate::exactnum::rational::serde_pair")]
        r: Rational,
        #[serde(with = "crate::exactnum::rational::serde_pair")]
        s: Rational,
    },
    /// Every relation has `a + b = 0`.
    AllDegenerate,
    /// Two relations determine different values.
    Contradiction { first: usize, second: usize },
}

/// Solve each relation with `a + b ≠ 0` for `x = r + s√3` and check that they
/// agree.
pub fn solve_x(relations: &[SideRelation]) -> SolveX {
    let mut found: Option<(usize, Rational, Rational)> = None;
    for (i, rel) in relations.iter().enumerate() {
        let k = rel.x_coefficient();
        if k == 0 {
            continue;
        }
        let r = -int(rel.b + 2 * rel.d) / int(k);
        let s = -int(rel.c) / int(k);
        match &found {
            None => found = Some((i, r, s)),
            Some((j, r0, s0)) => {
                if *r0 != r || *s0 != s {
                    return SolveX::Contradiction { first: *j, second: i };
                }
            }
        }
    }
    match found {
        Some((_, r, s)) => SolveX::Solved { r, s },
        None => SolveX::AllDegenerate,
    }
}

/// The two rational equations from `N · area(x) = side²` in `ℚ(√3)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AreaConstraint {
    pub s_positive: bool,
    #[serde(rename = "A", with = "crate::exactnum::rational::serde_pair")]
    pub a: Rational,
    #[serde(rename = "B", with = "crate::exactnum::rational::serde_pair")]
    pub b: Rational,
    /// `A² + 3B² = 3Ns`.
    pub rational_part: bool,
    /// `2AB = N(2r + 1)/2`.
    pub radical_part: bool,
}

impl AreaConstraint {
    pub fn holds(&self) -> bool {
        self.rational_part && self.radical_part
    }
}

fn split3(v: &Qn) -> Result<(Rational, Rational), SegmentError> {
    match v.radicand() {
        3 => Ok((v.rat().clone(), v.rad().clone())),
        1 => Ok((v.rat().clone(), Rational::zero())),
        _ => Err(SegmentError::NotInField),
    }
}

/// Check `N` trapezoids with short base `x` against a square of side `side`,
/// with `x = r + s√3` and `side = A + B√3`.
pub fn area_constraint(n: i64, x: &Qn, side: &Qn) -> Result<AreaConstraint, SegmentError> {
    let (r, s) = split3(x)?;
    let (a, b) = split3(side)?;
    let nn = int(n);
    let rational_part = &a * &a + int(3) * &b * &b == int(3) * &nn * &s;
    let radical_part = int(2) * &a * &b == &nn * (int(2) * &r + int(1)) / int(2);
    Ok(AreaConstraint { s_positive: s.is_positive(), a, b, rational_part, radical_part })
}

/// [`area_constraint`] for a π/3 trapezoid tiling of a square.
pub fn area_constraint_check(t: &Tiling) -> Result<AreaConstraint, SegmentError> {
    let Prototile::RightTrapezoid { x, p: 1, q: 3 } = t.prototile() else {
        return Err(if t.prototile().is_trapezoid() { SegmentError::NeedsPiOverThree } else { SegmentError::WrongPrototile });
    };
    if !t.region().is_square() {
        return Err(SegmentError::NotSquare);
    }
    area_constraint(t.len() as i64, x, &t.region().width)
}

/// Non-negative integers with `(a+b)·x + b + c·√3` a positive even integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pure2Witness {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub value: i64,
}

/// The first witness `(a, b, c)` in lexicographic order with every entry at
/// most `bound`, or `None`.
pub fn pure2_check(x: &Qn, bound: i64) -> Result<Option<Pure2Witness>, SegmentError> {
    let (r, s) = split3(x)?;
    for a in 0..=bound {
        for b in 0..=bound {
            // The radical part (a+b)s + c must vanish, fixing c.
            let c = -(int(a + b) * &s);
            if !c.is_integer() || c.is_negative() || c > int(bound) {
                continue;
            }
            let v = int(a + b) * &r + int(b);
            if v.is_integer() && v.is_positive() && (v.to_integer() % 2u32).is_zero() {
                let value = i64::try_from(v.to_integer()).unwrap_or(i64::MAX);
                let c = i64::try_from(c.to_integer()).unwrap_or(i64::MAX);
                return Ok(Some(Pure2Witness { a, b, c, value }));
            }
        }
    }
    Ok(None)
}
