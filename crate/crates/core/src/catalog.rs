//! Hand-built tilings used as fixtures, examples and generators.

use crate::exactnum::rational::{int, rat};
use crate::exactnum::{AngleMode, QuadraticNumber};
use crate::geometry::{rotation_order, Isometry, Point, Prototile};
use crate::tiling::{Region, Tiling};

type Qn = QuadraticNumber;

pub const PI_OVER_3: AngleMode = AngleMode::BoundAlpha { p: 1, q: 3 };
pub const PI_OVER_4: AngleMode = AngleMode::BoundAlpha { p: 1, q: 4 };

fn translate(x: Qn, y: Qn) -> Isometry {
    Isometry::new(0, false, Point::new(x, y))
}

/// `m × n` grid of unit squares (field ℚ).
pub fn unit_grid(m: usize, n: usize) -> Tiling {
    rect_grid(m, n, 1)
}

/// `m × n` grid of unit squares in the field `ℚ(√d)`.
pub fn rect_grid(m: usize, n: usize, d: u32) -> Tiling {
    let one = Qn::one(d);
    let proto = Prototile::rectangle(one.clone(), one).unwrap();
    let region = Region::new(Qn::from_int(m as i64, d), Qn::from_int(n as i64, d)).unwrap();
    let isos = (0..n)
        .flat_map(|j| (0..m).map(move |i| (i, j)))
        .map(|(i, j)| translate(Qn::from_int(i as i64, d), Qn::from_int(j as i64, d)))
        .collect();
    Tiling::with_default_mode(proto, region, isos).unwrap()
}

/// Basket weave of `1 × 2` bricks: a `m × n` checkerboard of `2 × 2` blocks,
/// each holding two parallel bricks, alternately horizontal and vertical.
pub fn basket_weave(m: usize, n: usize) -> Tiling {
    let d = 1;
    let q = |v: i64| Qn::from_int(v, d);
    let proto = Prototile::rectangle(q(2), q(1)).unwrap();
    let region = Region::new(q(2 * m as i64), q(2 * n as i64)).unwrap();
    let mut isos = Vec::new();
    for j in 0..n as i64 {
        for i in 0..m as i64 {
            let (x0, y0) = (2 * i, 2 * j);
            if (i + j) % 2 == 0 {
                isos.push(translate(q(x0), q(y0)));
                isos.push(translate(q(x0), q(y0 + 1)));
            } else {
                // quarter turn maps [0,2]×[0,1] onto [−1,0]×[0,2]
                isos.push(Isometry::new(1, false, Point::new(q(x0 + 1), q(y0))));
                isos.push(Isometry::new(1, false, Point::new(q(x0 + 2), q(y0))));
            }
        }
    }
    Tiling::with_default_mode(proto, region, isos).unwrap()
}

/// Rows of `1 × 2` bricks with every other row built from pairs of vertical
/// bricks, in a `2m × 2n` region.
pub fn brick_rows(m: usize, n: usize) -> Tiling {
    let d = 1;
    let q = |v: i64| Qn::from_int(v, d);
    let proto = Prototile::rectangle(q(2), q(1)).unwrap();
    let region = Region::new(q(2 * m as i64), q(2 * n as i64)).unwrap();
    let mut isos = Vec::new();
    for j in 0..n as i64 {
        let y0 = 2 * j;
        for i in 0..m as i64 {
            if j % 2 == 0 {
                isos.push(translate(q(2 * i), q(y0)));
                isos.push(translate(q(2 * i), q(y0 + 1)));
            } else {
                isos.push(Isometry::new(1, false, Point::new(q(2 * i + 1), q(y0))));
                isos.push(Isometry::new(1, false, Point::new(q(2 * i + 2), q(y0))));
            }
        }
    }
    Tiling::with_default_mode(proto, region, isos).unwrap()
}

/// `(√3 − 1)/2`: the short base for which two α = π/3 trapezoids glued along
/// their slanted sides form a square of side √3.
pub fn pair_x() -> Qn {
    Qn::new(rat(-1, 2), rat(1, 2), 3)
}

/// Isometries of two trapezoids glued along the slanted side into a
/// `(2x + 2cos α) × 2sin α` rectangle with lower-left corner at the origin.
pub fn pair_isometries(proto: &Prototile) -> Vec<Isometry> {
    let v = proto.vertices();
    let d = proto.radicand();
    // width = x + (x + 2cos α) = coordinate of a plus the short base
    let width = &v[2].x + &v[1].x;
    let height = v[3].y.clone();
    let half = Isometry::new(rotation_order(d) / 2, false, Point::new(width, height));
    vec![Isometry::identity(d), half]
}

/// The N = 2 tiling of the √3 × √3 square by two α = π/3 trapezoids.
pub fn trapezoid_pair() -> Tiling {
    let proto = Prototile::trapezoid(pair_x(), PI_OVER_3).unwrap();
    let region = Region::square(Qn::sqrt_d(3)).unwrap();
    let isos = pair_isometries(&proto);
    Tiling::new(proto, region, isos, PI_OVER_3).unwrap()
}

/// Two pairs (x = (2√3 − 1)/2, each a 2√3 × √3 rectangle) stacked into the
/// 2√3 square.
pub fn two_pairs_pi3() -> Tiling {
    let x = Qn::new(rat(-1, 2), int(1), 3);
    let proto = Prototile::trapezoid(x, PI_OVER_3).unwrap();
    stacked_pairs(proto, PI_OVER_3, 2)
}

fn stacked_pairs(proto: Prototile, mode: AngleMode, count: usize) -> Tiling {
    let d = proto.radicand();
    let v = proto.vertices();
    let width = &v[2].x + &v[1].x;
    let height = v[3].y.clone();
    let region = Region::new(width, height.scale(&int(count as i64))).unwrap();
    let pair = pair_isometries(&proto);
    let isos = (0..count)
        .flat_map(|k| {
            let shift = translate(Qn::zero(d), height.scale(&int(k as i64)));
            pair.iter().map(move |g| shift.compose(g)).collect::<Vec<_>>()
        })
        .collect();
    Tiling::new(proto, region, isos, mode).unwrap()
}

/// `√2/2`: with α = π/4 a glued pair is a `2√2 × √2` rectangle.
pub fn pi4_x() -> Qn {
    Qn::new(int(0), rat(1, 2), 2)
}

/// One α = π/4 pair filling its `2√2 × √2` rectangle.
pub fn pi4_pair_rectangle() -> Tiling {
    let proto = Prototile::trapezoid(pi4_x(), PI_OVER_4).unwrap();
    stacked_pairs(proto, PI_OVER_4, 1)
}

/// Two α = π/4 pairs stacked into the 2√2 square.
pub fn pi4_pairs_square() -> Tiling {
    let proto = Prototile::trapezoid(pi4_x(), PI_OVER_4).unwrap();
    stacked_pairs(proto, PI_OVER_4, 2)
}

/// `k × k` grid of √3-squares, each filled by a glued α = π/3 pair, either
/// upright (`false`) or turned a quarter (`true`). `turned` is read row by row.
pub fn pair_square_grid(k: usize, turned: &[bool]) -> Tiling {
    assert_eq!(turned.len(), k * k);
    let proto = Prototile::trapezoid(pair_x(), PI_OVER_3).unwrap();
    let s3 = Qn::sqrt_d(3);
    let region = Region::square(s3.scale(&int(k as i64))).unwrap();
    let pair = pair_isometries(&proto);
    // quarter turn about the centre of [0,√3]²
    let quarter = Isometry::new(3, false, Point::new(s3.clone(), Qn::zero(3)));
    let mut isos = Vec::new();
    for j in 0..k {
        for i in 0..k {
            let shift = translate(s3.scale(&int(i as i64)), s3.scale(&int(j as i64)));
            for g in &pair {
                let g = if turned[j * k + i] { quarter.compose(g) } else { g.clone() };
                isos.push(shift.compose(&g));
            }
        }
    }
    Tiling::new(proto, region, isos, PI_OVER_3).unwrap()
}

/// A strictly convex hexagon of area 5 with integer vertices.
pub fn hexagon() -> Prototile {
    let p = |x, y| Point::from_ints(x, y, 2);
    Prototile::convex(vec![p(0, 0), p(2, 0), p(3, 1), p(3, 2), p(1, 2), p(0, 1)]).unwrap()
}

/// Named tilings written to the `fixtures/` directory.
pub fn fixtures() -> Vec<(&'static str, Tiling)> {
    vec![
        ("grid1x1", unit_grid(1, 1)),
        ("grid2x2", unit_grid(2, 2)),
        ("grid3x2", unit_grid(3, 2)),
        ("basket2x2", basket_weave(2, 2)),
        ("bricks2x3", brick_rows(2, 3)),
        ("pair", trapezoid_pair()),
        ("two_pairs", two_pairs_pi3()),
        ("pair_grid2", pair_square_grid(2, &[true, false, false, false])),
        ("pi4_pair", pi4_pair_rectangle()),
        ("pi4_square", pi4_pairs_square()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::validate;

    #[test]
    fn catalog_tilings_are_valid() {
        let mut all = vec![
            unit_grid(1, 1),
            unit_grid(2, 2),
            unit_grid(3, 5),
            basket_weave(2, 2),
            basket_weave(3, 2),
            brick_rows(2, 3),
            trapezoid_pair(),
            two_pairs_pi3(),
            pi4_pair_rectangle(),
            pi4_pairs_square(),
        ];
        all.push(pair_square_grid(2, &[false, true, true, false]));
        for t in &all {
            let r = validate(t);
            assert!(r.valid, "{:?}", r.failures);
        }
    }

    #[test]
    fn pair_is_hypotenuse_glued() {
        let t = trapezoid_pair();
        let a = crate::geometry::Corner::A;
        let b = crate::geometry::Corner::B;
        let ia = t.prototile().corner_index(a).unwrap();
        let ib = t.prototile().corner_index(b).unwrap();
        assert_eq!(t.image(0).vertex_of(ia), t.image(1).vertex_of(ib));
        assert_eq!(t.image(0).vertex_of(ib), t.image(1).vertex_of(ia));
    }
}
