//! Exact verification that the tiles cover the region without overlap.

use super::Tiling;
use crate::geometry::{
    convex_intersection_area, locate_convex, split_convex, vertex_centroid, Location, Point, Segment,
};
use crate::par;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum FailureKind {
    Overlap { i: usize, j: usize },
    Gap { witness: Point },
    OutOfRegion { i: usize },
    AreaMismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    #[serde(flatten)]
    pub kind: FailureKind,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub failures: Vec<Failure>,
}

impl ValidationReport {
    pub fn has(&self, pred: impl Fn(&FailureKind) -> bool) -> bool {
        self.failures.iter().any(|f| pred(&f.kind))
    }
}

/// Decide whether `t` is a dissection of its region: areas add up, no two
/// tiles share interior, every tile stays inside, and every face of the
/// arrangement of tile-edge lines lies in exactly one tile.
pub fn validate(t: &Tiling) -> ValidationReport {
    let mut failures = Vec::new();
    let n = t.len();

    let total = t.prototile().area().scale(&crate::exactnum::rational::int(n as i64));
    let region_area = t.region().area();
    if total != region_area {
        failures.push(Failure {
            kind: FailureKind::AreaMismatch,
            detail: format!("tiles cover {total}, region has area {region_area}"),
        });
    }

    let region = t.region();
    for (i, img) in t.images().iter().enumerate() {
        if let Some(p) = img.points.iter().find(|p| !region.contains(p)) {
            failures.push(Failure {
                kind: FailureKind::OutOfRegion { i },
                detail: format!("vertex {p} of tile {i} lies outside the region"),
            });
        }
    }

    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let overlaps = par::map(&pairs, |&(i, j)| {
        let a = convex_intersection_area(&t.image(i).points, &t.image(j).points);
        (!a.is_zero()).then(|| Failure {
            kind: FailureKind::Overlap { i, j },
            detail: format!("tiles {i} and {j} share area {a}"),
        })
    });
    failures.extend(overlaps.into_iter().flatten());

    for cell in arrangement_cells(t) {
        let w = vertex_centroid(&cell);
        let covering: Vec<usize> =
            (0..n).filter(|&i| locate_convex(&t.image(i).points, &w) == Location::Inside).collect();
        match covering.len() {
            1 => {}
            0 => failures.push(Failure {
                kind: FailureKind::Gap { witness: w.clone() },
                detail: format!("{w} is covered by no tile"),
            }),
            _ => {
                let (i, j) = (covering[0], covering[1]);
                if !failures.iter().any(|f| f.kind == FailureKind::Overlap { i, j }) {
                    failures.push(Failure {
                        kind: FailureKind::Overlap { i, j },
                        detail: format!("{w} is covered by tiles {covering:?}"),
                    });
                }
            }
        }
    }

    ValidationReport { valid: failures.is_empty(), failures }
}

/// Distinct lines through tile edges, each as (point, direction).
pub(crate) fn edge_lines(t: &Tiling) -> Vec<(Point, Point)> {
    let mut lines: Vec<(Point, Point)> = Vec::new();
    for img in t.images() {
        for k in 0..img.len() {
            let s: Segment = img.side(k);
            let dir = s.vector();
            let known = lines.iter().any(|(p, d)| {
                crate::geometry::cross(d, &dir).is_zero() && crate::geometry::cross(d, &(&s.a - p)).is_zero()
            });
            if !known {
                lines.push((s.a, dir));
            }
        }
    }
    lines
}

/// Faces of the arrangement of tile-edge lines inside the region, as convex
/// polygons. Every face lies inside a single tile or outside all tiles.
pub(crate) fn arrangement_cells(t: &Tiling) -> Vec<Vec<Point>> {
    let mut cells = vec![t.region().corners()];
    for (p, dir) in edge_lines(t) {
        let mut next = Vec::with_capacity(cells.len() * 2);
        for c in cells {
            let (l, r) = split_convex(&c, &p, &dir);
            next.extend(l);
            next.extend(r);
        }
        cells = next;
    }
    cells
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exactnum::QuadraticNumber as Qn;
    use crate::geometry::{Isometry, Point, Prototile};
    use crate::tiling::Region;

    #[test]
    fn pair_is_valid() {
        assert!(validate(&catalog::trapezoid_pair()).valid);
    }

    #[test]
    fn stacked_squares_overlap() {
        let one = Qn::one(1);
        let proto = Prototile::rectangle(one.clone(), one.clone()).unwrap();
        let t = Tiling::with_default_mode(
            proto,
            Region::square(one).unwrap(),
            vec![Isometry::identity(1), Isometry::identity(1)],
        )
        .unwrap();
        let r = validate(&t);
        assert!(!r.valid);
        assert!(r.has(|k| *k == FailureKind::Overlap { i: 0, j: 1 }));
        assert!(r.has(|k| *k == FailureKind::AreaMismatch));
    }

    #[test]
    fn lone_square_leaves_a_gap() {
        let one = Qn::one(1);
        let proto = Prototile::rectangle(one.clone(), one).unwrap();
        let t = Tiling::with_default_mode(proto, Region::square(Qn::from_int(2, 1)).unwrap(), vec![Isometry::identity(1)])
            .unwrap();
        let r = validate(&t);
        assert!(r.has(|k| *k == FailureKind::AreaMismatch));
        assert!(r.has(|k| matches!(k, FailureKind::Gap { .. })));
        assert!(!r.has(|k| matches!(k, FailureKind::Overlap { .. })));
    }

    #[test]
    fn shifted_tile_is_out_of_region() {
        let t = catalog::unit_grid(2, 1);
        let mut isos = t.isometries();
        isos[1] = Isometry::new(0, false, Point::from_ints(2, 0, 1));
        let moved = Tiling::new(t.prototile().clone(), t.region().clone(), isos, t.angle_mode()).unwrap();
        let r = validate(&moved);
        assert!(r.has(|k| *k == FailureKind::OutOfRegion { i: 1 }));
        assert!(r.has(|k| matches!(k, FailureKind::Gap { .. })));
    }

    #[test]
    fn verdict_is_permutation_invariant() {
        let t = catalog::basket_weave(2, 2);
        let n = t.len();
        let rev: Vec<usize> = (0..n).rev().collect();
        assert_eq!(validate(&t).valid, validate(&t.permuted(&rev)).valid);
    }

    #[test]
    fn square_symmetries_preserve_validity() {
        for t in [catalog::trapezoid_pair(), catalog::two_pairs_pi3()] {
            for g in Isometry::group(3).into_iter().filter(|g| g.rotation % 3 == 0) {
                assert!(validate(&t.transformed(&g)).valid);
            }
        }
    }
}
