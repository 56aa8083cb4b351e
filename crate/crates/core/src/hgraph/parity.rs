//! Direction-class certificates that feasible cycles have even length.

use super::pairing::{decompose_feasible_cycles, pair_merge, FeasibleCycle};
use super::{angle_pattern_check, build_hgraph, HGraphError, HypotenuseGraph};
use crate::exactnum::{AngleMode, QuadraticNumber};
use crate::geometry::{direction_equiv, rotation_entries, rotation_order, Corner, Direction, Orientation, Point};
use crate::incidence::build_incidence;
use crate::par;
use crate::tiling::Tiling;
use serde::Serialize;

type Qn = QuadraticNumber;

/// Net direction-class counts of a closed cycle of unit vectors, with
/// `a + bi + (c + di)ω = 0` and `a² + b² = c² + d²` evaluated exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParityCertificate {
    /// `(a, b, c, d)`: net counts of `±1, ±i, ±ω, ±iω`.
    #[serde(rename = "classCounts")]
    pub class_counts: [i64; 4],
    pub closure: bool,
    #[serde(rename = "normEquality")]
    pub norm_equality: bool,
    pub length: usize,
    /// The frame was mirrored so that the first tile's companion vector
    /// falls in the ω classes.
    pub mirrored: bool,
}

impl ParityCertificate {
    pub fn holds(&self) -> bool {
        self.closure && self.norm_equality && self.length.is_multiple_of(2)
    }
}

fn cmul(a: &Point, b: &Point) -> Point {
    Point::new(&a.x * &b.x - &a.y * &b.y, &a.x * &b.y + &a.y * &b.x)
}

fn conj(a: &Point) -> Point {
    Point::new(a.x.clone(), -&a.y)
}

/// `e^{iα}` for a bound α that is a multiple of the field's rotation step.
fn omega(mode: AngleMode, d: u32) -> Option<Point> {
    let AngleMode::BoundAlpha { p, q } = mode else {
        return None;
    };
    let order = rotation_order(d) as i64;
    if (order * p) % (2 * q) != 0 {
        return None;
    }
    let (c, s) = rotation_entries((order * p / (2 * q)) as u32, d);
    Some(Point::new(c, s))
}

/// Class index (0 → ±1, 1 → ±i, 2 → ±ω, 3 → ±iω) and sign of a unit vector.
fn classify(z: &Point, omega: &Point) -> Option<(usize, i64)> {
    let d = z.radicand();
    let one = Point::new(Qn::one(d), Qn::zero(d));
    let i = Point::new(Qn::zero(d), Qn::one(d));
    let iw = cmul(&i, omega);
    for (k, base) in [one, i, omega.clone(), iw].iter().enumerate() {
        if z == base {
            return Some((k, 1));
        }
        if z == &-base {
            return Some((k, -1));
        }
    }
    None
}

/// Certificate for a closed cycle given its hypotenuse vectors `γ⃗ᵢ`, their
/// companions `ρ⃗ᵢ` and the tile orientations. The cycle is re-rooted at the
/// first positive tile, and the frame is the rotation taking `γ⃗₁` to `−1`
/// (mirrored if needed so that `ρ⃗₁` lies in the ω classes).
pub fn parity_certificate(
    gammas: &[Point],
    rhos: &[Point],
    orientations: &[Orientation],
    mode: AngleMode,
) -> Result<ParityCertificate, HGraphError> {
    let m = gammas.len();
    if m == 0 {
        return Ok(ParityCertificate { class_counts: [0; 4], closure: true, norm_equality: true, length: 0, mirrored: false });
    }
    let d = gammas[0].radicand();
    let w = omega(mode, d).ok_or(HGraphError::WrongAlpha { expected: "a bound multiple of the rotation step" })?;
    let root = orientations.iter().position(|&o| o == Orientation::Positive).unwrap_or(0);
    let g1 = &gammas[root];
    let n1 = g1.norm2();
    let frame = |v: &Point| -> Point {
        let z = cmul(v, &conj(g1));
        Point::new(-z.x.checked_div(&n1).unwrap(), -z.y.checked_div(&n1).unwrap())
    };
    let direct: Vec<Point> = gammas.iter().map(frame).collect();
    // ρ⃗₁ has no fixed length, so its class is tested projectively.
    let rho_class = rhos.get(root).and_then(|r| {
        let z = frame(r);
        let zd = Direction::new(z.x, z.y)?;
        Some(direction_equiv(&zd, &Direction::new(w.x.clone(), w.y.clone())?))
    });
    let mixed = orientations.contains(&Orientation::Positive) && orientations.contains(&Orientation::Negative);
    let prefer_mirror = mixed && rho_class == Some(false);
    let attempt = |mirror: bool| -> Option<[i64; 4]> {
        let mut counts = [0i64; 4];
        for z in &direct {
            let z = if mirror { conj(z) } else { z.clone() };
            let (k, s) = classify(&z, &w)?;
            counts[k] += s;
        }
        Some(counts)
    };
    let (counts, mirrored) = match attempt(prefer_mirror) {
        Some(c) => (c, prefer_mirror),
        None => match attempt(!prefer_mirror) {
            Some(c) => (c, !prefer_mirror),
            None => return Err(HGraphError::DirectionOutsideClasses { cycle: 0, edge: root }),
        },
    };
    let [a, b, c, dd] = counts;
    let q = |v: i64| Qn::from_int(v, d);
    let re = q(a) + &q(c) * &w.x - &q(dd) * &w.y;
    let im = q(b) + &q(c) * &w.y + &q(dd) * &w.x;
    Ok(ParityCertificate {
        class_counts: counts,
        closure: re.is_zero() && im.is_zero(),
        norm_equality: a * a + b * b == c * c + dd * dd,
        length: m,
        mirrored,
    })
}

/// Hypotenuse vectors `γ⃗ = φ(b) − φ(a)`, companions `ρ⃗ = φ(a) − φ(d)` and
/// orientations along a cycle.
pub fn cycle_geometry(t: &Tiling, c: &FeasibleCycle) -> Result<(Vec<Point>, Vec<Point>, Vec<Orientation>), HGraphError> {
    let proto = t.prototile();
    let idx = |k| proto.corner_index(k).ok_or(HGraphError::WrongPrototile);
    let (ia, ib, id) = (idx(Corner::A)?, idx(Corner::B)?, idx(Corner::D)?);
    let mut gammas = Vec::with_capacity(c.len());
    let mut rhos = Vec::with_capacity(c.len());
    let mut orient = Vec::with_capacity(c.len());
    for &j in &c.tiles {
        let img = t.image(j);
        gammas.push(img.vertex_of(ib) - img.vertex_of(ia));
        rhos.push(img.vertex_of(ia) - img.vertex_of(id));
        orient.push(t.orientation(j).map_err(|_| HGraphError::WrongPrototile)?);
    }
    Ok((gammas, rhos, orient))
}

/// Consecutive tiles of a cycle: differing orientations swap `γ` and `ρ`
/// up to parallel/perpendicular, equal orientations keep them.
pub fn orientation_propagation_check(gammas: &[Point], rhos: &[Point], orientations: &[Orientation]) -> bool {
    let m = gammas.len();
    let dir = |p: &Point| Direction::new(p.x.clone(), p.y.clone());
    (0..m).all(|i| {
        let j = (i + 1) % m;
        let (Some(gi), Some(gj), Some(ri), Some(rj)) = (dir(&gammas[i]), dir(&gammas[j]), dir(&rhos[i]), dir(&rhos[j]))
        else {
            return false;
        };
        if orientations[i] != orientations[j] {
            direction_equiv(&gi, &rj) && direction_equiv(&ri, &gj)
        } else {
            direction_equiv(&gi, &gj) && direction_equiv(&ri, &rj)
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleReport {
    pub length: usize,
    pub tiles: Vec<usize>,
    pub certificate: ParityCertificate,
    #[serde(rename = "orientationPropagation")]
    pub orientation_propagation: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParityReport {
    #[serde(rename = "nEven")]
    pub n_even: bool,
    pub cycles: Vec<CycleReport>,
}

/// Decompose an Eulerian hypotenuse graph into feasible cycles and certify
/// each one.
pub fn parity_theorem_check(t: &Tiling) -> Result<ParityReport, HGraphError> {
    let g = build_hgraph(t)?;
    let inc = build_incidence(t)?;
    let check = angle_pattern_check(&g, &inc);
    if !check.eulerian {
        return Err(HGraphError::NotEulerian(check.offenders.len()));
    }
    let pg = pair_merge(&g, &inc)?;
    let cycles = decompose_feasible_cycles(&pg)?;
    let reports: Vec<Result<CycleReport, HGraphError>> = par::map_range(cycles.len(), |k| {
        let c = &cycles[k];
        let (gammas, rhos, orient) = cycle_geometry(t, c)?;
        let certificate = parity_certificate(&gammas, &rhos, &orient, t.angle_mode()).map_err(|e| match e {
            HGraphError::DirectionOutsideClasses { edge, .. } => HGraphError::DirectionOutsideClasses { cycle: k, edge },
            other => other,
        })?;
        Ok(CycleReport {
            length: c.len(),
            tiles: c.tiles.clone(),
            certificate,
            orientation_propagation: orientation_propagation_check(&gammas, &rhos, &orient),
        })
    });
    let cycles: Vec<CycleReport> = reports.into_iter().collect::<Result<_, _>>()?;
    let total: usize = cycles.iter().map(|c| c.length).sum();
    debug_assert_eq!(total, t.len());
    let n_even = total == t.len() && cycles.iter().all(|c| c.length % 2 == 0);
    Ok(ParityReport { n_even, cycles })
}

/// A walk of unit steps in the eight directions `kπ/4`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EighthWalk {
    /// Net counts `(n₀ − n₄, n₂ − n₆, n₁ − n₅, n₃ − n₇)`.
    #[serde(rename = "classCounts")]
    pub class_counts: [i64; 4],
    pub closure: bool,
    #[serde(rename = "normEquality")]
    pub norm_equality: bool,
    pub length: usize,
}

impl EighthWalk {
    pub fn even(&self) -> bool {
        self.length.is_multiple_of(2)
    }

    /// A closed walk that passes the class argument.
    pub fn certified_even(&self) -> bool {
        self.closure && self.norm_equality && self.even()
    }
}

/// Closure and class counts for a walk given by direction indices `k`
/// (step `e^{ikπ/4}`).
pub fn closed_eighth_walk(dirs: &[u32]) -> EighthWalk {
    let mut n = [0i64; 8];
    let mut sum = Point::origin(2);
    for &k in dirs {
        n[(k % 8) as usize] += 1;
        let (c, s) = rotation_entries(k % 8, 2);
        sum = &sum + &Point::new(c, s);
    }
    let counts = [n[0] - n[4], n[2] - n[6], n[1] - n[5], n[3] - n[7]];
    let [a, b, c, d] = counts;
    EighthWalk { class_counts: counts, closure: sum.is_zero(), norm_equality: a * a + b * b == c * c + d * d, length: dirs.len() }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UndirectedCycle {
    pub edges: Vec<usize>,
    pub walk: EighthWalk,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UndirectedParity {
    /// Every vertex had even degree, so the edges split into cycles.
    pub decomposable: bool,
    pub cycles: Vec<UndirectedCycle>,
    /// Every cycle direction was one of the eight `kπ/4`.
    #[serde(rename = "eighthDirections")]
    pub eighth_directions: bool,
}

impl UndirectedParity {
    pub fn even(&self) -> bool {
        self.decomposable && self.eighth_directions && self.cycles.iter().all(|c| c.walk.certified_even())
    }
}

/// Split an undirected multigraph into cycles by peeling; returns the cycles
/// as (edge, traversed forward) lists and whether every edge was used.
fn peel_undirected(n: usize, ends: &[(usize, usize)]) -> (Vec<Vec<(usize, bool)>>, bool) {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (e, &(u, v)) in ends.iter().enumerate() {
        adj[u].push(e);
        if u != v {
            adj[v].push(e);
        }
    }
    let mut used = vec![false; ends.len()];
    let mut cycles = Vec::new();
    let mut all = true;
    let mut pos: Vec<Option<usize>> = vec![None; n];
    for start in 0..ends.len() {
        if used[start] {
            continue;
        }
        let s = ends[start].0;
        let mut walk_v = vec![s];
        let mut walk_e: Vec<(usize, bool)> = Vec::new();
        pos[s] = Some(0);
        let mut cur = s;
        loop {
            let Some(&e) = adj[cur].iter().find(|&&e| !used[e]) else {
                all &= walk_e.is_empty();
                break;
            };
            used[e] = true;
            let forward = ends[e].0 == cur;
            let next = if forward { ends[e].1 } else { ends[e].0 };
            walk_e.push((e, forward));
            if let Some(p) = pos[next] {
                cycles.push(walk_e.split_off(p));
                for v in walk_v.drain(p + 1..) {
                    pos[v] = None;
                }
                cur = next;
                if walk_e.is_empty() {
                    break;
                }
            } else {
                pos[next] = Some(walk_v.len());
                walk_v.push(next);
                cur = next;
            }
        }
        for v in walk_v {
            pos[v] = None;
        }
    }
    (cycles, all)
}

/// For α = π/4: split the undirected hypotenuse graph into cycles and check
/// that each is a closed walk in the eight directions `kπ/4` of even length.
pub fn undirected_cycle_parity(t: &Tiling) -> Result<UndirectedParity, HGraphError> {
    if t.angle_mode() != (AngleMode::BoundAlpha { p: 1, q: 4 }) {
        return Err(HGraphError::WrongAlpha { expected: "π/4" });
    }
    let g = build_hgraph(t)?;
    Ok(undirected_parity_of(&g))
}

pub(crate) fn undirected_parity_of(g: &HypotenuseGraph) -> UndirectedParity {
    let ends: Vec<(usize, usize)> = g.arcs();
    let (raw, decomposable) = peel_undirected(g.vertices.len(), &ends);
    let units: Vec<Point> = (0..8).map(|k| {
        let (c, s) = rotation_entries(k, 2);
        Point::new(c, s)
    }).collect();
    let mut eighth = true;
    let cycles = raw
        .into_iter()
        .map(|c| {
            let dirs: Vec<u32> = c
                .iter()
                .filter_map(|&(e, fwd)| {
                    let he = &g.edges[e];
                    let v = if fwd { &he.terminus - &he.origin } else { &he.origin - &he.terminus };
                    let len2 = v.norm2();
                    let unit = len2.sqrt().and_then(|l| {
                        Some(Point::new(v.x.checked_div(&l).ok()?, v.y.checked_div(&l).ok()?))
                    });
                    let k = unit.and_then(|u| units.iter().position(|w| *w == u));
                    if k.is_none() {
                        eighth = false;
                    }
                    k.map(|k| k as u32)
                })
                .collect();
            UndirectedCycle { edges: c.iter().map(|&(e, _)| e).collect(), walk: closed_eighth_walk(&dirs) }
        })
        .collect();
    UndirectedParity { decomposable, cycles, eighth_directions: eighth }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::hgraph::HEdge;

    fn pt(x: i64, y: i64) -> Point {
        Point::from_ints(x, y, 3)
    }

    #[test]
    fn two_cycle_certificate() {
        let v = Point::new(Qn::one(3), Qn::sqrt_d(3));
        let cert = parity_certificate(
            &[v.clone(), -&v],
            &[pt(1, 0), pt(-1, 0)],
            &[Orientation::Positive, Orientation::Negative],
            catalog::PI_OVER_3,
        )
        .unwrap();
        assert!(cert.closure && cert.norm_equality && cert.length == 2);
        assert_eq!(cert.class_counts, [0, 0, 0, 0]);
    }

    #[test]
    fn square_of_unit_steps() {
        let vs = [pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)];
        let cert = parity_certificate(&vs, &vs, &[Orientation::Negative; 4], catalog::PI_OVER_3).unwrap();
        assert!(cert.closure && cert.norm_equality);
        assert_eq!(cert.length, 4);
        assert_eq!(cert.class_counts, [0, 0, 0, 0]);
    }

    #[test]
    fn pi_over_3_closure_forces_zero_counts() {
        // With ω = ½ + (√3/2)i, twice the closure sum is
        // (2a + c − d√3) + (2b + d + c√3)i; over the box, only zero vanishes.
        let mut solutions = Vec::new();
        for a in -20..=20i64 {
            for b in -20..=20i64 {
                for c in -20..=20i64 {
                    for d in -20..=20i64 {
                        if 2 * a + c == 0 && d == 0 && 2 * b + d == 0 && c == 0 {
                            solutions.push((a, b, c, d));
                        }
                    }
                }
            }
        }
        assert_eq!(solutions, vec![(0, 0, 0, 0)]);
        // the exact evaluation agrees on a smaller box
        let w = omega(catalog::PI_OVER_3, 3).unwrap();
        let q = |v: i64| Qn::from_int(v, 3);
        for a in -3..=3i64 {
            for b in -3..=3i64 {
                for c in -3..=3i64 {
                    for d in -3..=3i64 {
                        let re = q(a) + &q(c) * &w.x - &q(d) * &w.y;
                        let im = q(b) + &q(c) * &w.y + &q(d) * &w.x;
                        assert_eq!(re.is_zero() && im.is_zero(), (a, b, c, d) == (0, 0, 0, 0));
                    }
                }
            }
        }
    }

    #[test]
    fn pair_certificate_and_propagation() {
        let t = catalog::trapezoid_pair();
        let r = parity_theorem_check(&t).unwrap();
        assert!(r.n_even);
        assert_eq!(r.cycles.len(), 1);
        let c = &r.cycles[0];
        assert!(c.certificate.holds());
        assert!(c.orientation_propagation);
    }

    #[test]
    fn corrupted_direction_fails_propagation() {
        // γ rotated by an angle that is neither parallel nor perpendicular
        let g = vec![pt(2, 0), Point::new(Qn::one(3), Qn::sqrt_d(3))];
        let r = vec![pt(0, 1), pt(0, 1)];
        assert!(!orientation_propagation_check(&g, &r, &[Orientation::Positive; 2]));
        let g = vec![pt(2, 0), pt(-2, 0)];
        assert!(orientation_propagation_check(&g, &r, &[Orientation::Positive; 2]));
    }

    #[test]
    fn rectangles_are_rejected() {
        assert_eq!(parity_theorem_check(&catalog::unit_grid(2, 1)), Err(HGraphError::WrongPrototile));
    }

    #[test]
    fn eighth_walks() {
        assert!(closed_eighth_walk(&[0, 2, 4, 6]).certified_even());
        assert!(closed_eighth_walk(&[1, 5]).certified_even());
        let mut closed_triples = 0;
        for a in 0..8 {
            for b in 0..8 {
                for c in 0..8 {
                    if closed_eighth_walk(&[a, b, c]).closure {
                        closed_triples += 1;
                    }
                }
            }
        }
        assert_eq!(closed_triples, 0);
    }

    #[test]
    fn pi4_pairs_are_even() {
        for t in [catalog::pi4_pair_rectangle(), catalog::pi4_pairs_square()] {
            let r = undirected_cycle_parity(&t).unwrap();
            assert!(r.even(), "{r:?}");
            assert!(r.eighth_directions);
        }
        assert!(undirected_cycle_parity(&catalog::trapezoid_pair()).is_err());
    }

    #[test]
    fn synthetic_undirected_square() {
        let p = |x, y| Point::from_ints(x, y, 2);
        let e = |a: Point, b: Point, k| HEdge { origin: a, terminus: b, tile_id: k };
        let g = HypotenuseGraph::from_edges(vec![
            e(p(0, 0), p(2, 0), 0),
            e(p(2, 2), p(2, 0), 1),
            e(p(2, 2), p(0, 2), 2),
            e(p(0, 0), p(0, 2), 3),
        ]);
        let r = undirected_parity_of(&g);
        assert!(r.even());
        assert_eq!(r.cycles.len(), 1);
    }
}
