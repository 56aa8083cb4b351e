//! Exhaustive backtracking enumeration of tilings of a rectangle by copies
//! of one prototile.
//!
//! Each node covers the least uncovered point `p` in `(y, x)` order. Any
//! completion has a tile containing `p` that lies in the closure of the
//! uncovered region, so `p` is that tile's least vertex; branching over every
//! placement with its least vertex at `p` therefore loses no tiling, and
//! reaches each tiling along exactly one path.

mod canonical;
mod sweep;

pub use canonical::{canonical_form, canonical_representative, orbit_size, region_symmetries, CanonicalKey};
pub use sweep::{describe_prototile, sweep, RegionRule, SweepCell, SweepStatus};

use crate::exactnum::QuadraticNumber;
use crate::geometry::{convex_interiors_overlap, split_convex, GeometryError, Isometry, Point, Prototile};
use crate::par;
use crate::tiling::{Region, Tiling, TilingError};
use serde::Serialize;
use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use thiserror::Error;

type Qn = QuadraticNumber;

pub const DEFAULT_NODE_LIMIT: u64 = 10_000_000;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("{n} tiles of area {tile} cannot cover a region of area {region}")]
    AreaMismatch { n: usize, tile: Qn, region: Qn },
    #[error("radicand mismatch between prototile (√{prototile}) and region (√{region})")]
    RadicandMismatch { prototile: u32, region: u32 },
    #[error("rotation {rotation} is outside the group of order {order}")]
    RotationOutsideGroup { rotation: u32, order: u32 },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Tiling(#[from] TilingError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub prototile: Prototile,
    pub region: Region,
    pub target_n: usize,
    /// Allowed linear parts `(rotation, reflect)`.
    pub rotations: Vec<(u32, bool)>,
    pub dedup_symmetry: bool,
    pub node_limit: u64,
}

impl SearchConfig {
    /// Every rotation and reflection of the field's group, with symmetry
    /// dedup and the default node limit.
    pub fn new(prototile: Prototile, region: Region, target_n: usize) -> Self {
        let rotations = Isometry::group(prototile.radicand()).iter().map(|g| (g.rotation, g.reflect)).collect();
        SearchConfig { prototile, region, target_n, rotations, dedup_symmetry: true, node_limit: DEFAULT_NODE_LIMIT }
    }

    fn check(&self) -> Result<(), SearchError> {
        let d = self.prototile.radicand();
        if self.region.radicand() != d {
            return Err(SearchError::RadicandMismatch { prototile: d, region: self.region.radicand() });
        }
        self.prototile.validate()?;
        let order = crate::geometry::rotation_order(d);
        if let Some(&(rotation, _)) = self.rotations.iter().find(|(r, _)| *r >= order) {
            return Err(SearchError::RotationOutsideGroup { rotation, order });
        }
        let tile = self.prototile.area();
        let total = &tile * &Qn::from_int(self.target_n as i64, d);
        if total != self.region.area() {
            return Err(SearchError::AreaMismatch { n: self.target_n, tile, region: self.region.area() });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchResult {
    #[serde(skip)]
    pub tilings: Vec<Tiling>,
    /// Tilings found before symmetry dedup.
    pub raw_count: usize,
    pub nodes_explored: u64,
    pub exhausted: bool,
}

struct Search<'a> {
    cfg: &'a SearchConfig,
    region_poly: Vec<Point>,
    linear: Vec<Isometry>,
    nodes: AtomicU64,
    aborted: AtomicBool,
}

type Placed = (Isometry, Vec<Point>);

/// Pieces of `face` outside the convex polygon `tile`.
fn subtract(face: &[Point], tile: &[Point]) -> Vec<Vec<Point>> {
    if !convex_interiors_overlap(face, tile) {
        return vec![face.to_vec()];
    }
    let mut out = Vec::new();
    let mut rem = face.to_vec();
    let n = tile.len();
    for i in 0..n {
        let a = &tile[i];
        let dir = &tile[(i + 1) % n] - a;
        let (left, right) = split_convex(&rem, a, &dir);
        out.extend(right);
        match left {
            Some(l) => rem = l,
            None => return out,
        }
    }
    out
}

impl Search<'_> {
    fn inside_region(&self, pts: &[Point]) -> bool {
        let r = &self.cfg.region;
        pts.iter().all(|p| !p.x.is_negative() && !p.y.is_negative() && p.x <= r.width && p.y <= r.height)
    }

    /// Placements with least vertex at `anchor`, in `(rotation, reflect,
    /// vertex)` order, one per distinct image.
    fn placements(&self, anchor: &Point, placed: &[Placed]) -> Vec<Placed> {
        let verts = self.cfg.prototile.vertices();
        let mut seen: BTreeSet<Vec<Point>> = BTreeSet::new();
        let mut out = Vec::new();
        for g in &self.linear {
            for v in &verts {
                let iso = Isometry::new(g.rotation, g.reflect, anchor - &g.apply_linear(v));
                let (pts, _) = self.cfg.prototile.place(&iso);
                if pts.iter().min() != Some(anchor) || !self.inside_region(&pts) {
                    continue;
                }
                if placed.iter().any(|(_, q)| convex_interiors_overlap(&pts, q)) {
                    continue;
                }
                let mut key = pts.clone();
                key.sort();
                if seen.insert(key) {
                    out.push((iso, pts));
                }
            }
        }
        out
    }

    fn tick(&self) -> bool {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.cfg.node_limit {
            self.aborted.store(true, Ordering::Relaxed);
        }
        !self.aborted.load(Ordering::Relaxed)
    }

    fn dfs(&self, faces: Vec<Vec<Point>>, placed: &mut Vec<Placed>, out: &mut Vec<Vec<Isometry>>) {
        if !self.tick() {
            return;
        }
        if placed.len() == self.cfg.target_n {
            if faces.is_empty() {
                out.push(placed.iter().map(|(g, _)| g.clone()).collect());
            }
            return;
        }
        let Some(anchor) = faces.iter().flatten().min().cloned() else {
            return;
        };
        for p in self.placements(&anchor, placed) {
            let next: Vec<Vec<Point>> = faces.iter().flat_map(|f| subtract(f, &p.1)).collect();
            placed.push(p);
            self.dfs(next, placed, out);
            placed.pop();
        }
    }
}

/// Enumerate all tilings of the configured region by `target_n` copies.
pub fn enumerate(cfg: &SearchConfig) -> Result<SearchResult, SearchError> {
    cfg.check()?;
    let d = cfg.prototile.radicand();
    let search = Search {
        cfg,
        region_poly: cfg.region.corners(),
        linear: cfg.rotations.iter().map(|&(k, r)| Isometry::new(k, r, Point::origin(d))).collect(),
        nodes: AtomicU64::new(0),
        aborted: AtomicBool::new(false),
    };
    let mut found: Vec<Vec<Isometry>> = Vec::new();
    if search.tick() {
        let faces = [search.region_poly.clone()];
        let anchor = faces[0].iter().min().unwrap().clone();
        let roots = search.placements(&anchor, &[]);
        let branches = par::map(&roots, |p| {
            let next: Vec<Vec<Point>> = faces.iter().flat_map(|f| subtract(f, &p.1)).collect();
            let mut out = Vec::new();
            search.dfs(next, &mut vec![p.clone()], &mut out);
            out
        });
        found = branches.into_iter().flatten().collect();
    }
    let raw_count = found.len();
    let mut tilings = Vec::new();
    let mut keys = BTreeSet::new();
    for isos in found {
        let t = Tiling::with_default_mode(cfg.prototile.clone(), cfg.region.clone(), isos)?;
        if !cfg.dedup_symmetry || keys.insert(canonical_form(&t)) {
            tilings.push(t);
        }
    }
    Ok(SearchResult {
        tilings,
        raw_count,
        nodes_explored: search.nodes.load(Ordering::Relaxed).min(cfg.node_limit.saturating_add(1)),
        exhausted: !search.aborted.load(Ordering::Relaxed),
    })
}
