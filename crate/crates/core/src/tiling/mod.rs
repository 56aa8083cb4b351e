//! Tilings of a rectangle by placed copies of one prototile.

mod io;
mod svg;
mod validate;
mod vertices;

pub use io::{load, save, TilingDocument};
pub use svg::{render_svg, Annotations};
pub use validate::{validate, Failure, FailureKind, ValidationReport};
pub use vertices::{extract_vertices_and_sides, Side};

use crate::exactnum::{AngleMode, QuadraticNumber};
use crate::geometry::{tile_orientation, GeometryError, Isometry, Orientation, Point, Prototile, Segment, SideKind};
use thiserror::Error;

type Qn = QuadraticNumber;

#[derive(Debug, Error)]
pub enum TilingError {
    #[error("radicand mismatch: {0}")]
    RadicandMismatch(String),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("degenerate prototile: {0}")]
    DegeneratePrototile(String),
    #[error("degenerate region: width and height must be positive")]
    DegenerateRegion,
    #[error("tile {tile}: {source}")]
    Tile { tile: usize, source: GeometryError },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("angle mode does not match the prototile")]
    AngleModeMismatch,
}

/// Axis-parallel rectangle `[0, w] × [0, h]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Region {
    pub width: Qn,
    pub height: Qn,
}

impl Region {
    pub fn new(width: Qn, height: Qn) -> Result<Region, TilingError> {
        if width.radicand() != height.radicand() {
            return Err(TilingError::RadicandMismatch("region width and height".into()));
        }
        if !width.is_positive() || !height.is_positive() {
            return Err(TilingError::DegenerateRegion);
        }
        Ok(Region { width, height })
    }

    pub fn square(side: Qn) -> Result<Region, TilingError> {
        Region::new(side.clone(), side)
    }

    pub fn is_square(&self) -> bool {
        self.width == self.height
    }

    pub fn area(&self) -> Qn {
        &self.width * &self.height
    }

    pub fn radicand(&self) -> u32 {
        self.width.radicand()
    }

    /// Corners counterclockwise from the origin.
    pub fn corners(&self) -> Vec<Point> {
        let z = Qn::zero(self.radicand());
        vec![
            Point::new(z.clone(), z.clone()),
            Point::new(self.width.clone(), z.clone()),
            Point::new(self.width.clone(), self.height.clone()),
            Point::new(z, self.height.clone()),
        ]
    }

    pub fn contains(&self, p: &Point) -> bool {
        !p.x.is_negative() && !p.y.is_negative() && p.x <= self.width && p.y <= self.height
    }

    pub fn on_boundary(&self, p: &Point) -> bool {
        self.contains(p) && (p.x.is_zero() || p.y.is_zero() || p.x == self.width || p.y == self.height)
    }

    pub fn is_corner(&self, p: &Point) -> bool {
        (p.x.is_zero() || p.x == self.width) && (p.y.is_zero() || p.y == self.height)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlacedTile {
    pub id: usize,
    pub iso: Isometry,
}

/// A placed tile's polygon, counterclockwise, with the prototile vertex index
/// behind each image vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TileImage {
    pub points: Vec<Point>,
    pub proto_index: Vec<usize>,
}

impl TileImage {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn side(&self, i: usize) -> Segment {
        Segment::new(self.points[i].clone(), self.points[(i + 1) % self.len()].clone())
    }

    /// Prototile side index behind image side `i`.
    pub fn proto_side(&self, i: usize) -> usize {
        let n = self.len();
        let (a, b) = (self.proto_index[i], self.proto_index[(i + 1) % n]);
        if (a + 1) % n == b {
            a
        } else {
            b
        }
    }

    /// Image vertex of prototile vertex `k`.
    pub fn vertex_of(&self, k: usize) -> &Point {
        let i = self.proto_index.iter().position(|&j| j == k).expect("prototile index");
        &self.points[i]
    }
}

#[derive(Clone, Debug)]
pub struct Tiling {
    prototile: Prototile,
    region: Region,
    tiles: Vec<PlacedTile>,
    angle_mode: AngleMode,
    images: Vec<TileImage>,
}

impl PartialEq for Tiling {
    fn eq(&self, other: &Self) -> bool {
        self.prototile == other.prototile
            && self.region == other.region
            && self.tiles == other.tiles
            && self.angle_mode == other.angle_mode
    }
}

impl Eq for Tiling {}

impl Tiling {
    /// Build a tiling, checking fields and the rotation group but not the
    /// cover itself (see [`validate`]).
    pub fn new(prototile: Prototile, region: Region, isos: Vec<Isometry>, angle_mode: AngleMode) -> Result<Tiling, TilingError> {
        prototile.validate().map_err(|e| match e {
            GeometryError::DegeneratePrototile(s) => TilingError::DegeneratePrototile(s),
            GeometryError::UnsupportedAlpha { .. } => TilingError::DegeneratePrototile(e.to_string()),
            other => TilingError::Geometry(other),
        })?;
        let d = region.radicand();
        if prototile.radicand() != d {
            return Err(TilingError::RadicandMismatch("prototile and region".into()));
        }
        let angle_mode = angle_mode.validate().map_err(|_| TilingError::AngleModeMismatch)?;
        if let Some(m) = prototile.angle_mode() {
            if m != angle_mode {
                return Err(TilingError::AngleModeMismatch);
            }
        }
        let mut tiles = Vec::with_capacity(isos.len());
        for (id, iso) in isos.into_iter().enumerate() {
            if iso.dx.radicand() != d || iso.dy.radicand() != d {
                return Err(TilingError::RadicandMismatch(format!("tile {id}")));
            }
            iso.validate().map_err(|source| TilingError::Tile { tile: id, source })?;
            tiles.push(PlacedTile { id, iso });
        }
        let images = tiles
            .iter()
            .map(|t| {
                let (points, proto_index) = prototile.place(&t.iso);
                TileImage { points, proto_index }
            })
            .collect();
        Ok(Tiling { prototile, region, tiles, angle_mode, images })
    }

    /// Angle mode implied by the prototile (bound for trapezoids, generic
    /// otherwise).
    pub fn with_default_mode(prototile: Prototile, region: Region, isos: Vec<Isometry>) -> Result<Tiling, TilingError> {
        let mode = prototile.angle_mode().unwrap_or(AngleMode::GenericAlpha);
        Tiling::new(prototile, region, isos, mode)
    }

    pub fn prototile(&self) -> &Prototile {
        &self.prototile
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn tiles(&self) -> &[PlacedTile] {
        &self.tiles
    }

    pub fn angle_mode(&self) -> AngleMode {
        self.angle_mode
    }

    pub fn radicand(&self) -> u32 {
        self.region.radicand()
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn image(&self, i: usize) -> &TileImage {
        &self.images[i]
    }

    pub fn images(&self) -> &[TileImage] {
        &self.images
    }

    pub fn isometries(&self) -> Vec<Isometry> {
        self.tiles.iter().map(|t| t.iso.clone()).collect()
    }

    /// Kind of image side `k` of tile `i`.
    pub fn side_kind(&self, i: usize, k: usize) -> SideKind {
        self.prototile.side_kind(self.images[i].proto_side(k))
    }

    pub fn orientation(&self, i: usize) -> Result<Orientation, GeometryError> {
        tile_orientation(&self.prototile, &self.tiles[i].iso)
    }

    /// The same tiling with tiles reordered.
    pub fn permuted(&self, order: &[usize]) -> Tiling {
        let isos = order.iter().map(|&i| self.tiles[i].iso.clone()).collect();
        Tiling::new(self.prototile.clone(), self.region.clone(), isos, self.angle_mode).expect("same data")
    }

    /// Image of the whole tiling under a linear group element `g` followed by
    /// the translation that moves the rotated region back onto
    /// `[0, w'] × [0, h']`.
    pub fn transformed(&self, g: &Isometry) -> Tiling {
        let corners: Vec<Point> = self.region.corners().iter().map(|c| g.apply(c)).collect();
        let min_x = corners.iter().map(|c| c.x.clone()).min().unwrap();
        let min_y = corners.iter().map(|c| c.y.clone()).min().unwrap();
        let max_x = corners.iter().map(|c| c.x.clone()).max().unwrap();
        let max_y = corners.iter().map(|c| c.y.clone()).max().unwrap();
        let shift = Isometry::new(0, false, Point::new(-&min_x, -&min_y));
        let full = shift.compose(g);
        let region = Region::new(&max_x - &min_x, &max_y - &min_y).expect("rotated region");
        let isos = self.tiles.iter().map(|t| full.compose(&t.iso)).collect();
        Tiling::new(self.prototile.clone(), region, isos, self.angle_mode).expect("group image")
    }
}
