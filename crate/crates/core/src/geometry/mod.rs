//! Exact planar primitives over one quadratic field.

mod isometry;
mod point;
mod polygon;
mod prototile;

pub use isometry::{rotation_entries, rotation_order, Isometry};
pub use point::{cross, direction_equiv, dot, orient, Direction, Point};
pub use polygon::{
    clip_convex, clip_halfplane, convex_interiors_overlap, convex_intersection_area, is_strictly_convex_ccw,
    line_intersection, locate_convex, polygon_area, segment_relation, signed_area, split_convex, vertex_centroid,
    Location, Segment, SegmentRelation,
};
pub use prototile::{tile_orientation, trapezoid_area_formula, Corner, Orientation, Prototile, SideKind};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("radicand mismatch")]
    RadicandMismatch,
    #[error("rotation index {rotation} outside the group of order {order}")]
    RotationOutsideGroup { rotation: u32, order: u32 },
    #[error("rotation not representable in the point's field")]
    NotRepresentable,
    #[error("degenerate polygon: {0}")]
    Degenerate(String),
    #[error("degenerate prototile: {0}")]
    DegeneratePrototile(String),
    #[error("unsupported trapezoid angle {p}/{q}·π (supported: π/3, π/4, π/6)")]
    UnsupportedAlpha { p: i64, q: i64 },
    #[error("prototile is not a right trapezoid")]
    NotTrapezoid,
    #[error("angle at prototile vertex {0} is not a combination of α and π/2")]
    AngleNotSymbolic(usize),
}
