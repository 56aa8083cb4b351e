//! Exact models of rectangle dissections into congruent convex polygons.
//!
//! Every predicate is decided in a real quadratic field `ℚ(√d)`; nothing is
//! approximated except SVG output.

pub mod catalog;
pub mod exactnum;
pub mod geometry;
pub mod hgraph;
pub mod incidence;
pub mod par;
pub mod search;
pub mod segments;
pub mod tiling;
