use super::Tiling;
use crate::geometry::{Point, Segment};
use std::collections::BTreeSet;

/// One side of one tile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Side {
    pub tile: usize,
    /// Image side index within the tile polygon.
    pub index: usize,
    pub segment: Segment,
}

/// The set of all tile vertices and the list of all tile sides (sides of
/// different tiles are kept apart even when they coincide).
pub fn extract_vertices_and_sides(t: &Tiling) -> (BTreeSet<Point>, Vec<Side>) {
    let mut verts = BTreeSet::new();
    let mut sides = Vec::new();
    for (tile, img) in t.images().iter().enumerate() {
        verts.extend(img.points.iter().cloned());
        for index in 0..img.len() {
            sides.push(Side { tile, index, segment: img.side(index) });
        }
    }
    (verts, sides)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn counts() {
        let (v, s) = extract_vertices_and_sides(&catalog::trapezoid_pair());
        assert_eq!((v.len(), s.len()), (6, 8));
        let (v, s) = extract_vertices_and_sides(&catalog::unit_grid(1, 1));
        assert_eq!((v.len(), s.len()), (4, 4));
        let (v, s) = extract_vertices_and_sides(&catalog::unit_grid(2, 2));
        assert_eq!((v.len(), s.len()), (9, 16));
    }
}
