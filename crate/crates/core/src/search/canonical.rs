use crate::geometry::{rotation_order, Isometry, Point};
use crate::tiling::{Region, Tiling};
use serde::Serialize;
use std::collections::BTreeSet;

/// Sorted vertex lists of the tiles, themselves sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CanonicalKey(pub Vec<Vec<Point>>);

fn key_of(t: &Tiling) -> CanonicalKey {
    let mut tiles: Vec<Vec<Point>> = t
        .images()
        .iter()
        .map(|img| {
            let mut v = img.points.clone();
            v.sort();
            v
        })
        .collect();
    tiles.sort();
    CanonicalKey(tiles)
}

/// Linear symmetries of the region: the dihedral group of order 8 for a
/// square, of order 4 otherwise.
pub fn region_symmetries(region: &Region) -> Vec<Isometry> {
    let d = region.radicand();
    let order = rotation_order(d);
    let step = if region.is_square() { order / 4 } else { order / 2 };
    (0..order)
        .step_by(step as usize)
        .flat_map(|k| [false, true].map(|r| Isometry::new(k, r, Point::origin(d))))
        .collect()
}

fn images(t: &Tiling) -> Vec<Tiling> {
    region_symmetries(t.region()).iter().map(|g| t.transformed(g)).collect()
}

/// The least key over the region's symmetric images of the tiling.
pub fn canonical_form(t: &Tiling) -> CanonicalKey {
    images(t).iter().map(key_of).min().expect("identity is a symmetry")
}

/// The symmetric image achieving [`canonical_form`].
pub fn canonical_representative(t: &Tiling) -> Tiling {
    images(t).into_iter().min_by_key(key_of).expect("identity is a symmetry")
}

/// Number of distinct tilings among the symmetric images.
pub fn orbit_size(t: &Tiling) -> usize {
    images(t).iter().map(key_of).collect::<BTreeSet<_>>().len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn rotated_pair_same_key() {
        let t = catalog::trapezoid_pair();
        let quarter = Isometry::new(3, false, Point::origin(3));
        assert_eq!(canonical_form(&t), canonical_form(&t.transformed(&quarter)));
    }

    #[test]
    fn representative_is_fixed() {
        for t in [catalog::trapezoid_pair(), catalog::basket_weave(2, 2), catalog::brick_rows(3, 2)] {
            let r = canonical_representative(&t);
            assert_eq!(key_of(&r), canonical_form(&t));
            assert_eq!(canonical_form(&r), canonical_form(&t));
        }
    }

    #[test]
    fn distinct_tilings_distinct_keys() {
        let a = catalog::brick_rows(2, 1);
        let b = catalog::basket_weave(2, 1);
        assert_ne!(canonical_form(&a), canonical_form(&b));
        assert_eq!(orbit_size(&catalog::unit_grid(2, 2)), 1);
    }
}
