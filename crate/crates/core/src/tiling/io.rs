//! JSON documents.

use super::{Region, Tiling, TilingError};
use crate::exactnum::{is_squarefree, AngleMode, QuadraticNumber};
use crate::geometry::{Isometry, Point, Prototile};
use serde::{Deserialize, Serialize};

type Qn = QuadraticNumber;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RegionDoc {
    pub w: Qn,
    pub h: Qn,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum PrototileDoc {
    Trapezoid { x: Qn },
    Rectangle { w: Qn, h: Qn },
    Convex { vertices: Vec<Point> },
}

/// On-disk form of a tiling.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct TilingDocument {
    pub field: u32,
    pub region: RegionDoc,
    pub prototile: PrototileDoc,
    pub angle: AngleMode,
    pub tiles: Vec<Isometry>,
}

impl TilingDocument {
    pub fn from_tiling(t: &Tiling) -> TilingDocument {
        let prototile = match t.prototile() {
            Prototile::RightTrapezoid { x, .. } => PrototileDoc::Trapezoid { x: x.clone() },
            Prototile::Rectangle { w, h } => PrototileDoc::Rectangle { w: w.clone(), h: h.clone() },
            Prototile::ConvexPolygon { vertices } => PrototileDoc::Convex { vertices: vertices.clone() },
        };
        let mut tiles = t.isometries();
        tiles.sort_by(|a, b| {
            a.dy.cmp(&b.dy)
                .then_with(|| a.dx.cmp(&b.dx))
                .then_with(|| a.rotation.cmp(&b.rotation))
                .then_with(|| a.reflect.cmp(&b.reflect))
        });
        TilingDocument {
            field: t.radicand(),
            region: RegionDoc { w: t.region().width.clone(), h: t.region().height.clone() },
            prototile,
            angle: t.angle_mode(),
            tiles,
        }
    }

    fn check_radicands(&self) -> Result<(), TilingError> {
        let d = self.field;
        let bad = |what: &str, q: &Qn| -> Result<(), TilingError> {
            if q.radicand() != d {
                Err(TilingError::RadicandMismatch(format!("{what} uses √{} in a √{d} document", q.radicand())))
            } else {
                Ok(())
            }
        };
        bad("region.w", &self.region.w)?;
        bad("region.h", &self.region.h)?;
        match &self.prototile {
            PrototileDoc::Trapezoid { x } => bad("prototile.x", x)?,
            PrototileDoc::Rectangle { w, h } => {
                bad("prototile.w", w)?;
                bad("prototile.h", h)?;
            }
            PrototileDoc::Convex { vertices } => {
                for (i, v) in vertices.iter().enumerate() {
                    bad(&format!("prototile.vertices[{i}].x"), &v.x)?;
                    bad(&format!("prototile.vertices[{i}].y"), &v.y)?;
                }
            }
        }
        for (i, iso) in self.tiles.iter().enumerate() {
            bad(&format!("tiles[{i}].dx"), &iso.dx)?;
            bad(&format!("tiles[{i}].dy"), &iso.dy)?;
        }
        Ok(())
    }

    pub fn into_tiling(self) -> Result<Tiling, TilingError> {
        if !is_squarefree(self.field) {
            return Err(TilingError::Schema(format!("field: {} is not a squarefree positive integer", self.field)));
        }
        self.check_radicands()?;
        let angle = self.angle.validate().map_err(|e| TilingError::Schema(format!("angle: {e}")))?;
        let region = Region::new(self.region.w, self.region.h)?;
        let prototile = match self.prototile {
            PrototileDoc::Trapezoid { x } => {
                if !matches!(angle, AngleMode::BoundAlpha { .. }) {
                    return Err(TilingError::Schema("angle: a trapezoid needs a bound α".into()));
                }
                Prototile::RightTrapezoid { x, p: bound_p(angle), q: bound_q(angle) }
            }
            PrototileDoc::Rectangle { w, h } => Prototile::Rectangle { w, h },
            PrototileDoc::Convex { vertices } => Prototile::ConvexPolygon { vertices },
        };
        Tiling::new(prototile, region, self.tiles, angle)
    }
}

fn bound_p(m: AngleMode) -> i64 {
    match m {
        AngleMode::BoundAlpha { p, .. } => p,
        AngleMode::GenericAlpha => 0,
    }
}

fn bound_q(m: AngleMode) -> i64 {
    match m {
        AngleMode::BoundAlpha { q, .. } => q,
        AngleMode::GenericAlpha => 0,
    }
}

/// Parse a tiling document. Tile order is preserved.
pub fn load(doc: &[u8]) -> Result<Tiling, TilingError> {
    let parsed: TilingDocument = serde_json::from_slice(doc).map_err(|e| {
        let msg = e.to_string();
        if msg.contains("radicand mismatch") {
            TilingError::RadicandMismatch(msg)
        } else {
            TilingError::Schema(msg)
        }
    })?;
    parsed.into_tiling()
}

/// Canonical JSON: pretty-printed, tiles sorted by `(dy, dx, rot, reflect)`.
pub fn save(t: &Tiling) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(&TilingDocument::from_tiling(t)).expect("serializable");
    out.push(b'\n');
    out
}
