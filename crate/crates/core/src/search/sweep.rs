use super::{enumerate, SearchConfig, SearchError};
use crate::exactnum::QuadraticNumber;
use crate::geometry::Prototile;
use crate::hgraph::{build_hgraph, degree_balance, pairing_conjecture_check};
use crate::tiling::Region;
use serde::Serialize;

type Qn = QuadraticNumber;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RegionRule {
    /// The square of area `N · area(prototile)`, when its side lies in the
    /// field.
    Square,
    /// The same region for every `N`.
    Fixed(Region),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase", tag = "status")]
pub enum SweepStatus {
    Skipped {
        reason: String,
    },
    #[serde(rename_all = "camelCase")]
    Searched {
        count: usize,
        raw_count: usize,
        nodes: u64,
        exhausted: bool,
        /// Every found tiling has a balanced hypotenuse graph (trapezoids
        /// only).
        eulerian: Option<bool>,
        /// Every found tiling pairs its hypotenuses (trapezoids only).
        pairing: Option<bool>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepCell {
    pub prototile: String,
    pub n: usize,
    pub width: Option<Qn>,
    pub height: Option<Qn>,
    #[serde(flatten)]
    pub status: SweepStatus,
}

pub fn describe_prototile(p: &Prototile) -> String {
    match p {
        Prototile::RightTrapezoid { x, p, q } => format!("trapezoid x={x} alpha={p}pi/{q}"),
        Prototile::Rectangle { w, h } => format!("rectangle {w}x{h}"),
        Prototile::ConvexPolygon { vertices } => format!("convex {}-gon", vertices.len()),
    }
}

fn region_for(rule: &RegionRule, p: &Prototile, n: usize) -> Result<Region, String> {
    match rule {
        RegionRule::Fixed(r) => Ok(r.clone()),
        RegionRule::Square => {
            let area = p.area() * Qn::from_int(n as i64, p.radicand());
            let side = area.sqrt().ok_or_else(|| format!("square of area {area} has no side in the field"))?;
            Region::square(side).map_err(|e| e.to_string())
        }
    }
}

/// Search every `(prototile, N)` pair and tabulate the results.
pub fn sweep(family: &[Prototile], ns: &[usize], rule: &RegionRule, node_limit: u64) -> Result<Vec<SweepCell>, SearchError> {
    let mut out = Vec::new();
    for p in family {
        for &n in ns {
            let label = describe_prototile(p);
            let region = match region_for(rule, p, n) {
                Ok(r) => r,
                Err(reason) => {
                    out.push(SweepCell { prototile: label, n, width: None, height: None, status: SweepStatus::Skipped { reason } });
                    continue;
                }
            };
            let mut cfg = SearchConfig::new(p.clone(), region.clone(), n);
            cfg.node_limit = node_limit;
            let status = match enumerate(&cfg) {
                Ok(r) => {
                    let graphs: Option<Vec<_>> =
                        p.is_trapezoid().then(|| r.tilings.iter().map(|t| build_hgraph(t).expect("trapezoid")).collect());
                    SweepStatus::Searched {
                        count: r.tilings.len(),
                        raw_count: r.raw_count,
                        nodes: r.nodes_explored,
                        exhausted: r.exhausted,
                        eulerian: graphs.as_ref().map(|gs| gs.iter().all(|g| degree_balance(g).balanced)),
                        pairing: graphs.as_ref().map(|gs| gs.iter().all(pairing_conjecture_check)),
                    }
                }
                Err(SearchError::AreaMismatch { .. }) => {
                    SweepStatus::Skipped { reason: "area-incompatible".to_string() }
                }
                Err(e) => return Err(e),
            };
            out.push(SweepCell { prototile: label, n, width: Some(region.width), height: Some(region.height), status });
        }
    }
    Ok(out)
}
