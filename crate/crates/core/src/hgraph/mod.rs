//! The hypotenuse graph of a trapezoid tiling: one directed edge per tile,
//! from the image of the α-corner to the image of the β-corner.

mod cycles;
mod pairing;
mod parity;

pub use cycles::{is_balanced, peel_cycles, weak_components, Peeling};
pub use pairing::{decompose_feasible_cycles, is_feasible, pair_merge, CompositeEdge, FeasibleCycle, PairedGraph};
pub use parity::{
    closed_eighth_walk, orientation_propagation_check, parity_certificate, parity_theorem_check, undirected_cycle_parity,
    CycleReport, EighthWalk, ParityCertificate, ParityReport, UndirectedCycle, UndirectedParity,
};

use crate::exactnum::ExactAngle;
use crate::geometry::{Corner, Point};
use crate::incidence::{IncidenceError, VertexClass, VertexIncidence};
use crate::tiling::Tiling;
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HGraphError {
    #[error("the prototile is not a right trapezoid")]
    WrongPrototile,
    #[error("the hypotenuse graph is not component-wise Eulerian ({0} unbalanced vertices)")]
    NotEulerian(usize),
    #[error(transparent)]
    Incidence(#[from] IncidenceError),
    #[error("pattern at {0} is inconsistent with four tiles meeting there")]
    InconsistentPattern(Point),
    #[error("edge {edge} of cycle {cycle} points outside the eight direction classes")]
    DirectionOutsideClasses { cycle: usize, edge: usize },
    #[error("this check needs α = {expected}")]
    WrongAlpha { expected: &'static str },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HEdge {
    pub origin: Point,
    pub terminus: Point,
    #[serde(rename = "tile")]
    pub tile_id: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypotenuseGraph {
    pub vertices: Vec<Point>,
    pub edges: Vec<HEdge>,
    pub out_edges: Vec<Vec<usize>>,
    pub in_edges: Vec<Vec<usize>>,
    index: BTreeMap<Point, usize>,
}

impl HypotenuseGraph {
    pub fn from_edges(edges: Vec<HEdge>) -> HypotenuseGraph {
        let mut index = BTreeMap::new();
        for e in &edges {
            index.entry(e.origin.clone()).or_insert(0);
            index.entry(e.terminus.clone()).or_insert(0);
        }
        let vertices: Vec<Point> = index.keys().cloned().collect();
        for (i, v) in vertices.iter().enumerate() {
            index.insert(v.clone(), i);
        }
        let mut out_edges = vec![Vec::new(); vertices.len()];
        let mut in_edges = vec![Vec::new(); vertices.len()];
        for (k, e) in edges.iter().enumerate() {
            out_edges[index[&e.origin]].push(k);
            in_edges[index[&e.terminus]].push(k);
        }
        HypotenuseGraph { vertices, edges, out_edges, in_edges, index }
    }

    pub fn vertex_index(&self, p: &Point) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn tail(&self, e: usize) -> usize {
        self.index[&self.edges[e].origin]
    }

    pub fn head(&self, e: usize) -> usize {
        self.index[&self.edges[e].terminus]
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.edges.len()).map(|e| (self.tail(e), self.head(e))).collect()
    }

    /// Component id per vertex.
    pub fn components(&self) -> Vec<usize> {
        weak_components(self.vertices.len(), &self.arcs())
    }

    pub fn component_count(&self) -> usize {
        self.components().iter().max().map_or(0, |m| m + 1)
    }
}

/// One edge per tile from `φ(a)` to `φ(b)`.
pub fn build_hgraph(t: &Tiling) -> Result<HypotenuseGraph, HGraphError> {
    let proto = t.prototile();
    let (Some(ia), Some(ib)) = (proto.corner_index(Corner::A), proto.corner_index(Corner::B)) else {
        return Err(HGraphError::WrongPrototile);
    };
    let edges = (0..t.len())
        .map(|j| {
            let img = t.image(j);
            HEdge { origin: img.vertex_of(ia).clone(), terminus: img.vertex_of(ib).clone(), tile_id: j }
        })
        .collect();
    Ok(HypotenuseGraph::from_edges(edges))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeRow {
    pub vertex: Point,
    #[serde(rename = "out")]
    pub out_degree: usize,
    #[serde(rename = "in")]
    pub in_degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeBalance {
    pub balanced: bool,
    pub table: Vec<DegreeRow>,
}

pub fn degree_balance(g: &HypotenuseGraph) -> DegreeBalance {
    let table: Vec<DegreeRow> = g
        .vertices
        .iter()
        .enumerate()
        .map(|(i, v)| DegreeRow { vertex: v.clone(), out_degree: g.out_edges[i].len(), in_degree: g.in_edges[i].len() })
        .collect();
    DegreeBalance { balanced: table.iter().all(|r| r.out_degree == r.in_degree), table }
}

/// Symbol of an angle at a hypotenuse-graph vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PatternSymbol {
    #[serde(rename = "α")]
    Alpha,
    #[serde(rename = "β")]
    Beta,
    #[serde(rename = "π/2")]
    Right,
}

impl PatternSymbol {
    pub fn of(a: ExactAngle) -> PatternSymbol {
        match a {
            ExactAngle::ALPHA => PatternSymbol::Alpha,
            ExactAngle::BETA => PatternSymbol::Beta,
            _ => PatternSymbol::Right,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            PatternSymbol::Alpha => "α",
            PatternSymbol::Beta => "β",
            PatternSymbol::Right => "π/2",
        }
    }
}

use PatternSymbol::{Alpha as A, Beta as B, Right as R};

/// Patterns allowed at an interior vertex of an Eulerian hypotenuse graph.
pub const EULERIAN_PATTERNS: [&[PatternSymbol]; 5] = [&[A, B], &[A, B, A, B], &[A, A, B, B], &[A, B, R, R], &[A, R, B, R]];

/// Equal up to cyclic rotation or reversal.
fn dihedral_match(p: &[PatternSymbol], q: &[PatternSymbol]) -> bool {
    let n = p.len();
    if n != q.len() {
        return false;
    }
    let rev: Vec<PatternSymbol> = q.iter().rev().copied().collect();
    (0..n).any(|s| (0..n).all(|i| p[(i + s) % n] == q[i]) || (0..n).all(|i| p[(i + s) % n] == rev[i]))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternOffender {
    pub vertex: Point,
    pub pattern: Vec<PatternSymbol>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternCheck {
    pub eulerian: bool,
    pub offenders: Vec<PatternOffender>,
    /// Vertices on the region boundary or inside another tile's side whose
    /// straight-angle pattern `(α, β)` was accepted as a truncation of the
    /// interior list.
    pub truncated: Vec<Point>,
}

/// Whether an angle pattern is one of the Eulerian patterns. Patterns at
/// vertices with angle sum π are linear, not cyclic, and only `(α, β)` in
/// either order fits.
pub fn pattern_allowed(pattern: &[PatternSymbol], class: VertexClass) -> bool {
    match class {
        VertexClass::Interior => EULERIAN_PATTERNS.iter().any(|q| dihedral_match(pattern, q)),
        VertexClass::Boundary | VertexClass::SideInterior => pattern == [A, B] || pattern == [B, A],
        VertexClass::Corner => false,
    }
}

pub fn pattern_of(v: &VertexIncidence) -> Vec<PatternSymbol> {
    v.angles.iter().map(|&a| PatternSymbol::of(a)).collect()
}

/// Check every hypotenuse-graph vertex against the Eulerian pattern list.
pub fn angle_pattern_check(g: &HypotenuseGraph, inc: &[VertexIncidence]) -> PatternCheck {
    let by_point: BTreeMap<&Point, &VertexIncidence> = inc.iter().map(|v| (&v.w, v)).collect();
    let mut offenders = Vec::new();
    let mut truncated = Vec::new();
    for u in &g.vertices {
        let Some(v) = by_point.get(u) else {
            offenders.push(PatternOffender { vertex: u.clone(), pattern: Vec::new() });
            continue;
        };
        let pattern = pattern_of(v);
        if pattern_allowed(&pattern, v.class) {
            if v.class != VertexClass::Interior {
                truncated.push(u.clone());
            }
        } else {
            offenders.push(PatternOffender { vertex: u.clone(), pattern });
        }
    }
    PatternCheck { eulerian: offenders.is_empty(), offenders, truncated }
}

/// Every component is two coincident hypotenuses pointing opposite ways.
pub fn pairing_conjecture_check(g: &HypotenuseGraph) -> bool {
    let comp = g.components();
    let count = g.component_count();
    let mut edges_of = vec![Vec::new(); count];
    for e in 0..g.edges.len() {
        edges_of[comp[g.tail(e)]].push(e);
    }
    let mut verts_of = vec![0usize; count];
    for &c in &comp {
        verts_of[c] += 1;
    }
    (0..count).all(|c| {
        let es = &edges_of[c];
        verts_of[c] == 2 && es.len() == 2 && {
            let (x, y) = (&g.edges[es[0]], &g.edges[es[1]]);
            x.origin == y.terminus && x.terminus == y.origin
        }
    })
}
