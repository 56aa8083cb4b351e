//! Merging hypotenuse paths through `(α, α, β, β)` vertices, and the
//! decomposition into feasible cycles.

use super::cycles::peel_cycles;
use super::{dihedral_match, pattern_of, HGraphError, HypotenuseGraph, PatternSymbol};
use crate::geometry::Point;
use crate::incidence::{VertexClass, VertexIncidence};
use serde::Serialize;
use std::collections::BTreeMap;

/// A trail of hypotenuse edges treated as one edge: it passes only through
/// `(α, α, β, β)` vertices, always from a β-tile into its α-neighbour.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompositeEdge {
    pub edges: Vec<usize>,
    pub origin: Point,
    pub terminus: Point,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairedGraph {
    pub baseline: HypotenuseGraph,
    pub v1: Vec<Point>,
    pub vstar: Vec<Point>,
    /// Edges of the merged graph; unmerged edges appear as singletons.
    pub merged_edges: Vec<CompositeEdge>,
    /// Trails that close up entirely inside the merged vertices.
    pub closed_chains: Vec<Vec<usize>>,
    /// Forced successor of an edge entering a merged vertex.
    pub succ: Vec<Option<usize>>,
}

impl PairedGraph {
    /// In/out degree of a surviving vertex in the merged graph.
    pub fn degree(&self, p: &Point) -> (usize, usize) {
        let out = self.merged_edges.iter().filter(|c| &c.origin == p).count();
        let inn = self.merged_edges.iter().filter(|c| &c.terminus == p).count();
        (out, inn)
    }
}

/// Merge the four edges at every vertex with pattern `(α, α, β, β)`: each
/// α-tile is paired with the β-tile next to it, since together their angles
/// fill a straight angle.
pub fn pair_merge(g: &HypotenuseGraph, inc: &[VertexIncidence]) -> Result<PairedGraph, HGraphError> {
    use PatternSymbol::{Alpha as A, Beta as B};
    let edge_of_tile: BTreeMap<usize, usize> = g.edges.iter().enumerate().map(|(k, e)| (e.tile_id, k)).collect();
    let by_point: BTreeMap<&Point, &VertexIncidence> = inc.iter().map(|v| (&v.w, v)).collect();
    let m = g.edges.len();
    let mut succ: Vec<Option<usize>> = vec![None; m];
    let mut v1 = Vec::new();
    let mut vstar = Vec::new();

    for u in &g.vertices {
        let rec = by_point.get(u).filter(|v| v.class == VertexClass::Interior);
        let pattern = rec.map(|v| pattern_of(v));
        let is_v1 = pattern.as_ref().is_some_and(|p| dihedral_match(p, &[A, A, B, B]));
        if !is_v1 {
            vstar.push(u.clone());
            continue;
        }
        let rec = rec.unwrap();
        let pattern = pattern.unwrap();
        let n = pattern.len();
        for i in (0..n).filter(|&i| pattern[i] == A) {
            let partner = [(i + 1) % n, (i + n - 1) % n]
                .into_iter()
                .find(|&k| pattern[k] == B)
                .ok_or_else(|| HGraphError::InconsistentPattern(u.clone()))?;
            let out_e = *edge_of_tile.get(&rec.tiles[i]).ok_or_else(|| HGraphError::InconsistentPattern(u.clone()))?;
            let in_e =
                *edge_of_tile.get(&rec.tiles[partner]).ok_or_else(|| HGraphError::InconsistentPattern(u.clone()))?;
            if &g.edges[out_e].origin != u || &g.edges[in_e].terminus != u || succ[in_e].is_some() {
                return Err(HGraphError::InconsistentPattern(u.clone()));
            }
            succ[in_e] = Some(out_e);
        }
        v1.push(u.clone());
    }

    let mut has_pred = vec![false; m];
    for s in succ.iter().flatten() {
        has_pred[*s] = true;
    }
    let mut seen = vec![false; m];
    let mut merged_edges = Vec::new();
    for start in (0..m).filter(|&e| !has_pred[e]) {
        let mut chain = vec![start];
        seen[start] = true;
        let mut cur = start;
        while let Some(next) = succ[cur] {
            seen[next] = true;
            chain.push(next);
            cur = next;
        }
        merged_edges.push(CompositeEdge {
            origin: g.edges[start].origin.clone(),
            terminus: g.edges[cur].terminus.clone(),
            edges: chain,
        });
    }
    let mut closed_chains = Vec::new();
    for start in 0..m {
        if seen[start] {
            continue;
        }
        let mut chain = Vec::new();
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            chain.push(cur);
            cur = succ[cur].expect("every edge on a closed chain has a successor");
        }
        closed_chains.push(chain);
    }
    Ok(PairedGraph { baseline: g.clone(), v1, vstar, merged_edges, closed_chains, succ })
}

/// A closed trail of hypotenuse edges that never separates a merged pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FeasibleCycle {
    pub edges: Vec<usize>,
    pub tiles: Vec<usize>,
}

impl FeasibleCycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Cycle-peel the merged graph (edges in tile order) and expand the merged
/// edges back into hypotenuses.
pub fn decompose_feasible_cycles(pg: &PairedGraph) -> Result<Vec<FeasibleCycle>, HGraphError> {
    let index: BTreeMap<&Point, usize> = pg.vstar.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut order: Vec<usize> = (0..pg.merged_edges.len()).collect();
    order.sort_by_key(|&c| pg.merged_edges[c].edges.iter().map(|&e| pg.baseline.edges[e].tile_id).min());
    let arcs: Vec<(usize, usize)> = order
        .iter()
        .map(|&c| (index[&pg.merged_edges[c].origin], index[&pg.merged_edges[c].terminus]))
        .collect();
    let peeled = peel_cycles(pg.vstar.len(), &arcs);
    if !peeled.consumed_all() {
        let mut net = vec![0i64; pg.vstar.len()];
        for &(u, v) in &arcs {
            net[u] += 1;
            net[v] -= 1;
        }
        return Err(HGraphError::NotEulerian(net.iter().filter(|&&x| x != 0).count()));
    }
    let expand = |edges: Vec<usize>| FeasibleCycle {
        tiles: edges.iter().map(|&e| pg.baseline.edges[e].tile_id).collect(),
        edges,
    };
    let mut out: Vec<FeasibleCycle> = peeled
        .cycles
        .into_iter()
        .map(|c| expand(c.into_iter().flat_map(|k| pg.merged_edges[order[k]].edges.clone()).collect()))
        .collect();
    out.extend(pg.closed_chains.iter().cloned().map(expand));
    Ok(out)
}

/// Consecutive edges chain up, and every merged pair is kept together.
pub fn is_feasible(pg: &PairedGraph, c: &FeasibleCycle) -> bool {
    let m = c.edges.len();
    let g = &pg.baseline;
    m > 0
        && (0..m).all(|i| {
            let (e, f) = (c.edges[i], c.edges[(i + 1) % m]);
            let chained = g.edges[e].terminus == g.edges[f].origin;
            let forward = pg.succ[e].is_none_or(|s| s == f);
            let backward = pg.succ.iter().position(|&s| s == Some(f)).is_none_or(|p| p == e);
            chained && forward && backward
        })
}
