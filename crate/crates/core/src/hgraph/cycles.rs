//! Cycle peeling on directed multigraphs, independent of geometry.

/// Result of peeling: closed cycles (as arc index lists in walk order) and
/// the arcs that could not be closed up.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Peeling {
    pub cycles: Vec<Vec<usize>>,
    pub leftover: Vec<usize>,
}

impl Peeling {
    pub fn consumed_all(&self) -> bool {
        self.leftover.is_empty()
    }
}

/// Repeatedly walk unused out-arcs (lowest index first) until a vertex
/// repeats, and cut the loop off. A walk that gets stuck leaves its arcs over;
/// that happens exactly when some vertex has more in- than out-arcs in what
/// remains, so on a balanced graph every arc ends up in a cycle.
pub fn peel_cycles(n_vertices: usize, arcs: &[(usize, usize)]) -> Peeling {
    let m = arcs.len();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n_vertices];
    for (e, &(u, _)) in arcs.iter().enumerate() {
        out[u].push(e);
    }
    let mut ptr = vec![0usize; n_vertices];
    let mut used = vec![false; m];
    let mut pos: Vec<Option<usize>> = vec![None; n_vertices];
    let mut result = Peeling::default();

    for start in 0..m {
        if used[start] {
            continue;
        }
        let s = arcs[start].0;
        let mut walk_vertices = vec![s];
        let mut walk_arcs: Vec<usize> = Vec::new();
        pos[s] = Some(0);
        let mut cur = s;
        loop {
            while ptr[cur] < out[cur].len() && used[out[cur][ptr[cur]]] {
                ptr[cur] += 1;
            }
            let Some(&e) = out[cur].get(ptr[cur]) else {
                result.leftover.extend(walk_arcs.iter().copied());
                break;
            };
            used[e] = true;
            walk_arcs.push(e);
            let next = arcs[e].1;
            if let Some(p) = pos[next] {
                result.cycles.push(walk_arcs.split_off(p));
                for v in walk_vertices.drain(p + 1..) {
                    pos[v] = None;
                }
                cur = next;
                if walk_arcs.is_empty() {
                    break;
                }
            } else {
                pos[next] = Some(walk_vertices.len());
                walk_vertices.push(next);
                cur = next;
            }
        }
        for v in walk_vertices {
            pos[v] = None;
        }
    }
    result.leftover.sort_unstable();
    result
}

/// `deg⁺ = deg⁻` at every vertex.
pub fn is_balanced(n_vertices: usize, arcs: &[(usize, usize)]) -> bool {
    let mut net = vec![0i64; n_vertices];
    for &(u, v) in arcs {
        net[u] += 1;
        net[v] -= 1;
    }
    net.iter().all(|&x| x == 0)
}

/// Connected components of the underlying undirected graph, as a component
/// id per vertex (ids in order of first vertex).
pub fn weak_components(n_vertices: usize, arcs: &[(usize, usize)]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n_vertices).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(u, v) in arcs {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut ids = vec![usize::MAX; n_vertices];
    let mut next = 0;
    let mut comp = vec![0; n_vertices];
    for v in 0..n_vertices {
        let r = find(&mut parent, v);
        if ids[r] == usize::MAX {
            ids[r] = next;
            next += 1;
        }
        comp[v] = ids[r];
    }
    comp
}
