//! Brute-force reference implementations. None of these share code paths
//! with the library routines they check.

#![allow(dead_code)]

use schreier_core::{ArcId, CoveringMap, Graph, Matching, VertexId};

/// Distinct non-loop neighbour pairs `(u, v)` with `u < v`.
fn simple_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let mut pairs: Vec<(usize, usize)> = g
        .arcs()
        .iter()
        .filter(|a| a.iota != a.tau)
        .map(|a| (a.iota.0.min(a.tau.0), a.iota.0.max(a.tau.0)))
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    pairs
}

/// Maximum matching size by exhaustive branching on the least uncovered
/// vertex.
pub fn max_matching_size(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for (u, v) in simple_pairs(g) {
        adj[u].push(v);
        adj[v].push(u);
    }
    fn go(v: usize, adj: &[Vec<usize>], used: &mut [bool]) -> usize {
        let n = adj.len();
        let mut v = v;
        while v < n && used[v] {
            v += 1;
        }
        if v == n {
            return 0;
        }
        used[v] = true;
        let mut best = go(v + 1, adj, used);
        for &w in &adj[v] {
            if !used[w] {
                used[w] = true;
                best = best.max(1 + go(v + 1, adj, used));
                used[w] = false;
            }
        }
        used[v] = false;
        best
    }
    go(0, &adj, &mut vec![false; n])
}

/// Number of perfect matchings counted on the multigraph (parallel edges
/// are different matchings).
pub fn count_perfect_matchings(g: &Graph) -> usize {
    let n = g.vertex_count();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .map(|e| g.endpoints(e))
        .filter(|(u, v)| u != v)
        .map(|(u, v)| (u.0, v.0))
        .collect();
    fn go(edges: &[(usize, usize)], used: &mut [bool]) -> usize {
        let Some(v) = used.iter().position(|&u| !u) else {
            return 1;
        };
        let mut total = 0;
        for &(a, b) in edges {
            let w = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if !used[w] {
                used[v] = true;
                used[w] = true;
                total += go(edges, used);
                used[v] = false;
                used[w] = false;
            }
        }
        total
    }
    if n % 2 == 1 {
        return 0;
    }
    go(&edges, &mut vec![false; n])
}

/// Searches for an augmenting path for `m` by depth-first enumeration of
/// simple alternating paths from every free vertex.
pub fn has_augmenting_path(g: &Graph, m: &Matching) -> bool {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for (u, v) in simple_pairs(g) {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut mate = vec![usize::MAX; n];
    for &e in m.edges() {
        let (u, v) = g.endpoints(e);
        mate[u.0] = v.0;
        mate[v.0] = u.0;
    }
    fn extend(v: usize, adj: &[Vec<usize>], mate: &[usize], on_path: &mut [bool]) -> bool {
        // v is reached by a non-matching edge from an even vertex's side;
        // here v is an "outer" vertex looking for a non-matching edge
        for &w in &adj[v] {
            if on_path[w] || mate[v] == w {
                continue;
            }
            if mate[w] == usize::MAX {
                return true;
            }
            let x = mate[w];
            if on_path[x] {
                continue;
            }
            on_path[w] = true;
            on_path[x] = true;
            if extend(x, adj, mate, on_path) {
                return true;
            }
            on_path[w] = false;
            on_path[x] = false;
        }
        false
    }
    (0..n).filter(|&v| mate[v] == usize::MAX).any(|v| {
        let mut on_path = vec![false; n];
        on_path[v] = true;
        extend(v, &adj, &mate, &mut on_path)
    })
}

/// Whether a proper 2-colouring exists, by trying all of them.
pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.vertex_count();
    assert!(n <= 20);
    (0u32..(1u32 << n)).any(|mask| {
        g.arcs()
            .iter()
            .all(|a| (mask >> a.iota.0 & 1) != (mask >> a.tau.0 & 1))
    })
}

/// Covering check straight from the definition: a structure-preserving map
/// whose restriction to each star hits the target star exactly once per arc.
pub fn is_covering(m: &CoveringMap) -> bool {
    let (s, t) = (&m.source, &m.target);
    if m.vertex_map.len() != s.vertex_count() || m.arc_map.len() != s.arc_count() {
        return false;
    }
    if m.vertex_map.iter().any(|v| v.0 >= t.vertex_count()) {
        return false;
    }
    if m.arc_map.iter().any(|a| a.0 >= t.arc_count()) {
        return false;
    }
    for (i, arc) in s.arcs().iter().enumerate() {
        let image = t.arc(m.arc_map[i]);
        if m.vertex_map[arc.iota.0] != image.iota
            || m.vertex_map[arc.tau.0] != image.tau
            || m.arc_map[arc.inv.0] != image.inv
        {
            return false;
        }
    }
    for v in 0..s.vertex_count() {
        let mut images: Vec<ArcId> = (0..s.arc_count())
            .filter(|&a| s.arc(ArcId(a)).iota == VertexId(v))
            .map(|a| m.arc_map[a])
            .collect();
        images.sort();
        let mut star: Vec<ArcId> = (0..t.arc_count())
            .map(ArcId)
            .filter(|&a| t.arc(a).iota == m.vertex_map[v])
            .collect();
        star.sort();
        if images != star {
            return false;
        }
    }
    true
}
