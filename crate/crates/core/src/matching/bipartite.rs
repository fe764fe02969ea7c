use std::collections::VecDeque;

use super::{simple_adjacency, Matching};
use crate::error::{Error, Result};
use crate::graph::{Bipartition, EdgeId, Graph};

const NONE: usize = usize::MAX;

/// Maximum matching of a bipartite multigraph by Hopcroft–Karp phases.
///
/// Free side-0 vertices are scanned in increasing id and neighbours in
/// increasing edge id, so the result is reproducible.
pub fn max_matching_bipartite(g: &Graph, b: &Bipartition) -> Result<Matching> {
    b.check(g)?;
    if let Some(a) = g.first_half_edge() {
        return Err(Error::HalfEdgePresent(a));
    }
    let adj = simple_adjacency(g);
    let left: Vec<usize> = g
        .vertices()
        .filter(|&v| b.side(v) == 0)
        .map(|v| v.0)
        .collect();
    let n = g.vertex_count();

    let mut mate = vec![NONE; n];
    let mut mate_edge = vec![EdgeId(NONE); n];
    let mut dist = vec![usize::MAX; n];

    loop {
        // layer the free left vertices
        let mut queue = VecDeque::new();
        for &u in &left {
            if mate[u] == NONE {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        let mut found = usize::MAX;
        while let Some(u) = queue.pop_front() {
            if dist[u] >= found {
                continue;
            }
            for &(v, _) in &adj[u] {
                let w = mate[v];
                if w == NONE {
                    found = found.min(dist[u] + 1);
                } else if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if found == usize::MAX {
            break;
        }

        let mut cursor = vec![0usize; n];
        for &u in &left {
            if mate[u] == NONE {
                augment(
                    u,
                    found,
                    &adj,
                    &mut mate,
                    &mut mate_edge,
                    &mut dist,
                    &mut cursor,
                );
            }
        }
    }

    Ok(Matching::from_edges(
        left.iter()
            .filter(|&&u| mate[u] != NONE)
            .map(|&u| mate_edge[u])
            .collect(),
    ))
}

/// Layered DFS from `root`; on success flips the path and returns true.
#[allow(clippy::too_many_arguments)]
fn augment(
    root: usize,
    limit: usize,
    adj: &[Vec<(usize, EdgeId)>],
    mate: &mut [usize],
    mate_edge: &mut [EdgeId],
    dist: &mut [usize],
    cursor: &mut [usize],
) -> bool {
    // stack of (left vertex, edge taken to reach the right vertex below it)
    let mut stack: Vec<usize> = vec![root];
    let mut taken: Vec<(usize, EdgeId)> = Vec::new();
    while let Some(&u) = stack.last() {
        let mut advanced = false;
        while cursor[u] < adj[u].len() {
            let (v, e) = adj[u][cursor[u]];
            cursor[u] += 1;
            let w = mate[v];
            if w == NONE {
                if dist[u] + 1 == limit {
                    taken.push((v, e));
                    // flip along the stack
                    for (&x, &(y, edge)) in stack.iter().zip(taken.iter()) {
                        mate[x] = y;
                        mate[y] = x;
                        mate_edge[x] = edge;
                        mate_edge[y] = edge;
                    }
                    return true;
                }
            } else if dist[w] != usize::MAX && dist[w] == dist[u] + 1 {
                taken.push((v, e));
                stack.push(w);
                advanced = true;
                break;
            }
        }
        if !advanced {
            dist[u] = usize::MAX;
            stack.pop();
            taken.pop();
        }
    }
    false
}
