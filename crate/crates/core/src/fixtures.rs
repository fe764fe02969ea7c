//! Named graphs used throughout the tests and the command line examples.

use crate::graph::{Graph, VertexId};

fn edges(n: usize, list: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    let mut g = Graph::new(n);
    for (u, v) in list {
        g.add_edge(VertexId(u), VertexId(v))
            .expect("fixture vertices are in range");
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Graph {
    edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// Sides `[0, a)` and `[a, a + b)`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i + 5`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    edges(10, outer.chain(spokes).chain(inner))
}

/// Two vertices joined by `k` parallel edges.
pub fn dipole(k: usize) -> Graph {
    edges(2, (0..k).map(|_| (0, 1)))
}

/// One vertex with one loop.
pub fn single_loop() -> Graph {
    crate::factorization::bouquet(1, 0)
}

/// One vertex with one half-edge.
pub fn single_half_edge() -> Graph {
    crate::factorization::bouquet(0, 1)
}

/// Simple cubic graph on 16 vertices without a perfect matching: a hub `0`
/// joined to three 5-vertex gadgets. Gadget `k` has vertices
/// `b, c, d, e, f = 1 + 5k .. 5 + 5k`, with `b` adjacent to the hub.
/// Removing the hub leaves three odd components.
pub fn cubic_no_perfect_matching() -> Graph {
    let mut list = Vec::new();
    for k in 0..3 {
        let [b, c, d, e, f] = [1, 2, 3, 4, 5].map(|x| x + 5 * k);
        list.extend([
            (0, b),
            (b, c),
            (c, f),
            (f, d),
            (d, b),
            (c, e),
            (e, d),
            (e, f),
        ]);
    }
    edges(16, list)
}

/// 4-regular graph on 10 vertices with four half-edges: a hub `0` with a
/// half-edge, joined to three triangles. Triangle `k` has vertices
/// `b, c, d = 1 + 3k .. 3 + 3k`; `b` carries a half-edge and is adjacent to
/// the hub, `c` and `d` each carry a loop.
pub fn quartic_with_half_edges() -> Graph {
    let mut g = Graph::new(10);
    let add = |g: &mut Graph, u: usize, v: usize| {
        g.add_edge(VertexId(u), VertexId(v)).expect("in range");
    };
    for k in 0..3 {
        let [b, c, d] = [1, 2, 3].map(|x| x + 3 * k);
        add(&mut g, b, c);
        add(&mut g, c, d);
        add(&mut g, d, b);
        g.add_half_edge(VertexId(b)).expect("in range");
        g.add_loop(VertexId(c)).expect("in range");
        g.add_loop(VertexId(d)).expect("in range");
    }
    for k in 0..3 {
        add(&mut g, 0, 1 + 3 * k);
    }
    g.add_half_edge(VertexId(0)).expect("in range");
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gadget_shapes() {
        let left = cubic_no_perfect_matching();
        assert!(left.validate().is_empty());
        assert_eq!(left.vertex_count(), 16);
        assert_eq!(left.regularity().unwrap(), Some(3));
        assert!(!left.has_loops());
        assert!(left.is_connected());

        let right = quartic_with_half_edges();
        assert!(right.validate().is_empty());
        assert_eq!(right.vertex_count(), 10);
        assert_eq!(right.regularity().unwrap(), Some(4));
        assert_eq!(
            right.arc_ids().filter(|&a| right.is_half_edge(a)).count(),
            4
        );
        assert!(right.is_connected());
    }

    #[test]
    fn standard_graphs() {
        assert_eq!(petersen().regularity().unwrap(), Some(3));
        assert_eq!(complete_bipartite(3, 3).regularity().unwrap(), Some(3));
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(dipole(3).regularity().unwrap(), Some(3));
    }
}
