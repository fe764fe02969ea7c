//! Euler circuits, balanced orientations and 2-factorizations of
//! even-regular multigraphs, and covering maps onto one-vertex bouquets.
//!
//! A 2d-regular graph without half-edges is oriented along Euler circuits
//! so that every vertex has d outgoing arcs. Splitting each vertex into an
//! "out" copy and an "in" copy turns the forward arcs into a d-regular
//! bipartite graph, whose d edge-disjoint perfect matchings are d
//! successor maps: the 2-factors.

use crate::cover::CoveringMap;
use crate::error::{Error, Result};
use crate::graph::{ArcId, Bipartition, EdgeId, Graph, VertexId};
use crate::matching::{orthogonal_matchings, Matching};

/// One arc chosen from every edge, balanced at every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerOrientation {
    forward: Vec<ArcId>,
}

impl EulerOrientation {
    /// Forward arcs, sorted.
    pub fn forward(&self) -> &[ArcId] {
        &self.forward
    }

    pub fn is_forward(&self, a: ArcId) -> bool {
        self.forward.binary_search(&a).is_ok()
    }
}

/// A spanning subgraph in which every vertex has one outgoing arc and one
/// incoming arc: the graph of a permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoFactor {
    successor: Vec<ArcId>,
}

impl TwoFactor {
    pub fn from_successors(successor: Vec<ArcId>) -> Self {
        TwoFactor { successor }
    }

    /// The outgoing arc at `v`.
    pub fn successor(&self, v: VertexId) -> ArcId {
        self.successor[v.0]
    }

    pub fn successors(&self) -> &[ArcId] {
        &self.successor
    }

    /// `v ↦ τ(successor(v))`.
    pub fn permutation(&self, g: &Graph) -> Vec<VertexId> {
        self.successor.iter().map(|&a| g.tau(a)).collect()
    }

    /// Underlying edges, sorted.
    pub fn edges(&self, g: &Graph) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = self.successor.iter().map(|&a| g.edge_of(a)).collect();
        out.sort_unstable();
        out
    }

    /// Successor arcs start at their vertex and the induced vertex map is a
    /// permutation.
    pub fn is_valid(&self, g: &Graph) -> bool {
        if self.successor.len() != g.vertex_count() {
            return false;
        }
        let mut hit = vec![false; g.vertex_count()];
        for (v, &a) in self.successor.iter().enumerate() {
            if a.0 >= g.arc_count() || g.iota(a).0 != v {
                return false;
            }
            if std::mem::replace(&mut hit[g.tau(a).0], true) {
                return false;
            }
        }
        true
    }
}

/// One vertex carrying `free_loops` loops and `half_edges` half-edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bouquet {
    pub free_loops: usize,
    pub half_edges: usize,
}

impl Bouquet {
    pub fn degree(&self) -> usize {
        2 * self.free_loops + self.half_edges
    }

    /// Loops first: loop `i` is arcs `2i` (forward) and `2i + 1`; half-edge
    /// `j` is arc `2·free_loops + j`.
    pub fn graph(&self) -> Graph {
        let mut g = Graph::new(1);
        for _ in 0..self.free_loops {
            g.add_loop(VertexId(0)).expect("vertex 0 exists");
        }
        for _ in 0..self.half_edges {
            g.add_half_edge(VertexId(0)).expect("vertex 0 exists");
        }
        g
    }
}

pub fn bouquet(free_loops: usize, half_edges: usize) -> Graph {
    Bouquet {
        free_loops,
        half_edges,
    }
    .graph()
}

fn require_even_without_half_edges(g: &Graph) -> Result<()> {
    if let Some(a) = g.first_half_edge() {
        return Err(Error::HalfEdgePresent(a));
    }
    for v in g.vertices() {
        let degree = g.degree(v)?;
        if degree % 2 == 1 {
            return Err(Error::OddDegree { vertex: v, degree });
        }
    }
    Ok(())
}

/// Hierholzer walk from `start` over the edges not yet marked in `used`.
/// At each vertex the unused edge with the least id is taken next; a loop
/// is traversed along its canonical arc.
fn circuit_from(
    g: &Graph,
    start: VertexId,
    used: &mut [bool],
    cursor: &mut [usize],
    order: &[Vec<ArcId>],
) -> Vec<ArcId> {
    let mut stack: Vec<(VertexId, Option<ArcId>)> = vec![(start, None)];
    let mut circuit = Vec::new();
    while let Some(&(v, _)) = stack.last() {
        let star = &order[v.0];
        while cursor[v.0] < star.len() && used[g.edge_of(star[cursor[v.0]]).0] {
            cursor[v.0] += 1;
        }
        if let Some(&a) = star.get(cursor[v.0]) {
            let e = g.edge_of(a);
            used[e.0] = true;
            let step = if g.is_loop(a) { e.arc() } else { a };
            stack.push((g.tau(step), Some(step)));
        } else {
            let (_, arc) = stack.pop().expect("stack is non-empty");
            if let Some(a) = arc {
                circuit.push(a);
            }
        }
    }
    circuit.reverse();
    circuit
}

/// Stars ordered by edge id, the traversal order of [`circuit_from`].
fn edge_ordered_stars(g: &Graph) -> Vec<Vec<ArcId>> {
    g.vertices()
        .map(|v| {
            let mut star = g.star_unchecked(v).to_vec();
            star.sort_by_key(|&a| (g.edge_of(a), a));
            star
        })
        .collect()
}

/// A closed walk from vertex 0 using every edge exactly once.
pub fn euler_circuit(g: &Graph) -> Result<Vec<ArcId>> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    require_even_without_half_edges(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut used = vec![false; g.arc_count()];
    let mut cursor = vec![0; g.vertex_count()];
    Ok(circuit_from(
        g,
        VertexId(0),
        &mut used,
        &mut cursor,
        &edge_ordered_stars(g),
    ))
}

/// Orients every edge along an Euler circuit of its component, so that
/// each vertex has as many outgoing as incoming forward arcs.
pub fn orient_by_euler(g: &Graph) -> Result<EulerOrientation> {
    require_even_without_half_edges(g)?;
    let order = edge_ordered_stars(g);
    let mut used = vec![false; g.arc_count()];
    let mut cursor = vec![0; g.vertex_count()];
    let mut forward = Vec::with_capacity(g.edge_count());
    for component in g.connected_components() {
        forward.extend(circuit_from(
            g,
            component[0],
            &mut used,
            &mut cursor,
            &order,
        ));
    }
    forward.sort_unstable();
    Ok(EulerOrientation { forward })
}

/// `d` edge-disjoint 2-factors of a 2d-regular graph without half-edges,
/// jointly covering every edge.
pub fn two_factorization(g: &Graph) -> Result<Vec<TwoFactor>> {
    let degree = g.regularity()?.ok_or(Error::NotRegular)?;
    require_even_without_half_edges(g)?;
    let d = degree / 2;
    if d == 0 {
        return Ok(Vec::new());
    }
    let orientation = orient_by_euler(g)?;
    let n = g.vertex_count();

    // out-copies are [0, n), in-copies are [n, 2n)
    let mut split = Graph::new(2 * n);
    let mut split_edge_arc = vec![ArcId(usize::MAX); 2 * orientation.forward.len()];
    for &a in &orientation.forward {
        let e = split.add_edge(g.iota(a), VertexId(n + g.tau(a).0))?;
        split_edge_arc[e.0] = a;
    }
    let sides = Bipartition::from_sides((0..2 * n).map(|v| u8::from(v >= n)).collect())?;
    let matchings = orthogonal_matchings(&split, &sides, d)?;

    let factors = matchings
        .into_iter()
        .map(|m| {
            let mut successor = vec![ArcId(usize::MAX); n];
            for &e in m.edges() {
                let a = split_edge_arc[e.0];
                successor[g.iota(a).0] = a;
            }
            TwoFactor { successor }
        })
        .collect();
    Ok(factors)
}

/// Covering of `g` onto `bouquet(factors.len(), matchings.len())`: the
/// successor arcs of factor `i` go to the forward arc of loop `i`, their
/// inverses to its backward arc, and both arcs of every edge of matching
/// `j` to half-edge `j`.
pub fn cover_to_bouquet(
    g: &Graph,
    factors: &[TwoFactor],
    matchings: &[Matching],
) -> Result<CoveringMap> {
    let target = Bouquet {
        free_loops: factors.len(),
        half_edges: matchings.len(),
    };
    let images = partition_images(
        g,
        factors,
        matchings,
        |i| (ArcId(2 * i), ArcId(2 * i + 1)),
        |j| ArcId(2 * factors.len() + j),
    )?;
    let map = CoveringMap {
        source: g.clone(),
        target: target.graph(),
        vertex_map: vec![VertexId(0); g.vertex_count()],
        arc_map: images,
    };
    let violations = map.verify()?;
    if !violations.is_empty() {
        return Err(Error::PartitionViolated(format!(
            "resulting map is not a covering: {}",
            violations[0]
        )));
    }
    Ok(map)
}

/// Assigns an image to every arc of `g` from a factor/matching partition of
/// its edges, failing if an arc is claimed twice or left unclaimed.
pub(crate) fn partition_images<T: Copy>(
    g: &Graph,
    factors: &[TwoFactor],
    matchings: &[Matching],
    factor_images: impl Fn(usize) -> (T, T),
    matching_image: impl Fn(usize) -> T,
) -> Result<Vec<T>> {
    if let Some(a) = g.first_half_edge() {
        return Err(Error::HalfEdgePresent(a));
    }
    let mut images: Vec<Option<T>> = vec![None; g.arc_count()];
    let mut claim = |a: ArcId, image: T| -> Result<()> {
        let slot = images.get_mut(a.0).ok_or(Error::ArcOutOfRange {
            arc: a.0,
            count: g.arc_count(),
        })?;
        if slot.is_some() {
            return Err(Error::PartitionViolated(format!("arc {a} is used twice")));
        }
        *slot = Some(image);
        Ok(())
    };
    for (i, factor) in factors.iter().enumerate() {
        if !factor.is_valid(g) {
            return Err(Error::PartitionViolated(format!(
                "factor {i} is not a 2-factor"
            )));
        }
        let (plus, minus) = factor_images(i);
        for &a in factor.successors() {
            claim(a, plus)?;
            claim(g.inv(a), minus)?;
        }
    }
    for (j, m) in matchings.iter().enumerate() {
        if !m.is_perfect(g) {
            return Err(Error::PartitionViolated(format!(
                "matching {j} is not a perfect matching"
            )));
        }
        for &e in m.edges() {
            claim(e.arc(), matching_image(j))?;
            claim(g.inv(e.arc()), matching_image(j))?;
        }
    }
    images
        .into_iter()
        .enumerate()
        .map(|(a, image)| {
            image.ok_or_else(|| Error::PartitionViolated(format!("arc {a} is not covered")))
        })
        .collect()
}
