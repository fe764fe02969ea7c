//! Arc-based multigraphs with an arc-reversal involution.
//!
//! A graph is a vertex count plus a table of arcs. Every arc records its
//! initial vertex, terminal vertex and inverse arc. An ordinary edge or a
//! loop is a pair of distinct mutually inverse arcs; a half-edge is a single
//! arc that is its own inverse. Degrees count arcs leaving a vertex, so a
//! loop adds 2 and a half-edge adds 1.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcId(pub usize);

/// An edge, named by the smaller arc of its inverse pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl ArcId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl EdgeId {
    pub fn index(self) -> usize {
        self.0
    }

    /// The canonical arc of the edge.
    pub fn arc(self) -> ArcId {
        ArcId(self.0)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for ArcId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArcData {
    pub iota: VertexId,
    pub tau: VertexId,
    pub inv: ArcId,
}

/// What kind of edge an arc belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    Ordinary,
    Loop,
    HalfEdge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphViolation {
    EndpointOutOfRange { arc: ArcId },
    InverseOutOfRange { arc: ArcId },
    NotAnInvolution { arc: ArcId },
    InverseEndpoints { arc: ArcId },
    HalfEdgeEndpoints { arc: ArcId },
}

impl fmt::Display for GraphViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphViolation::EndpointOutOfRange { arc } => {
                write!(f, "arc {arc}: endpoint out of range")
            }
            GraphViolation::InverseOutOfRange { arc } => {
                write!(f, "arc {arc}: inverse arc out of range")
            }
            GraphViolation::NotAnInvolution { arc } => {
                write!(f, "arc {arc}: inverse of inverse is not the arc itself")
            }
            GraphViolation::InverseEndpoints { arc } => {
                write!(f, "arc {arc}: inverse arc endpoints are not swapped")
            }
            GraphViolation::HalfEdgeEndpoints { arc } => {
                write!(
                    f,
                    "arc {arc}: self-inverse arc must start and end at the same vertex"
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    arcs: Vec<ArcData>,
    stars: Vec<Vec<ArcId>>,
}

impl Graph {
    /// A graph with `vertex_count` vertices and no arcs.
    pub fn new(vertex_count: usize) -> Self {
        Graph {
            vertex_count,
            arcs: Vec::new(),
            stars: vec![Vec::new(); vertex_count],
        }
    }

    /// Builds a graph from a raw arc table without checking it. Use
    /// [`Graph::validate`] to find out whether the table is consistent.
    pub fn from_arcs(vertex_count: usize, arcs: Vec<ArcData>) -> Self {
        let mut stars = vec![Vec::new(); vertex_count];
        for (i, arc) in arcs.iter().enumerate() {
            if let Some(star) = stars.get_mut(arc.iota.0) {
                star.push(ArcId(i));
            }
        }
        Graph {
            vertex_count,
            arcs,
            stars,
        }
    }

    /// Like [`Graph::from_arcs`], but rejects inconsistent tables.
    pub fn try_from_arcs(
        vertex_count: usize,
        arcs: Vec<ArcData>,
    ) -> std::result::Result<Self, Vec<GraphViolation>> {
        let g = Graph::from_arcs(vertex_count, arcs);
        let violations = g.validate();
        if violations.is_empty() {
            Ok(g)
        } else {
            Err(violations)
        }
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.0 < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v.0,
                count: self.vertex_count,
            })
        }
    }

    fn push_arc(&mut self, data: ArcData) -> ArcId {
        let id = ArcId(self.arcs.len());
        self.arcs.push(data);
        self.stars[data.iota.0].push(id);
        id
    }

    /// Appends an edge `u -- v` as the arc pair `(u→v, v→u)`. With `u == v`
    /// this is a non-degenerate loop.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let first = ArcId(self.arcs.len());
        let second = ArcId(first.0 + 1);
        self.push_arc(ArcData {
            iota: u,
            tau: v,
            inv: second,
        });
        self.push_arc(ArcData {
            iota: v,
            tau: u,
            inv: first,
        });
        Ok(EdgeId(first.0))
    }

    pub fn add_loop(&mut self, v: VertexId) -> Result<EdgeId> {
        self.add_edge(v, v)
    }

    /// Appends a degenerate loop: one self-inverse arc at `v`.
    pub fn add_half_edge(&mut self, v: VertexId) -> Result<EdgeId> {
        self.check_vertex(v)?;
        let id = ArcId(self.arcs.len());
        self.push_arc(ArcData {
            iota: v,
            tau: v,
            inv: id,
        });
        Ok(EdgeId(id.0))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count).map(VertexId)
    }

    pub fn arc_ids(&self) -> impl Iterator<Item = ArcId> + '_ {
        (0..self.arcs.len()).map(ArcId)
    }

    pub fn arcs(&self) -> &[ArcData] {
        &self.arcs
    }

    pub fn arc(&self, a: ArcId) -> &ArcData {
        &self.arcs[a.0]
    }

    pub fn iota(&self, a: ArcId) -> VertexId {
        self.arcs[a.0].iota
    }

    pub fn tau(&self, a: ArcId) -> VertexId {
        self.arcs[a.0].tau
    }

    pub fn inv(&self, a: ArcId) -> ArcId {
        self.arcs[a.0].inv
    }

    pub fn edge_of(&self, a: ArcId) -> EdgeId {
        EdgeId(a.0.min(self.inv(a).0))
    }

    pub fn kind(&self, a: ArcId) -> EdgeKind {
        let arc = self.arc(a);
        if arc.inv == a {
            EdgeKind::HalfEdge
        } else if arc.iota == arc.tau {
            EdgeKind::Loop
        } else {
            EdgeKind::Ordinary
        }
    }

    pub fn is_half_edge(&self, a: ArcId) -> bool {
        self.inv(a) == a
    }

    /// True for loops of either kind.
    pub fn is_loop(&self, a: ArcId) -> bool {
        self.iota(a) == self.tau(a)
    }

    /// Edges in increasing id order.
    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.arcs
            .iter()
            .enumerate()
            .filter(|(i, arc)| arc.inv.0 >= *i)
            .map(|(i, _)| EdgeId(i))
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let arc = self.arc(e.arc());
        (arc.iota, arc.tau)
    }

    pub fn has_half_edges(&self) -> bool {
        self.arc_ids().any(|a| self.is_half_edge(a))
    }

    pub fn first_half_edge(&self) -> Option<ArcId> {
        self.arc_ids().find(|&a| self.is_half_edge(a))
    }

    pub fn has_loops(&self) -> bool {
        self.arc_ids().any(|a| self.is_loop(a))
    }

    /// Every violated structural invariant, with the offending arc.
    pub fn validate(&self) -> Vec<GraphViolation> {
        let mut out = Vec::new();
        let n = self.vertex_count;
        let m = self.arcs.len();
        for (i, arc) in self.arcs.iter().enumerate() {
            let id = ArcId(i);
            if arc.iota.0 >= n || arc.tau.0 >= n {
                out.push(GraphViolation::EndpointOutOfRange { arc: id });
                continue;
            }
            if arc.inv.0 >= m {
                out.push(GraphViolation::InverseOutOfRange { arc: id });
                continue;
            }
            let back = &self.arcs[arc.inv.0];
            if back.inv != id {
                out.push(GraphViolation::NotAnInvolution { arc: id });
            }
            if back.iota != arc.tau || back.tau != arc.iota {
                if arc.inv == id {
                    out.push(GraphViolation::HalfEdgeEndpoints { arc: id });
                } else {
                    out.push(GraphViolation::InverseEndpoints { arc: id });
                }
            }
        }
        out
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.stars[v.0].len())
    }

    /// Arcs starting at `v`, in increasing id order.
    pub fn star(&self, v: VertexId) -> Result<&[ArcId]> {
        self.check_vertex(v)?;
        Ok(&self.stars[v.0])
    }

    pub(crate) fn star_unchecked(&self, v: VertexId) -> &[ArcId] {
        &self.stars[v.0]
    }

    /// The common degree, or `None` when degrees differ.
    pub fn regularity(&self) -> Result<Option<usize>> {
        if self.vertex_count == 0 {
            return Err(Error::EmptyGraph);
        }
        let d = self.stars[0].len();
        Ok(self.stars.iter().all(|s| s.len() == d).then_some(d))
    }

    /// Components as sorted vertex lists, ordered by their least vertex.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.vertex_count];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(VertexId(v));
                for &a in &self.stars[v] {
                    let w = self.tau(a).0;
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// A proper 2-colouring, if one exists. The least vertex of each
    /// component lands on side 0. Loops of either kind rule it out.
    pub fn bipartition(&self) -> Option<Bipartition> {
        if self.has_loops() {
            return None;
        }
        const UNSET: u8 = u8::MAX;
        let mut side = vec![UNSET; self.vertex_count];
        let mut queue = VecDeque::new();
        for start in 0..self.vertex_count {
            if side[start] != UNSET {
                continue;
            }
            side[start] = 0;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for &a in &self.stars[v] {
                    let w = self.tau(a).0;
                    if side[w] == UNSET {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(Bipartition { side })
    }
}

/// A 2-colouring of the vertices; every arc joins side 0 to side 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    side: Vec<u8>,
}

impl Bipartition {
    /// Wraps an explicit side table. Entries must be 0 or 1.
    pub fn from_sides(side: Vec<u8>) -> Result<Self> {
        if let Some(v) = side.iter().position(|&s| s > 1) {
            return Err(Error::InvalidBipartition(format!(
                "vertex {v} has side {}",
                side[v]
            )));
        }
        Ok(Bipartition { side })
    }

    pub fn side(&self, v: VertexId) -> u8 {
        self.side[v.0]
    }

    pub fn sides(&self) -> &[u8] {
        &self.side
    }

    pub fn len(&self) -> usize {
        self.side.len()
    }

    pub fn is_empty(&self) -> bool {
        self.side.is_empty()
    }

    /// Checks that the colouring is proper for `g`.
    pub fn check(&self, g: &Graph) -> Result<()> {
        if self.side.len() != g.vertex_count() {
            return Err(Error::InvalidBipartition(format!(
                "{} sides for {} vertices",
                self.side.len(),
                g.vertex_count()
            )));
        }
        for a in g.arc_ids() {
            if self.side(g.iota(a)) == self.side(g.tau(a)) {
                return Err(Error::InvalidBipartition(format!(
                    "arc {a} joins two vertices on side {}",
                    self.side(g.iota(a))
                )));
            }
        }
        Ok(())
    }
}
