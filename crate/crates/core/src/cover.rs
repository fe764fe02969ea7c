//! Covering maps and canonical double covers.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{ArcData, ArcId, Graph, VertexId};

/// A graph morphism given by explicit vertex and arc tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringMap {
    pub source: Graph,
    pub target: Graph,
    pub vertex_map: Vec<VertexId>,
    pub arc_map: Vec<ArcId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverViolation {
    VertexImageOutOfRange { vertex: VertexId },
    ArcImageOutOfRange { arc: ArcId },
    InitialVertexMismatch { arc: ArcId },
    TerminalVertexMismatch { arc: ArcId },
    InverseMismatch { arc: ArcId },
    StarNotBijective { vertex: VertexId },
}

impl fmt::Display for CoverViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverViolation::VertexImageOutOfRange { vertex } => {
                write!(f, "vertex {vertex}: image out of range")
            }
            CoverViolation::ArcImageOutOfRange { arc } => {
                write!(f, "arc {arc}: image out of range")
            }
            CoverViolation::InitialVertexMismatch { arc } => {
                write!(f, "arc {arc}: initial vertex does not commute with the map")
            }
            CoverViolation::TerminalVertexMismatch { arc } => {
                write!(
                    f,
                    "arc {arc}: terminal vertex does not commute with the map"
                )
            }
            CoverViolation::InverseMismatch { arc } => {
                write!(f, "arc {arc}: inverse does not commute with the map")
            }
            CoverViolation::StarNotBijective { vertex } => {
                write!(f, "vertex {vertex}: star is not mapped bijectively")
            }
        }
    }
}

impl CoveringMap {
    /// The identity morphism of `g`.
    pub fn identity(g: &Graph) -> Self {
        CoveringMap {
            source: g.clone(),
            target: g.clone(),
            vertex_map: g.vertices().collect(),
            arc_map: g.arc_ids().collect(),
        }
    }

    /// Checks that the map is a morphism whose restriction to every star is
    /// a bijection. Size mismatches are errors; everything else is reported
    /// as data.
    pub fn verify(&self) -> Result<Vec<CoverViolation>> {
        let (src, dst) = (&self.source, &self.target);
        if self.vertex_map.len() != src.vertex_count() {
            return Err(Error::MapSizeMismatch(format!(
                "vertex map has {} entries for {} source vertices",
                self.vertex_map.len(),
                src.vertex_count()
            )));
        }
        if self.arc_map.len() != src.arc_count() {
            return Err(Error::MapSizeMismatch(format!(
                "arc map has {} entries for {} source arcs",
                self.arc_map.len(),
                src.arc_count()
            )));
        }

        let mut out = Vec::new();
        for v in src.vertices() {
            if self.vertex_map[v.0].0 >= dst.vertex_count() {
                out.push(CoverViolation::VertexImageOutOfRange { vertex: v });
            }
        }
        let vertex_ok = |v: VertexId| self.vertex_map[v.0].0 < dst.vertex_count();
        let arc_ok = |a: ArcId| self.arc_map[a.0].0 < dst.arc_count();
        for a in src.arc_ids() {
            if !arc_ok(a) {
                out.push(CoverViolation::ArcImageOutOfRange { arc: a });
                continue;
            }
            let image = self.arc_map[a.0];
            if vertex_ok(src.iota(a)) && self.vertex_map[src.iota(a).0] != dst.iota(image) {
                out.push(CoverViolation::InitialVertexMismatch { arc: a });
            }
            if vertex_ok(src.tau(a)) && self.vertex_map[src.tau(a).0] != dst.tau(image) {
                out.push(CoverViolation::TerminalVertexMismatch { arc: a });
            }
            let inv = src.inv(a);
            if arc_ok(inv) && self.arc_map[inv.0] != dst.inv(image) {
                out.push(CoverViolation::InverseMismatch { arc: a });
            }
        }

        let mut hits = vec![0usize; dst.arc_count()];
        for v in src.vertices() {
            if !vertex_ok(v) {
                continue;
            }
            let image = self.vertex_map[v.0];
            let star = src.star_unchecked(v);
            let target_star = dst.star_unchecked(image);
            let mut bijective = star.len() == target_star.len();
            for &a in star {
                if !arc_ok(a) {
                    bijective = false;
                    continue;
                }
                hits[self.arc_map[a.0].0] += 1;
            }
            for &b in target_star {
                if hits[b.0] != 1 {
                    bijective = false;
                }
            }
            for &a in star {
                if arc_ok(a) {
                    hits[self.arc_map[a.0].0] = 0;
                }
            }
            if !bijective {
                out.push(CoverViolation::StarNotBijective { vertex: v });
            }
        }
        Ok(out)
    }

    /// True when every target vertex has exactly two preimages. The map
    /// must be a valid covering.
    pub fn is_double_cover(&self) -> Result<bool> {
        let violations = self.verify()?;
        if !violations.is_empty() {
            return Err(Error::InvalidCovering(violations));
        }
        let mut count = vec![0usize; self.target.vertex_count()];
        for v in &self.vertex_map {
            count[v.0] += 1;
        }
        Ok(count.iter().all(|&c| c == 2))
    }

    /// Source vertices lying over `v`, sorted.
    pub fn fiber(&self, v: VertexId) -> Result<Vec<VertexId>> {
        if v.0 >= self.target.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: v.0,
                count: self.target.vertex_count(),
            });
        }
        Ok(self
            .vertex_map
            .iter()
            .enumerate()
            .filter(|(_, &w)| w == v)
            .map(|(u, _)| VertexId(u))
            .collect())
    }
}

/// `G ⊗ K2`: copy `i` of vertex `v` is `v + i·|V|`; arc `e` lifts to arcs
/// `2e` (leaving copy 0) and `2e + 1` (leaving copy 1). The cover graph is
/// the map's `source`.
pub fn canonical_double_cover(g: &Graph) -> CoveringMap {
    let n = g.vertex_count();
    let mut arcs = Vec::with_capacity(2 * g.arc_count());
    for arc in g.arcs() {
        let (v, w, inv) = (arc.iota.0, arc.tau.0, arc.inv.0);
        arcs.push(ArcData {
            iota: VertexId(v),
            tau: VertexId(w + n),
            inv: ArcId(2 * inv + 1),
        });
        arcs.push(ArcData {
            iota: VertexId(v + n),
            tau: VertexId(w),
            inv: ArcId(2 * inv),
        });
    }
    let source = Graph::from_arcs(2 * n, arcs);
    let vertex_map = (0..2 * n).map(|u| VertexId(u % n.max(1))).collect();
    let arc_map = (0..2 * g.arc_count()).map(|a| ArcId(a / 2)).collect();
    CoveringMap {
        source,
        target: g.clone(),
        vertex_map,
        arc_map,
    }
}
