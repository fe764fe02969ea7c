//! Perfect matchings: maximum matchings in bipartite and general graphs,
//! matchability certificates and families of pairwise edge-disjoint
//! perfect matchings in regular bipartite graphs.
//!
//! Loops and half-edges never belong to a matching. Parallel edges are
//! collapsed while searching and the least edge id of each parallel class
//! is reported.

mod bipartite;
mod blossom;

use crate::error::{Error, Result};
use crate::graph::{ArcData, ArcId, Bipartition, EdgeId, Graph, VertexId};

pub use bipartite::max_matching_bipartite;
pub use blossom::max_matching_general;

/// A set of endpoint-disjoint ordinary edges, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    edges: Vec<EdgeId>,
}

impl Matching {
    pub fn from_edges(mut edges: Vec<EdgeId>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        Matching { edges }
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Checks that every entry is an ordinary edge of `g` and that no two
    /// entries share an endpoint.
    pub fn check(&self, g: &Graph) -> Result<()> {
        let mut used = vec![false; g.vertex_count()];
        for &e in &self.edges {
            if e.0 >= g.arc_count() || g.edge_of(e.arc()) != e {
                return Err(Error::InvalidMatching(format!("{e} is not an edge id")));
            }
            if g.is_loop(e.arc()) {
                return Err(Error::InvalidMatching(format!("edge {e} is a loop")));
            }
            let (u, v) = g.endpoints(e);
            for w in [u, v] {
                if std::mem::replace(&mut used[w.0], true) {
                    return Err(Error::InvalidMatching(format!(
                        "vertex {w} is covered twice"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_perfect(&self, g: &Graph) -> bool {
        self.check(g).is_ok() && 2 * self.len() == g.vertex_count()
    }

    /// Partner of every vertex under the matching.
    pub fn mates(&self, g: &Graph) -> Vec<Option<VertexId>> {
        let mut mate = vec![None; g.vertex_count()];
        for &e in &self.edges {
            let (u, v) = g.endpoints(e);
            mate[u.0] = Some(v);
            mate[v.0] = Some(u);
        }
        mate
    }
}

/// Outcome of a maximum matching search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchabilityCertificate {
    pub matchable: bool,
    /// Perfect when `matchable`, otherwise a maximum matching.
    pub matching: Matching,
    /// `|V| - 2·|matching|`.
    pub deficiency: usize,
}

pub fn is_matchable(g: &Graph) -> MatchabilityCertificate {
    let matching = max_matching_general(g);
    let deficiency = g.vertex_count() - 2 * matching.len();
    MatchabilityCertificate {
        matchable: deficiency == 0,
        matching,
        deficiency,
    }
}

/// Arc renumbering produced by deleting edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcCorrespondence {
    /// New id of each old arc, `None` for deleted arcs.
    pub old_to_new: Vec<Option<ArcId>>,
    /// Old id of each new arc.
    pub new_to_old: Vec<ArcId>,
}

impl ArcCorrespondence {
    pub fn old_edge(&self, e: EdgeId) -> EdgeId {
        EdgeId(self.new_to_old[e.0].0)
    }

    pub fn new_edge(&self, e: EdgeId) -> Option<EdgeId> {
        self.old_to_new[e.0].map(|a| EdgeId(a.0))
    }
}

/// Deletes the edges of `m`, keeping the vertex set and the relative order
/// of the surviving arcs.
pub fn remove_matching(g: &Graph, m: &Matching) -> Result<(Graph, ArcCorrespondence)> {
    m.check(g)?;
    let mut old_to_new = vec![None; g.arc_count()];
    let mut new_to_old = Vec::with_capacity(g.arc_count() - 2 * m.len());
    for a in g.arc_ids() {
        if !m.contains(g.edge_of(a)) {
            old_to_new[a.0] = Some(ArcId(new_to_old.len()));
            new_to_old.push(a);
        }
    }
    let arcs = new_to_old
        .iter()
        .map(|&a| {
            let arc = g.arc(a);
            ArcData {
                iota: arc.iota,
                tau: arc.tau,
                inv: old_to_new[arc.inv.0].expect("inverse arc of a kept arc is kept"),
            }
        })
        .collect();
    Ok((
        Graph::from_arcs(g.vertex_count(), arcs),
        ArcCorrespondence {
            old_to_new,
            new_to_old,
        },
    ))
}

/// `k` pairwise edge-disjoint perfect matchings of a regular bipartite
/// graph, found by extracting a perfect matching and deleting it, `k` times.
/// Every intermediate graph is regular bipartite, so every round succeeds.
pub fn orthogonal_matchings(g: &Graph, b: &Bipartition, k: usize) -> Result<Vec<Matching>> {
    b.check(g)?;
    let degree = g.regularity()?.ok_or(Error::NotRegular)?;
    if k > degree {
        return Err(Error::TooManyMatchings {
            requested: k,
            degree,
        });
    }
    let mut current = g.clone();
    // current arc id -> original arc id
    let mut origin: Vec<ArcId> = g.arc_ids().collect();
    let mut out = Vec::with_capacity(k);
    for round in 0..k {
        let m = max_matching_bipartite(&current, b)?;
        if !m.is_perfect(&current) {
            return Err(Error::Internal(format!(
                "regular bipartite remainder has no perfect matching in round {round}"
            )));
        }
        out.push(Matching::from_edges(
            m.edges().iter().map(|e| EdgeId(origin[e.0].0)).collect(),
        ));
        let (next, corr) = remove_matching(&current, &m)?;
        origin = corr.new_to_old.iter().map(|a| origin[a.0]).collect();
        current = next;
    }
    Ok(out)
}

/// Simple support of `g` restricted to ordinary edges: for every vertex,
/// its distinct neighbours paired with the least connecting edge id,
/// ordered by that edge id.
pub(crate) fn simple_adjacency(g: &Graph) -> Vec<Vec<(usize, EdgeId)>> {
    let n = g.vertex_count();
    let mut best: Vec<std::collections::HashMap<usize, EdgeId>> = vec![Default::default(); n];
    for e in g.edges() {
        let (u, v) = g.endpoints(e);
        if u == v {
            continue;
        }
        for (x, y) in [(u.0, v.0), (v.0, u.0)] {
            best[x]
                .entry(y)
                .and_modify(|cur| *cur = (*cur).min(e))
                .or_insert(e);
        }
    }
    best.into_iter()
        .map(|m| {
            let mut adj: Vec<(usize, EdgeId)> = m.into_iter().collect();
            adj.sort_unstable_by_key(|&(_, e)| e);
            adj
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for i in 0..n {
            g.add_edge(VertexId(i), VertexId((i + 1) % n)).unwrap();
        }
        g
    }

    fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(VertexId(i), VertexId(j)).unwrap();
            }
        }
        g
    }

    fn k33() -> Graph {
        let mut g = Graph::new(6);
        for i in 0..3 {
            for j in 3..6 {
                g.add_edge(VertexId(i), VertexId(j)).unwrap();
            }
        }
        g
    }

    #[test]
    fn matching_check_rejects_loops_and_overlaps() {
        let mut g = Graph::new(3);
        let e0 = g.add_edge(VertexId(0), VertexId(1)).unwrap();
        let e1 = g.add_edge(VertexId(1), VertexId(2)).unwrap();
        let l = g.add_loop(VertexId(2)).unwrap();
        let h = g.add_half_edge(VertexId(0)).unwrap();
        assert!(Matching::from_edges(vec![e0]).check(&g).is_ok());
        assert!(Matching::from_edges(vec![e0, e1]).check(&g).is_err());
        assert!(Matching::from_edges(vec![l]).check(&g).is_err());
        assert!(Matching::from_edges(vec![h]).check(&g).is_err());
        assert!(Matching::from_edges(vec![EdgeId(1)]).check(&g).is_err());
    }

    #[test]
    fn removing_a_perfect_matching_from_c4() {
        let g = cycle(4);
        let m = Matching::from_edges(vec![EdgeId(0), EdgeId(4)]);
        let (h, corr) = remove_matching(&g, &m).unwrap();
        assert_eq!(h.edge_count(), 2);
        assert_eq!(h.connected_components().len(), 2);
        assert!(h.validate().is_empty());
        assert_eq!(
            corr.new_to_old,
            vec![ArcId(2), ArcId(3), ArcId(6), ArcId(7)]
        );
        assert_eq!(corr.new_edge(EdgeId(2)), Some(EdgeId(0)));
        assert_eq!(corr.new_edge(EdgeId(0)), None);
        assert_eq!(corr.old_edge(EdgeId(2)), EdgeId(6));
    }

    #[test]
    fn k4_minus_perfect_matching_is_a_4_cycle() {
        let g = complete(4);
        let m = max_matching_general(&g);
        assert!(m.is_perfect(&g));
        let (h, _) = remove_matching(&g, &m).unwrap();
        assert_eq!(h.edge_count(), 4);
        assert_eq!(h.regularity().unwrap(), Some(2));
        assert!(h.is_connected());
        for v in g.vertices() {
            assert_eq!(h.degree(v).unwrap(), 2);
        }
    }

    #[test]
    fn k33_minus_perfect_matching_is_a_6_cycle() {
        let g = k33();
        let b = g.bipartition().unwrap();
        let m = max_matching_bipartite(&g, &b).unwrap();
        assert_eq!(m.len(), 3);
        let (h, _) = remove_matching(&g, &m).unwrap();
        assert_eq!(h.regularity().unwrap(), Some(2));
        assert!(h.is_connected());
        assert!(h.bipartition().is_some());
    }

    #[test]
    fn remove_rejects_non_matchings() {
        let g = cycle(4);
        let bad = Matching::from_edges(vec![EdgeId(0), EdgeId(2)]);
        assert!(matches!(
            remove_matching(&g, &bad),
            Err(Error::InvalidMatching(_))
        ));
    }

    #[test]
    fn orthogonal_matchings_of_k33_partition_edges() {
        let g = k33();
        let b = g.bipartition().unwrap();
        let ms = orthogonal_matchings(&g, &b, 3).unwrap();
        let mut all: Vec<EdgeId> = ms.iter().flat_map(|m| m.edges().to_vec()).collect();
        for m in &ms {
            assert!(m.is_perfect(&g));
        }
        all.sort();
        assert_eq!(all, g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn orthogonal_matchings_of_c4_are_antipodal_pairs() {
        let g = cycle(4);
        let b = g.bipartition().unwrap();
        let ms = orthogonal_matchings(&g, &b, 2).unwrap();
        assert_eq!(
            ms,
            vec![
                Matching::from_edges(vec![EdgeId(0), EdgeId(4)]),
                Matching::from_edges(vec![EdgeId(2), EdgeId(6)]),
            ]
        );
    }

    #[test]
    fn parallel_edges_are_used_one_at_a_time() {
        let mut g = Graph::new(2);
        for _ in 0..4 {
            g.add_edge(VertexId(0), VertexId(1)).unwrap();
        }
        let b = g.bipartition().unwrap();
        let ms = orthogonal_matchings(&g, &b, 4).unwrap();
        let singletons: Vec<Vec<EdgeId>> = ms.iter().map(|m| m.edges().to_vec()).collect();
        assert_eq!(
            singletons,
            vec![
                vec![EdgeId(0)],
                vec![EdgeId(2)],
                vec![EdgeId(4)],
                vec![EdgeId(6)]
            ]
        );
    }

    #[test]
    fn orthogonal_matchings_errors() {
        let g = k33();
        let b = g.bipartition().unwrap();
        assert!(matches!(
            orthogonal_matchings(&g, &b, 4),
            Err(Error::TooManyMatchings {
                requested: 4,
                degree: 3
            })
        ));
        let mut path = Graph::new(3);
        path.add_edge(VertexId(0), VertexId(1)).unwrap();
        path.add_edge(VertexId(1), VertexId(2)).unwrap();
        let pb = path.bipartition().unwrap();
        assert_eq!(orthogonal_matchings(&path, &pb, 1), Err(Error::NotRegular));
        let wrong = Bipartition::from_sides(vec![0; 6]).unwrap();
        assert!(matches!(
            orthogonal_matchings(&g, &wrong, 1),
            Err(Error::InvalidBipartition(_))
        ));
    }

    #[test]
    fn certificates() {
        let k4 = is_matchable(&complete(4));
        assert!(k4.matchable);
        assert_eq!(k4.deficiency, 0);
        let tri = is_matchable(&cycle(3));
        assert!(!tri.matchable);
        assert_eq!(tri.deficiency, 1);
        assert_eq!(tri.matching.len(), 1);
    }
}
