use std::collections::VecDeque;

use super::{simple_adjacency, Matching};
use crate::graph::{EdgeId, Graph};

const NONE: usize = usize::MAX;

/// Maximum cardinality matching of a general multigraph (Edmonds' blossom
/// algorithm, O(|V|³)). Loops and half-edges are ignored; parallel edges are
/// searched once and reported by their least edge id.
pub fn max_matching_general(g: &Graph) -> Matching {
    let adj = simple_adjacency(g);
    let mut search = Blossom::new(&adj);

    // greedy start: vertices and neighbours in increasing order
    for (v, neighbours) in adj.iter().enumerate() {
        if search.mate[v] == NONE {
            if let Some(&(w, _)) = neighbours.iter().find(|&&(w, _)| search.mate[w] == NONE) {
                search.mate[v] = w;
                search.mate[w] = v;
            }
        }
    }
    for root in 0..search.n {
        if search.mate[root] == NONE {
            if let Some(end) = search.find_path(root) {
                search.flip(end);
            }
        }
    }

    let mut edges = Vec::new();
    for (v, neighbours) in adj.iter().enumerate() {
        let w = search.mate[v];
        if w != NONE && v < w {
            let e = neighbours
                .iter()
                .find(|&&(x, _)| x == w)
                .map(|&(_, e)| e)
                .expect("matched vertices are adjacent");
            edges.push(e);
        }
    }
    Matching::from_edges(edges)
}

struct Blossom<'a> {
    n: usize,
    adj: &'a [Vec<(usize, EdgeId)>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [Vec<(usize, EdgeId)>]) -> Self {
        let n = adj.len();
        Blossom {
            n,
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.n];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, stem: usize, mut child: usize) {
        while self.base[v] != stem {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS over the alternating forest rooted at `root`; returns the free
    /// vertex ending an augmenting path.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx].0;
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let stem = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, stem, to);
                    self.mark_path(to, stem, v);
                    for i in 0..self.n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = stem;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn flip(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}
