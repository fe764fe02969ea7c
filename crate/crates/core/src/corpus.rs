//! Seeded random and exhaustive generators of regular multigraphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexId};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x5c4e_1e12;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Record {
    Edge(usize, usize),
    Half(usize),
}

fn build(n: usize, records: &[Record]) -> Graph {
    let mut g = Graph::new(n);
    for r in records {
        match *r {
            Record::Edge(u, v) => g.add_edge(VertexId(u), VertexId(v)),
            Record::Half(v) => g.add_half_edge(VertexId(v)),
        }
        .expect("generated vertices are in range");
    }
    g
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn component_labels(n: usize, records: &[Record]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    for r in records {
        if let Record::Edge(u, v) = *r {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[a] = b;
        }
    }
    (0..n).map(|x| find(&mut parent, x)).collect()
}

/// Merges components by degree-preserving edge switches. When `left` is
/// given, switches keep every edge between the two sides. Returns false if
/// some component has no ordinary edge or loop to switch, or if switching
/// does not converge (e.g. degree 1 on more than two vertices).
fn connect(n: usize, records: &mut [Record], left: Option<usize>, rng: &mut impl Rng) -> bool {
    for _ in 0..4 * n + 4 {
        let label = component_labels(n, records);
        let root = label[0];
        let Some(other) = label.iter().copied().find(|&c| c != root) else {
            return true;
        };
        let pick = |comp: usize, rng: &mut dyn rand::RngCore| -> Option<usize> {
            let options: Vec<usize> = records
                .iter()
                .enumerate()
                .filter(|(_, r)| matches!(r, Record::Edge(u, _) if label[*u] == comp))
                .map(|(i, _)| i)
                .collect();
            options.choose(rng).copied()
        };
        let (Some(i), Some(j)) = (pick(root, rng), pick(other, rng)) else {
            return false;
        };
        let (Record::Edge(a, b), Record::Edge(c, d)) = (records[i], records[j]) else {
            unreachable!("picked records are edges");
        };
        match left {
            Some(half) => {
                // orient both edges left -> right
                let (a, b) = if a < half { (a, b) } else { (b, a) };
                let (c, d) = if c < half { (c, d) } else { (d, c) };
                records[i] = Record::Edge(a, d);
                records[j] = Record::Edge(c, b);
            }
            None => {
                records[i] = Record::Edge(a, c);
                records[j] = Record::Edge(b, d);
            }
        }
    }
    false
}

/// Options for [`random_regular`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegularOptions {
    pub half_edges: usize,
    pub loops: bool,
    pub parallel_edges: bool,
}

impl Default for RegularOptions {
    fn default() -> Self {
        RegularOptions {
            half_edges: 0,
            loops: true,
            parallel_edges: true,
        }
    }
}

/// A connected `degree`-regular multigraph on `n` vertices from the
/// configuration model, with `opts.half_edges` stubs left as half-edges.
/// Returns `None` when the parameters are infeasible or no sample was
/// accepted.
pub fn random_regular(
    rng: &mut impl Rng,
    n: usize,
    degree: usize,
    opts: RegularOptions,
) -> Option<Graph> {
    let stubs_total = n * degree;
    if n == 0 || opts.half_edges > stubs_total || (stubs_total - opts.half_edges) % 2 == 1 {
        return None;
    }
    if degree == 0 {
        return (n == 1).then(|| Graph::new(1));
    }
    for _ in 0..200 {
        let mut stubs: Vec<usize> = (0..n)
            .flat_map(|v| std::iter::repeat_n(v, degree))
            .collect();
        stubs.shuffle(rng);
        let (halves, paired) = stubs.split_at(opts.half_edges);
        let mut records: Vec<Record> = halves.iter().map(|&v| Record::Half(v)).collect();
        records.extend(paired.chunks(2).map(|p| Record::Edge(p[0], p[1])));
        if !repair(&mut records, opts, rng) || !connect(n, &mut records, None, rng) {
            continue;
        }
        if !opts.loops
            && records
                .iter()
                .any(|r| matches!(r, Record::Edge(u, v) if u == v))
        {
            continue;
        }
        if !opts.parallel_edges && has_parallel(&records) {
            continue;
        }
        return Some(build(n, &records));
    }
    None
}

/// Records that are loops or repeated edges when those are disallowed.
fn bad_records(records: &[Record], opts: RegularOptions) -> Vec<usize> {
    let mut seen = std::collections::HashSet::new();
    let mut bad = Vec::new();
    for (i, r) in records.iter().enumerate() {
        if let Record::Edge(u, v) = *r {
            if (u == v && !opts.loops)
                || (!seen.insert((u.min(v), u.max(v))) && !opts.parallel_edges)
            {
                bad.push(i);
            }
        }
    }
    bad
}

/// Removes disallowed loops and parallel edges by random edge switches
/// that never increase their number.
fn repair(records: &mut [Record], opts: RegularOptions, rng: &mut impl Rng) -> bool {
    let edges: Vec<usize> = (0..records.len())
        .filter(|&i| matches!(records[i], Record::Edge(..)))
        .collect();
    let mut bad = bad_records(records, opts);
    for _ in 0..20 * records.len() + 20 {
        let Some(&i) = bad.choose(rng) else {
            return true;
        };
        let Some(&j) = edges.choose(rng) else {
            return false;
        };
        if i == j {
            continue;
        }
        let (Record::Edge(a, b), Record::Edge(c, d)) = (records[i], records[j]) else {
            unreachable!("both records are edges");
        };
        let (old_i, old_j) = (records[i], records[j]);
        if rng.gen() {
            records[i] = Record::Edge(a, c);
            records[j] = Record::Edge(b, d);
        } else {
            records[i] = Record::Edge(a, d);
            records[j] = Record::Edge(b, c);
        }
        let after = bad_records(records, opts);
        if after.len() <= bad.len() {
            bad = after;
        } else {
            records[i] = old_i;
            records[j] = old_j;
        }
    }
    bad.is_empty()
}

fn has_parallel(records: &[Record]) -> bool {
    let mut seen = std::collections::HashSet::new();
    records.iter().any(|r| match *r {
        Record::Edge(u, v) => !seen.insert((u.min(v), u.max(v))),
        Record::Half(_) => false,
    })
}

/// A connected `degree`-regular bipartite multigraph with sides `[0, half)`
/// and `[half, 2·half)`, built from `degree` random perfect matchings.
pub fn random_regular_bipartite(rng: &mut impl Rng, half: usize, degree: usize) -> Option<Graph> {
    if half == 0 || degree == 0 {
        return None;
    }
    if degree == 1 && half > 1 {
        return None;
    }
    for _ in 0..200 {
        let mut records = Vec::with_capacity(half * degree);
        for _ in 0..degree {
            let mut perm: Vec<usize> = (0..half).collect();
            perm.shuffle(rng);
            records.extend(
                perm.iter()
                    .enumerate()
                    .map(|(i, &j)| Record::Edge(i, half + j)),
            );
        }
        if connect(2 * half, &mut records, Some(half), rng) {
            return Some(build(2 * half, &records));
        }
    }
    None
}

/// Every labeled multigraph on `n` vertices in which each vertex has degree
/// `degree`, built from ordinary edges, loops and (when allowed)
/// half-edges. Isomorphic copies are not merged.
pub fn enumerate_regular(n: usize, degree: usize, half_edges: bool) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut residual = vec![degree; n];
    let mut records = Vec::new();
    enumerate_vertex(0, n, half_edges, &mut residual, &mut records, &mut out);
    out
}

fn enumerate_vertex(
    i: usize,
    n: usize,
    half_edges: bool,
    residual: &mut [usize],
    records: &mut Vec<Record>,
    out: &mut Vec<Graph>,
) {
    if i == n {
        out.push(build(n, records));
        return;
    }
    let r = residual[i];
    let max_half = if half_edges { r } else { 0 };
    for h in 0..=max_half {
        for l in 0..=(r - h) / 2 {
            let rest = r - h - 2 * l;
            let mark = records.len();
            records.extend(std::iter::repeat_n(Record::Half(i), h));
            records.extend(std::iter::repeat_n(Record::Edge(i, i), l));
            residual[i] = rest;
            enumerate_neighbours(i, i + 1, n, half_edges, residual, records, out);
            residual[i] = r;
            records.truncate(mark);
        }
    }
}

fn enumerate_neighbours(
    i: usize,
    j: usize,
    n: usize,
    half_edges: bool,
    residual: &mut [usize],
    records: &mut Vec<Record>,
    out: &mut Vec<Graph>,
) {
    if residual[i] == 0 {
        enumerate_vertex(i + 1, n, half_edges, residual, records, out);
        return;
    }
    if j == n {
        return;
    }
    let max = residual[i].min(residual[j]);
    for k in 0..=max {
        let mark = records.len();
        records.extend(std::iter::repeat_n(Record::Edge(i, j), k));
        residual[i] -= k;
        residual[j] -= k;
        enumerate_neighbours(i, j + 1, n, half_edges, residual, records, out);
        residual[i] += k;
        residual[j] += k;
        records.truncate(mark);
    }
}

/// Every simple graph on `n` vertices, one per subset of vertex pairs.
pub fn enumerate_simple(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    assert!(
        pairs.len() < 32,
        "too many vertices for exhaustive enumeration"
    );
    (0u32..(1u32 << pairs.len())).map(move |mask| {
        let records: Vec<Record> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &(u, v))| Record::Edge(u, v))
            .collect();
        build(n, &records)
    })
}

/// A random multigraph on `n` vertices with `m` ordinary edges (possibly
/// parallel), `loops` loops and `halves` half-edges; not necessarily
/// regular or connected.
pub fn random_multigraph(
    rng: &mut impl Rng,
    n: usize,
    m: usize,
    loops: usize,
    halves: usize,
) -> Graph {
    let mut records = Vec::new();
    if n >= 2 {
        for _ in 0..m {
            let u = rng.gen_range(0..n);
            let mut v = rng.gen_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            records.push(Record::Edge(u, v));
        }
    }
    if n >= 1 {
        for _ in 0..loops {
            let v = rng.gen_range(0..n);
            records.push(Record::Edge(v, v));
        }
        for _ in 0..halves {
            records.push(Record::Half(rng.gen_range(0..n)));
        }
    }
    records.shuffle(rng);
    build(n, &records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_regular_is_connected_and_regular() {
        let mut r = rng(7);
        for degree in 1..=6 {
            for n in [2, 5, 12, 40] {
                let opts = RegularOptions::default();
                if let Some(g) = random_regular(&mut r, n, degree, opts) {
                    assert!(g.validate().is_empty());
                    assert_eq!(g.regularity().unwrap(), Some(degree));
                    assert!(g.is_connected());
                }
            }
        }
        let g = random_regular(
            &mut r,
            30,
            4,
            RegularOptions {
                half_edges: 6,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(g.arc_ids().filter(|&a| g.is_half_edge(a)).count(), 6);
        assert_eq!(g.regularity().unwrap(), Some(4));
        assert!(random_regular(&mut r, 3, 3, RegularOptions::default()).is_none());
    }

    #[test]
    fn simple_option_is_respected() {
        let mut r = rng(11);
        let opts = RegularOptions {
            loops: false,
            parallel_edges: false,
            half_edges: 0,
        };
        let g = random_regular(&mut r, 20, 3, opts).unwrap();
        assert!(!g.has_loops());
        assert!(!has_parallel(
            &g.edges()
                .map(|e| {
                    let (u, v) = g.endpoints(e);
                    Record::Edge(u.0, v.0)
                })
                .collect::<Vec<_>>()
        ));
    }

    #[test]
    fn random_bipartite() {
        let mut r = rng(3);
        let g = random_regular_bipartite(&mut r, 50, 5).unwrap();
        assert_eq!(g.regularity().unwrap(), Some(5));
        assert!(g.is_connected());
        let b = g.bipartition().unwrap();
        assert!((0..50).all(|v| b.side(VertexId(v)) == 0));
    }

    #[test]
    fn determinism() {
        let a = random_regular(
            &mut rng(5),
            25,
            5,
            RegularOptions {
                half_edges: 5,
                ..Default::default()
            },
        );
        let b = random_regular(
            &mut rng(5),
            25,
            5,
            RegularOptions {
                half_edges: 5,
                ..Default::default()
            },
        );
        assert_eq!(a, b);
    }

    #[test]
    fn enumeration_counts() {
        // a loop at each vertex, or a double edge
        assert_eq!(enumerate_regular(2, 2, false).len(), 2);
        // with half-edges on one vertex of degree 1: just the half-edge
        assert_eq!(enumerate_regular(1, 1, true).len(), 1);
        assert_eq!(enumerate_regular(1, 1, false).len(), 0);
        // simple graphs on 4 vertices
        assert_eq!(enumerate_simple(4).count(), 64);
        for g in enumerate_regular(4, 4, true) {
            assert_eq!(g.regularity().unwrap(), Some(4));
        }
    }
}
