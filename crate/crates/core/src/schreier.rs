//! Schreier labelings over `F_d ∗ (Z/2Z)^{∗n}`, orbital graphs of
//! permutation actions, and the classification of connected regular
//! multigraphs.
//!
//! A labeling assigns to every arc a generator letter so that inverse arcs
//! carry inverse letters and every star sees each letter exactly once.
//! That is the same data as a covering onto `bouquet(d, n)`, and the same
//! data as a transitive action of the free product on the vertex set.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::cover::{canonical_double_cover, CoveringMap};
use crate::error::{Error, Result};
use crate::factorization::{partition_images, two_factorization, TwoFactor};
use crate::graph::{ArcId, Bipartition, Graph, VertexId};
use crate::matching::{
    is_matchable, max_matching_bipartite, orthogonal_matchings, remove_matching,
    MatchabilityCertificate, Matching,
};

/// `F_d ∗ (Z/2Z)^{∗n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupSignature {
    pub free_rank: usize,
    pub involution_count: usize,
}

impl GroupSignature {
    pub fn new(free_rank: usize, involution_count: usize) -> Self {
        GroupSignature {
            free_rank,
            involution_count,
        }
    }

    /// Degree of every Schreier graph of this group.
    pub fn degree(&self) -> usize {
        2 * self.free_rank + self.involution_count
    }

    /// All letters: `a0+ a0- a1+ … t0 t1 …`.
    pub fn letters(&self) -> impl Iterator<Item = GeneratorLetter> + '_ {
        (0..self.free_rank)
            .flat_map(|i| {
                [
                    GeneratorLetter::Free(i, Sign::Plus),
                    GeneratorLetter::Free(i, Sign::Minus),
                ]
            })
            .chain((0..self.involution_count).map(GeneratorLetter::Inv))
    }

    /// Dense position of a letter within [`GroupSignature::letters`].
    pub fn slot(&self, x: GeneratorLetter) -> Option<usize> {
        match x {
            GeneratorLetter::Free(i, s) if i < self.free_rank => {
                Some(2 * i + usize::from(s == Sign::Minus))
            }
            GeneratorLetter::Inv(j) if j < self.involution_count => Some(2 * self.free_rank + j),
            _ => None,
        }
    }
}

/// Written as `F1`, `F2*Z2`, `Z2^3`; the trivial group is `F0`.
impl fmt::Display for GroupSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (d, n) = (self.free_rank, self.involution_count);
        if d > 0 || n == 0 {
            write!(f, "F{d}")?;
            if n > 0 {
                write!(f, "*")?;
            }
        }
        match n {
            0 => Ok(()),
            1 => write!(f, "Z2"),
            _ => write!(f, "Z2^{n}"),
        }
    }
}

impl FromStr for GroupSignature {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let bad = || format!("bad group signature `{s}`");
        let mut free_rank = None;
        let mut involution_count = None;
        for part in s.split('*') {
            if let Some(d) = part.strip_prefix('F') {
                if free_rank.is_some() || involution_count.is_some() {
                    return Err(bad());
                }
                free_rank = Some(d.parse::<usize>().map_err(|_| bad())?);
            } else if part == "Z2" {
                if involution_count.is_some() {
                    return Err(bad());
                }
                involution_count = Some(1);
            } else if let Some(n) = part.strip_prefix("Z2^") {
                if involution_count.is_some() {
                    return Err(bad());
                }
                let n = n.parse::<usize>().map_err(|_| bad())?;
                if n < 2 {
                    return Err(bad());
                }
                involution_count = Some(n);
            } else {
                return Err(bad());
            }
        }
        if free_rank == Some(0) && involution_count.is_some() {
            return Err(bad());
        }
        if free_rank.is_none() && involution_count.is_none() {
            return Err(bad());
        }
        Ok(GroupSignature::new(
            free_rank.unwrap_or(0),
            involution_count.unwrap_or(0),
        ))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

/// A generator of the free factor (with a direction) or an involution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorLetter {
    Free(usize, Sign),
    Inv(usize),
}

impl GeneratorLetter {
    pub fn inverse(self) -> Self {
        match self {
            GeneratorLetter::Free(i, Sign::Plus) => GeneratorLetter::Free(i, Sign::Minus),
            GeneratorLetter::Free(i, Sign::Minus) => GeneratorLetter::Free(i, Sign::Plus),
            GeneratorLetter::Inv(j) => GeneratorLetter::Inv(j),
        }
    }

    pub fn is_involution(self) -> bool {
        matches!(self, GeneratorLetter::Inv(_))
    }
}

/// `a3+`, `a3-` or `t1`.
impl fmt::Display for GeneratorLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorLetter::Free(i, Sign::Plus) => write!(f, "a{i}+"),
            GeneratorLetter::Free(i, Sign::Minus) => write!(f, "a{i}-"),
            GeneratorLetter::Inv(j) => write!(f, "t{j}"),
        }
    }
}

impl FromStr for GeneratorLetter {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let bad = || format!("bad generator letter `{s}`");
        if let Some(rest) = s.strip_prefix('t') {
            return rest.parse().map(GeneratorLetter::Inv).map_err(|_| bad());
        }
        let rest = s.strip_prefix('a').ok_or_else(bad)?;
        let (index, sign) = if let Some(i) = rest.strip_suffix('+') {
            (i, Sign::Plus)
        } else if let Some(i) = rest.strip_suffix('-') {
            (i, Sign::Minus)
        } else {
            return Err(bad());
        };
        index
            .parse()
            .map(|i| GeneratorLetter::Free(i, sign))
            .map_err(|_| bad())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchreierLabeling {
    pub signature: GroupSignature,
    /// Letter of every arc, indexed by arc id.
    pub labels: Vec<GeneratorLetter>,
}

impl SchreierLabeling {
    pub fn label(&self, a: ArcId) -> GeneratorLetter {
        self.labels[a.0]
    }

    /// The equivalent morphism onto `bouquet(d, n)`; it is a covering iff
    /// the labeling verifies.
    pub fn to_bouquet_map(&self, g: &Graph) -> CoveringMap {
        let sig = self.signature;
        let arc_map = self
            .labels
            .iter()
            // letter slots coincide with bouquet arc ids
            .map(|&x| ArcId(sig.slot(x).unwrap_or(usize::MAX)))
            .collect();
        CoveringMap {
            source: g.clone(),
            target: crate::factorization::bouquet(sig.free_rank, sig.involution_count),
            vertex_map: vec![VertexId(0); g.vertex_count()],
            arc_map,
        }
    }

    /// The endpoint reached from each vertex along each letter. Two
    /// labeled graphs on the same vertex set with equal tables are the
    /// same Schreier graph.
    pub fn endpoint_table(&self, g: &Graph) -> BTreeMap<(VertexId, GeneratorLetter), VertexId> {
        g.arc_ids()
            .map(|a| ((g.iota(a), self.label(a)), g.tau(a)))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelViolation {
    LengthMismatch {
        labels: usize,
        arcs: usize,
    },
    LetterOutOfRange {
        arc: ArcId,
    },
    InverseMismatch {
        arc: ArcId,
    },
    HalfEdgeNeedsInvolution {
        arc: ArcId,
    },
    DuplicateLetter {
        vertex: VertexId,
        letter: GeneratorLetter,
    },
    MissingLetter {
        vertex: VertexId,
        letter: GeneratorLetter,
    },
}

impl fmt::Display for LabelViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabelViolation::LengthMismatch { labels, arcs } => {
                write!(f, "{labels} labels for {arcs} arcs")
            }
            LabelViolation::LetterOutOfRange { arc } => {
                write!(f, "arc {arc}: letter outside the group signature")
            }
            LabelViolation::InverseMismatch { arc } => {
                write!(
                    f,
                    "arc {arc}: inverse arc does not carry the inverse letter"
                )
            }
            LabelViolation::HalfEdgeNeedsInvolution { arc } => {
                write!(f, "arc {arc}: half-edge needs an involution letter")
            }
            LabelViolation::DuplicateLetter { vertex, letter } => {
                write!(f, "vertex {vertex}: duplicate letter {letter} at vertex")
            }
            LabelViolation::MissingLetter { vertex, letter } => {
                write!(f, "vertex {vertex}: missing letter {letter}")
            }
        }
    }
}

/// Every way in which `labeling` fails to exhibit `g` as a Schreier graph
/// of its signature.
pub fn verify_labeling(g: &Graph, labeling: &SchreierLabeling) -> Vec<LabelViolation> {
    let sig = labeling.signature;
    if labeling.labels.len() != g.arc_count() {
        return vec![LabelViolation::LengthMismatch {
            labels: labeling.labels.len(),
            arcs: g.arc_count(),
        }];
    }
    let mut out = Vec::new();
    for a in g.arc_ids() {
        let x = labeling.label(a);
        if sig.slot(x).is_none() {
            out.push(LabelViolation::LetterOutOfRange { arc: a });
            continue;
        }
        if g.is_half_edge(a) && !x.is_involution() {
            out.push(LabelViolation::HalfEdgeNeedsInvolution { arc: a });
        } else if labeling.label(g.inv(a)) != x.inverse() {
            out.push(LabelViolation::InverseMismatch { arc: a });
        }
    }
    let letters: Vec<GeneratorLetter> = sig.letters().collect();
    let mut count = vec![0usize; letters.len()];
    for v in g.vertices() {
        count.fill(0);
        for &a in g.star_unchecked(v) {
            if let Some(s) = sig.slot(labeling.label(a)) {
                count[s] += 1;
            }
        }
        for (s, &c) in count.iter().enumerate() {
            if c > 1 {
                out.push(LabelViolation::DuplicateLetter {
                    vertex: v,
                    letter: letters[s],
                });
            } else if c == 0 {
                out.push(LabelViolation::MissingLetter {
                    vertex: v,
                    letter: letters[s],
                });
            }
        }
    }
    out
}

fn checked(g: &Graph, labeling: SchreierLabeling) -> Result<SchreierLabeling> {
    let violations = verify_labeling(g, &labeling);
    if violations.is_empty() {
        Ok(labeling)
    } else {
        Err(Error::InvalidLabeling(violations))
    }
}

/// Labels factor `i` with `a_i` (successor arcs `+`, their inverses `-`)
/// and matching `j` with `t_j`.
pub fn label_from_factorization(
    g: &Graph,
    factors: &[TwoFactor],
    matchings: &[Matching],
) -> Result<SchreierLabeling> {
    let labels = partition_images(
        g,
        factors,
        matchings,
        |i| {
            (
                GeneratorLetter::Free(i, Sign::Plus),
                GeneratorLetter::Free(i, Sign::Minus),
            )
        },
        GeneratorLetter::Inv,
    )?;
    checked(
        g,
        SchreierLabeling {
            signature: GroupSignature::new(factors.len(), matchings.len()),
            labels,
        },
    )
}

/// `d` orthogonal perfect matchings of a connected d-regular bipartite
/// graph, labeled `t0 … t(d-1)`.
pub fn label_bipartite_involutions(g: &Graph, b: &Bipartition) -> Result<SchreierLabeling> {
    let degree = g.regularity()?.ok_or(Error::NotRegular)?;
    let matchings = orthogonal_matchings(g, b, degree)?;
    label_from_factorization(g, &[], &matchings)
}

/// A transitive action given by explicit one-line permutations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationAction {
    pub set_size: usize,
    pub free_gens: Vec<Vec<usize>>,
    pub inv_gens: Vec<Vec<usize>>,
}

impl PermutationAction {
    pub fn signature(&self) -> GroupSignature {
        GroupSignature::new(self.free_gens.len(), self.inv_gens.len())
    }

    /// Every generator is a permutation of `[0, set_size)` and every
    /// involution generator squares to the identity.
    pub fn validate(&self) -> Result<()> {
        let n = self.set_size;
        let is_perm = |p: &[usize]| {
            let mut seen = vec![false; n];
            p.len() == n
                && p.iter()
                    .all(|&x| x < n && !std::mem::replace(&mut seen[x], true))
        };
        for (i, p) in self.free_gens.iter().enumerate() {
            if !is_perm(p) {
                return Err(Error::InvalidAction(format!(
                    "free generator {i} is not a permutation"
                )));
            }
        }
        for (j, p) in self.inv_gens.iter().enumerate() {
            if !is_perm(p) {
                return Err(Error::InvalidAction(format!(
                    "involution generator {j} is not a permutation"
                )));
            }
            if (0..n).any(|x| p[p[x]] != x) {
                return Err(Error::InvalidAction(format!(
                    "involution generator {j} does not square to the identity"
                )));
            }
        }
        Ok(())
    }

    pub fn is_transitive(&self) -> bool {
        if self.set_size == 0 {
            return false;
        }
        let mut seen = vec![false; self.set_size];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut reached = 1;
        while let Some(x) = queue.pop_front() {
            for p in self.free_gens.iter().chain(&self.inv_gens) {
                // the inverse of a free generator reaches the same orbit
                let y = p[x];
                if !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    queue.push_back(y);
                }
            }
        }
        reached == self.set_size
    }
}

/// Reads the action off a verified labeling of a connected graph.
pub fn action_from_labeling(g: &Graph, labeling: &SchreierLabeling) -> Result<PermutationAction> {
    let violations = verify_labeling(g, labeling);
    if !violations.is_empty() {
        return Err(Error::InvalidLabeling(violations));
    }
    let sig = labeling.signature;
    let mut free_gens = vec![vec![usize::MAX; g.vertex_count()]; sig.free_rank];
    let mut inv_gens = vec![vec![usize::MAX; g.vertex_count()]; sig.involution_count];
    for a in g.arc_ids() {
        let (v, w) = (g.iota(a).0, g.tau(a).0);
        match labeling.label(a) {
            GeneratorLetter::Free(i, Sign::Plus) => free_gens[i][v] = w,
            GeneratorLetter::Free(_, Sign::Minus) => {}
            GeneratorLetter::Inv(j) => inv_gens[j][v] = w,
        }
    }
    let action = PermutationAction {
        set_size: g.vertex_count(),
        free_gens,
        inv_gens,
    };
    action.validate()?;
    if !action.is_transitive() {
        return Err(Error::NotTransitive);
    }
    Ok(action)
}

/// The orbital graph of an action: for every point `x` and free generator
/// `i` an arc `x → x·σ_i` labeled `a_i+` (a loop when `x` is fixed); for
/// every involution `j` one edge per swapped pair and a half-edge per fixed
/// point, labeled `t_j`.
pub fn orbital_graph(action: &PermutationAction) -> Result<(Graph, SchreierLabeling)> {
    action.validate()?;
    let mut g = Graph::new(action.set_size);
    let mut labels = Vec::new();
    for (i, p) in action.free_gens.iter().enumerate() {
        for (x, &y) in p.iter().enumerate() {
            g.add_edge(VertexId(x), VertexId(y))?;
            labels.push(GeneratorLetter::Free(i, Sign::Plus));
            labels.push(GeneratorLetter::Free(i, Sign::Minus));
        }
    }
    for (j, p) in action.inv_gens.iter().enumerate() {
        for (x, &y) in p.iter().enumerate() {
            if x == y {
                g.add_half_edge(VertexId(x))?;
                labels.push(GeneratorLetter::Inv(j));
            } else if x < y {
                g.add_edge(VertexId(x), VertexId(y))?;
                labels.push(GeneratorLetter::Inv(j));
                labels.push(GeneratorLetter::Inv(j));
            }
        }
    }
    let labeling = SchreierLabeling {
        signature: action.signature(),
        labels,
    };
    let labeling = checked(&g, labeling)?;
    Ok((g, labeling))
}

/// Verdict on a connected regular graph, with certificates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassificationResult {
    /// The graph itself carries a Schreier labeling.
    DirectSchreier { labeling: SchreierLabeling },
    /// Odd degree without a perfect matching, so not a Schreier graph; its
    /// canonical double cover is one.
    NotSchreierWithCover {
        certificate: MatchabilityCertificate,
        cover: CoveringMap,
        cover_labeling: SchreierLabeling,
    },
    /// The graph has half-edges; only its canonical double cover is
    /// labeled.
    CoverOnly {
        cover: CoveringMap,
        cover_labeling: SchreierLabeling,
    },
}

impl ClassificationResult {
    pub fn name(&self) -> &'static str {
        match self {
            ClassificationResult::DirectSchreier { .. } => "direct-schreier",
            ClassificationResult::NotSchreierWithCover { .. } => "not-schreier-with-cover",
            ClassificationResult::CoverOnly { .. } => "cover-only",
        }
    }
}

/// Labels a regular graph without half-edges over `F_d` (even degree) or
/// `F_d ∗ Z/2Z` (odd degree) given a perfect matching for the odd case.
fn parity_labeling(g: &Graph, matching: Option<Matching>) -> Result<SchreierLabeling> {
    let Some(m) = matching else {
        let factors = two_factorization(g)?;
        return label_from_factorization(g, &factors, &[]);
    };
    let (rest, corr) = remove_matching(g, &m)?;
    let factors: Vec<TwoFactor> = two_factorization(&rest)?
        .into_iter()
        .map(|f| {
            TwoFactor::from_successors(
                f.successors()
                    .iter()
                    .map(|a| corr.new_to_old[a.0])
                    .collect(),
            )
        })
        .collect();
    label_from_factorization(g, &factors, &[m])
}

/// Labeling of a regular bipartite graph by the parity-minimal signature;
/// bipartite regular graphs always have a perfect matching.
fn bipartite_parity_labeling(
    g: &Graph,
    b: &Bipartition,
    degree: usize,
) -> Result<SchreierLabeling> {
    if degree.is_multiple_of(2) {
        return parity_labeling(g, None);
    }
    let m = max_matching_bipartite(g, b)?;
    if !m.is_perfect(g) {
        return Err(Error::Internal(
            "regular bipartite graph without perfect matching".into(),
        ));
    }
    parity_labeling(g, Some(m))
}

fn labeled_cover(g: &Graph, degree: usize) -> Result<(CoveringMap, SchreierLabeling)> {
    let cover = canonical_double_cover(g);
    let n = g.vertex_count();
    let sides = Bipartition::from_sides((0..2 * n).map(|v| u8::from(v >= n)).collect())?;
    if !cover.source.is_connected() {
        return Err(Error::Internal(
            "canonical double cover is disconnected".into(),
        ));
    }
    let labeling = bipartite_parity_labeling(&cover.source, &sides, degree)?;
    Ok((cover, labeling))
}

/// Decides a connected regular graph and returns a verified certificate:
/// a Schreier labeling of the graph, or a labeled canonical double cover
/// (with a deficiency witness when the graph has odd degree and no perfect
/// matching).
pub fn classify(g: &Graph) -> Result<ClassificationResult> {
    let degree = g.regularity()?.ok_or(Error::NotRegular)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.has_half_edges() {
        let (cover, cover_labeling) = labeled_cover(g, degree)?;
        return Ok(ClassificationResult::CoverOnly {
            cover,
            cover_labeling,
        });
    }
    if let Some(b) = g.bipartition() {
        let labeling = bipartite_parity_labeling(g, &b, degree)?;
        return Ok(ClassificationResult::DirectSchreier { labeling });
    }
    if degree % 2 == 0 {
        let labeling = parity_labeling(g, None)?;
        return Ok(ClassificationResult::DirectSchreier { labeling });
    }
    let certificate = is_matchable(g);
    if certificate.matchable {
        let labeling = parity_labeling(g, Some(certificate.matching))?;
        return Ok(ClassificationResult::DirectSchreier { labeling });
    }
    let (cover, cover_labeling) = labeled_cover(g, degree)?;
    Ok(ClassificationResult::NotSchreierWithCover {
        certificate,
        cover,
        cover_labeling,
    })
}
