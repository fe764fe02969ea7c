//! Certificate documents.
//!
//! ```text
//! cert labeling          cert covering          cert classification
//! signature F1*Z2        begin graph            verdict cover-only
//! arc 0 a0+              heg 1                  begin covering
//! arc 1 a0-              ...                    ...
//! ...                    end graph              end covering
//!                        v 0 0                  begin labeling
//!                        a 0 0                  ...
//!                        ...                    end labeling
//! ```
//!
//! Arc ids in a labeling refer to the graph it labels. A covering embeds
//! its source graph in canonical form; its target is the graph the
//! certificate is checked against. A classification with verdict
//! `not-schreier-with-cover` also records the maximum matching:
//! `matchable false`, `max <k>`, `deficiency <k>`, `matching <edge ids>`.

use schreier_core::{
    is_matchable, verify_labeling, ArcId, ClassificationResult, CoveringMap, EdgeId,
    GeneratorLetter, Graph, GroupSignature, Matching, SchreierLabeling, VertexId,
};

use crate::error::ParseError;
use crate::heg::{
    canonicalize, content_lines, expect_end, parse_graph_lines, parse_index, serialize_graph,
};

/// A covering as written to disk: the source graph and the two maps. The
/// target is supplied separately.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringDoc {
    pub source: Graph,
    pub vertex_map: Vec<VertexId>,
    pub arc_map: Vec<ArcId>,
}

impl CoveringDoc {
    /// Canonicalizes the source graph of `m`, rewriting the arc map to
    /// match. The labeling, if any, is carried along.
    pub fn from_map(
        m: &CoveringMap,
        labeling: Option<&SchreierLabeling>,
    ) -> (Self, Option<SchreierLabeling>) {
        let (source, new_of_old) = canonicalize(&m.source);
        let mut arc_map = vec![ArcId(0); m.arc_map.len()];
        for (old, &image) in m.arc_map.iter().enumerate() {
            arc_map[new_of_old[old].0] = image;
        }
        let labeling = labeling.map(|l| transport_labeling(l, &new_of_old));
        let doc = CoveringDoc {
            source,
            vertex_map: m.vertex_map.clone(),
            arc_map,
        };
        (doc, labeling)
    }

    pub fn to_map(&self, target: &Graph) -> CoveringMap {
        CoveringMap {
            source: self.source.clone(),
            target: target.clone(),
            vertex_map: self.vertex_map.clone(),
            arc_map: self.arc_map.clone(),
        }
    }
}

/// Moves a labeling along an arc renumbering `new_of_old`.
pub fn transport_labeling(l: &SchreierLabeling, new_of_old: &[ArcId]) -> SchreierLabeling {
    let mut labels = l.labels.clone();
    for (old, &letter) in l.labels.iter().enumerate() {
        labels[new_of_old[old].0] = letter;
    }
    SchreierLabeling {
        signature: l.signature,
        labels,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Direct {
        labeling: SchreierLabeling,
    },
    NotSchreier {
        max: usize,
        deficiency: usize,
        matching: Vec<EdgeId>,
        cover: CoveringDoc,
        cover_labeling: SchreierLabeling,
    },
    CoverOnly {
        cover: CoveringDoc,
        cover_labeling: SchreierLabeling,
    },
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Direct { .. } => "direct-schreier",
            Verdict::NotSchreier { .. } => "not-schreier-with-cover",
            Verdict::CoverOnly { .. } => "cover-only",
        }
    }

    /// Document form of a classification; cover graphs are canonicalized.
    pub fn from_result(r: &ClassificationResult) -> Self {
        match r {
            ClassificationResult::DirectSchreier { labeling } => Verdict::Direct {
                labeling: labeling.clone(),
            },
            ClassificationResult::NotSchreierWithCover {
                certificate,
                cover,
                cover_labeling,
            } => {
                let (cover, l) = CoveringDoc::from_map(cover, Some(cover_labeling));
                Verdict::NotSchreier {
                    max: certificate.matching.len(),
                    deficiency: certificate.deficiency,
                    matching: certificate.matching.edges().to_vec(),
                    cover,
                    cover_labeling: l.expect("labeling was given"),
                }
            }
            ClassificationResult::CoverOnly {
                cover,
                cover_labeling,
            } => {
                let (cover, l) = CoveringDoc::from_map(cover, Some(cover_labeling));
                Verdict::CoverOnly {
                    cover,
                    cover_labeling: l.expect("labeling was given"),
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Labeling(SchreierLabeling),
    Covering(CoveringDoc),
    Classification(Verdict),
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Labeling(_) => "labeling",
            Certificate::Covering(_) => "covering",
            Certificate::Classification(_) => "classification",
        }
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("cert {}\n", self.kind());
        match self {
            Certificate::Labeling(l) => write_labeling_body(&mut out, l),
            Certificate::Covering(c) => write_covering_body(&mut out, c),
            Certificate::Classification(v) => {
                out.push_str(&format!("verdict {}\n", v.name()));
                match v {
                    Verdict::Direct { labeling } => write_block(
                        &mut out,
                        "labeling",
                        &Certificate::Labeling(labeling.clone()),
                    ),
                    Verdict::NotSchreier {
                        max,
                        deficiency,
                        matching,
                        cover,
                        cover_labeling,
                    } => {
                        out.push_str(&format!(
                            "matchable false\nmax {max}\ndeficiency {deficiency}\nmatching"
                        ));
                        for e in matching {
                            out.push_str(&format!(" {e}"));
                        }
                        out.push('\n');
                        write_block(&mut out, "covering", &Certificate::Covering(cover.clone()));
                        write_block(
                            &mut out,
                            "labeling",
                            &Certificate::Labeling(cover_labeling.clone()),
                        );
                    }
                    Verdict::CoverOnly {
                        cover,
                        cover_labeling,
                    } => {
                        write_block(&mut out, "covering", &Certificate::Covering(cover.clone()));
                        write_block(
                            &mut out,
                            "labeling",
                            &Certificate::Labeling(cover_labeling.clone()),
                        );
                    }
                }
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let lines: Vec<(usize, &str)> = content_lines(text).collect();
        parse_cert(&lines)
    }

    /// Checks the certificate against `g`, returning one message per
    /// violation.
    pub fn check(&self, g: &Graph) -> Vec<String> {
        match self {
            Certificate::Labeling(l) => check_labeling(g, l, ""),
            Certificate::Covering(c) => check_covering(g, c, ""),
            Certificate::Classification(v) => check_verdict(g, v),
        }
    }
}

fn write_labeling_body(out: &mut String, l: &SchreierLabeling) {
    out.push_str(&format!("signature {}\n", l.signature));
    for (i, letter) in l.labels.iter().enumerate() {
        out.push_str(&format!("arc {i} {letter}\n"));
    }
}

fn write_covering_body(out: &mut String, c: &CoveringDoc) {
    out.push_str("begin graph\n");
    out.push_str(&serialize_graph(&c.source));
    out.push_str("end graph\n");
    for (v, w) in c.vertex_map.iter().enumerate() {
        out.push_str(&format!("v {v} {w}\n"));
    }
    for (a, b) in c.arc_map.iter().enumerate() {
        out.push_str(&format!("a {a} {b}\n"));
    }
}

fn write_block(out: &mut String, name: &str, inner: &Certificate) {
    out.push_str(&format!("begin {name}\n"));
    out.push_str(&inner.serialize());
    out.push_str(&format!("end {name}\n"));
}

/// Splits off the lines between `begin <name>` at `lines[0]` and its
/// matching `end <name>`, returning the body and the remaining lines.
type Lines<'b, 'a> = &'b [(usize, &'a str)];

fn take_block<'a, 'b>(
    lines: Lines<'b, 'a>,
    name: &str,
) -> Result<(Lines<'b, 'a>, Lines<'b, 'a>), ParseError> {
    let (line, first) = lines
        .first()
        .copied()
        .ok_or_else(|| ParseError::new(0, format!("missing `begin {name}`")))?;
    if first != format!("begin {name}") {
        return Err(ParseError::new(line, format!("expected `begin {name}`")));
    }
    let open = format!("begin {name}");
    let close = format!("end {name}");
    let mut depth = 0usize;
    for (i, &(_, text)) in lines.iter().enumerate().skip(1) {
        if text == open {
            depth += 1;
        } else if text == close {
            if depth == 0 {
                return Ok((&lines[1..i], &lines[i + 1..]));
            }
            depth -= 1;
        }
    }
    Err(ParseError::new(
        line,
        format!("unterminated `begin {name}`"),
    ))
}

fn keyword_value<'a>(
    entry: Option<&(usize, &'a str)>,
    keyword: &str,
    last: usize,
) -> Result<(usize, &'a str), ParseError> {
    let &(line, text) =
        entry.ok_or_else(|| ParseError::new(last, format!("missing `{keyword}`")))?;
    let rest = text
        .strip_prefix(keyword)
        .filter(|r| r.is_empty() || r.starts_with(char::is_whitespace))
        .ok_or_else(|| ParseError::new(line, format!("expected `{keyword}`")))?;
    Ok((line, rest.trim()))
}

fn last_line(lines: &[(usize, &str)]) -> usize {
    lines.last().map_or(0, |&(l, _)| l)
}

fn parse_cert(lines: &[(usize, &str)]) -> Result<Certificate, ParseError> {
    let (line, kind) = keyword_value(lines.first(), "cert", 0)?;
    let body = &lines[1..];
    match kind {
        "labeling" => parse_labeling(body, line).map(Certificate::Labeling),
        "covering" => parse_covering(body, line).map(Certificate::Covering),
        "classification" => parse_verdict(body, line).map(Certificate::Classification),
        other => Err(ParseError::new(
            line,
            format!("unknown certificate kind `{other}`"),
        )),
    }
}

/// Reads `<tag> <i> <value>` rows whose indices must run 0, 1, 2, ...
fn indexed_rows<'a>(
    rows: &[(usize, &'a str)],
    tag: &str,
) -> Result<Vec<(usize, &'a str)>, ParseError> {
    rows.iter()
        .enumerate()
        .map(|(expected, &(line, text))| {
            let mut tokens = text.split_whitespace();
            if tokens.next() != Some(tag) {
                return Err(ParseError::new(line, format!("expected `{tag}` row")));
            }
            let i = parse_index(line, tokens.next(), "index")?;
            if i != expected {
                return Err(ParseError::new(
                    line,
                    format!("expected index {expected}, found {i}"),
                ));
            }
            let value = tokens
                .next()
                .ok_or_else(|| ParseError::new(line, "missing value"))?;
            expect_end(line, tokens)?;
            Ok((line, value))
        })
        .collect()
}

fn parse_labeling(body: &[(usize, &str)], header: usize) -> Result<SchreierLabeling, ParseError> {
    let (line, sig) = keyword_value(body.first(), "signature", header)?;
    let signature: GroupSignature = sig.parse().map_err(|e: String| ParseError::new(line, e))?;
    let labels = indexed_rows(&body[1..], "arc")?
        .into_iter()
        .map(|(line, s)| {
            s.parse::<GeneratorLetter>()
                .map_err(|e| ParseError::new(line, e))
        })
        .collect::<Result<_, _>>()?;
    Ok(SchreierLabeling { signature, labels })
}

fn parse_covering(body: &[(usize, &str)], header: usize) -> Result<CoveringDoc, ParseError> {
    if body.is_empty() {
        return Err(ParseError::new(header, "missing `begin graph`"));
    }
    let (graph, rest) = take_block(body, "graph")?;
    let source = parse_graph_lines(graph.iter().copied()).map_err(|e| {
        if e.line == 0 {
            ParseError::new(body[0].0, e.message)
        } else {
            e
        }
    })?;
    let split = rest
        .iter()
        .position(|(_, t)| !t.starts_with("v "))
        .unwrap_or(rest.len());
    let index = |(line, s): (usize, &str)| parse_index(line, Some(s), "image");
    let vertex_map = indexed_rows(&rest[..split], "v")?
        .into_iter()
        .map(|x| index(x).map(VertexId))
        .collect::<Result<_, _>>()?;
    let arc_map = indexed_rows(&rest[split..], "a")?
        .into_iter()
        .map(|x| index(x).map(ArcId))
        .collect::<Result<_, _>>()?;
    Ok(CoveringDoc {
        source,
        vertex_map,
        arc_map,
    })
}

fn parse_inner(
    block: &[(usize, &str)],
    opening: usize,
    kind: &str,
) -> Result<Certificate, ParseError> {
    let cert = parse_cert(block).map_err(|e| {
        if e.line == 0 {
            ParseError::new(opening, e.message)
        } else {
            e
        }
    })?;
    if cert.kind() != kind {
        return Err(ParseError::new(
            opening,
            format!("expected a {kind} certificate"),
        ));
    }
    Ok(cert)
}

fn parse_covering_and_labeling(
    rest: &[(usize, &str)],
    after: usize,
) -> Result<(CoveringDoc, SchreierLabeling, usize), ParseError> {
    let opening = rest.first().map_or(after, |&(l, _)| l);
    let (block, rest) = take_block(rest, "covering").map_err(|e| {
        if e.line == 0 {
            ParseError::new(after, e.message)
        } else {
            e
        }
    })?;
    let Certificate::Covering(cover) = parse_inner(block, opening, "covering")? else {
        unreachable!()
    };
    let opening = rest.first().map_or(last_line(block) + 1, |&(l, _)| l);
    let (block, rest) = take_block(rest, "labeling").map_err(|e| {
        if e.line == 0 {
            ParseError::new(opening, e.message)
        } else {
            e
        }
    })?;
    let Certificate::Labeling(l) = parse_inner(block, opening, "labeling")? else {
        unreachable!()
    };
    if let Some(&(line, t)) = rest.first() {
        return Err(ParseError::new(line, format!("unexpected `{t}`")));
    }
    Ok((cover, l, opening))
}

fn parse_verdict(body: &[(usize, &str)], header: usize) -> Result<Verdict, ParseError> {
    let (line, verdict) = keyword_value(body.first(), "verdict", header)?;
    let rest = &body[1..];
    match verdict {
        "direct-schreier" => {
            let opening = rest.first().map_or(line, |&(l, _)| l);
            let (block, tail) = take_block(rest, "labeling").map_err(|e| {
                if e.line == 0 {
                    ParseError::new(line, e.message)
                } else {
                    e
                }
            })?;
            if let Some(&(l, t)) = tail.first() {
                return Err(ParseError::new(l, format!("unexpected `{t}`")));
            }
            let Certificate::Labeling(labeling) = parse_inner(block, opening, "labeling")? else {
                unreachable!()
            };
            Ok(Verdict::Direct { labeling })
        }
        "not-schreier-with-cover" => {
            let (l, matchable) = keyword_value(rest.first(), "matchable", line)?;
            if matchable != "false" {
                return Err(ParseError::new(l, "expected `matchable false`"));
            }
            let (l, max) = keyword_value(rest.get(1), "max", l)?;
            let max = parse_index(l, Some(max), "maximum")?;
            let (l, deficiency) = keyword_value(rest.get(2), "deficiency", l)?;
            let deficiency = parse_index(l, Some(deficiency), "deficiency")?;
            let (l, edges) = keyword_value(rest.get(3), "matching", l)?;
            let matching = edges
                .split_whitespace()
                .map(|t| parse_index(l, Some(t), "edge id").map(EdgeId))
                .collect::<Result<_, _>>()?;
            let (cover, cover_labeling, _) = parse_covering_and_labeling(&rest[4..], l)?;
            Ok(Verdict::NotSchreier {
                max,
                deficiency,
                matching,
                cover,
                cover_labeling,
            })
        }
        "cover-only" => {
            let (cover, cover_labeling, _) = parse_covering_and_labeling(rest, line)?;
            Ok(Verdict::CoverOnly {
                cover,
                cover_labeling,
            })
        }
        other => Err(ParseError::new(line, format!("unknown verdict `{other}`"))),
    }
}

fn check_labeling(g: &Graph, l: &SchreierLabeling, context: &str) -> Vec<String> {
    verify_labeling(g, l)
        .into_iter()
        .map(|v| format!("{context}{v}"))
        .collect()
}

fn check_covering(target: &Graph, c: &CoveringDoc, context: &str) -> Vec<String> {
    match c.to_map(target).verify() {
        Ok(violations) => violations
            .into_iter()
            .map(|v| format!("{context}{v}"))
            .collect(),
        Err(e) => vec![format!("{context}{e}")],
    }
}

/// A cover certificate must be a connected, labeled double cover.
fn check_labeled_cover(g: &Graph, cover: &CoveringDoc, l: &SchreierLabeling) -> Vec<String> {
    let mut out = check_covering(g, cover, "covering: ");
    if out.is_empty() {
        if cover.to_map(g).is_double_cover() != Ok(true) {
            out.push("covering: not a double cover".into());
        }
        if !cover.source.is_connected() {
            out.push("covering: cover graph is disconnected".into());
        }
    }
    out.extend(check_labeling(&cover.source, l, "cover labeling: "));
    out
}

fn check_verdict(g: &Graph, v: &Verdict) -> Vec<String> {
    match v {
        Verdict::Direct { labeling } => check_labeling(g, labeling, ""),
        Verdict::NotSchreier {
            max,
            deficiency,
            matching,
            cover,
            cover_labeling,
        } => {
            let mut out = Vec::new();
            if g.has_half_edges() {
                out.push("graph has half-edges; expected verdict cover-only".into());
            }
            let m = Matching::from_edges(matching.clone());
            if m.edges().len() != matching.len() {
                out.push("matching lists an edge twice".into());
            } else if let Err(e) = m.check(g) {
                out.push(format!("matching: {e}"));
            }
            if m.len() != *max {
                out.push(format!("matching has {} edges, max says {max}", m.len()));
            }
            let reference = is_matchable(g);
            if reference.matching.len() != *max {
                out.push(format!(
                    "max {max} is not the maximum matching size {}",
                    reference.matching.len()
                ));
            }
            if g.vertex_count() != 2 * max + deficiency {
                out.push(format!(
                    "deficiency {deficiency} inconsistent with max {max}"
                ));
            }
            if *deficiency == 0 {
                out.push("graph is matchable".into());
            }
            out.extend(check_labeled_cover(g, cover, cover_labeling));
            out
        }
        Verdict::CoverOnly {
            cover,
            cover_labeling,
        } => {
            let mut out = Vec::new();
            if !g.has_half_edges() {
                out.push("graph has no half-edges; cover-only verdict does not apply".into());
            }
            out.extend(check_labeled_cover(g, cover, cover_labeling));
            out
        }
    }
}
