//! One function per subcommand. Each takes parsed inputs and returns the
//! text to emit together with the exit code.

use std::path::Path;

use schreier_core::corpus::{random_regular, random_regular_bipartite, rng, RegularOptions};
use schreier_core::{
    canonical_double_cover, is_matchable, label_bipartite_involutions, label_from_factorization,
    orbital_graph, two_factorization, Error, Graph, PermutationAction, SchreierLabeling,
};

use crate::cert::{transport_labeling, Certificate, CoveringDoc, Verdict};
use crate::error::{exit, CliError};
use crate::heg::{canonicalize, parse_graph, serialize_graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    /// Primary document, written to `--out` or stdout.
    pub text: String,
    /// Secondary certificate, written to `--cert` when requested.
    pub certificate: Option<String>,
    /// Short diagnostics for stderr.
    pub notes: Vec<String>,
    pub code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            certificate: None,
            notes: Vec::new(),
            code: exit::OK,
        }
    }
}

pub fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_graph(path: &Path) -> Result<Graph, CliError> {
    parse_graph(&read(path)?).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_certificate(path: &Path) -> Result<Certificate, CliError> {
    Certificate::parse(&read(path)?).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_action(path: &Path) -> Result<PermutationAction, CliError> {
    crate::action::parse_action(&read(path)?).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

/// Serializes `cert`, then parses and checks the text against `g` before
/// handing it out.
fn emit(cert: &Certificate, g: &Graph) -> Result<String, CliError> {
    let text = cert.serialize();
    let reparsed = Certificate::parse(&text).map_err(|e| CliError::SelfCheck(e.to_string()))?;
    if reparsed != *cert {
        return Err(CliError::SelfCheck(
            "certificate does not survive a round trip".into(),
        ));
    }
    let problems = reparsed.check(g);
    if let Some(first) = problems.first() {
        return Err(CliError::SelfCheck(first.clone()));
    }
    Ok(text)
}

fn require_connected_regular(g: &Graph) -> Result<usize, CliError> {
    let degree = g.regularity()?.ok_or(Error::NotRegular)?;
    if !g.is_connected() {
        return Err(Error::Disconnected.into());
    }
    Ok(degree)
}

pub fn classify(g: &Graph) -> Result<Output, CliError> {
    require_connected_regular(g)?;
    let result = schreier_core::classify(g)?;
    let verdict = Verdict::from_result(&result);
    let (code, signature) = match &verdict {
        Verdict::Direct { labeling } => (exit::OK, labeling.signature),
        Verdict::NotSchreier { cover_labeling, .. } => {
            (exit::NOT_SCHREIER_WITH_COVER, cover_labeling.signature)
        }
        Verdict::CoverOnly { cover_labeling, .. } => (exit::COVER_ONLY, cover_labeling.signature),
    };
    let notes = vec![
        format!("verdict: {}", verdict.name()),
        format!("signature: {signature}"),
    ];
    let text = emit(&Certificate::Classification(verdict), g)?;
    Ok(Output {
        text,
        certificate: None,
        notes,
        code,
    })
}

/// A Schreier labeling of `g` itself: the parity-minimal one, or with
/// `involutions` the all-involution labeling of a bipartite graph.
pub fn label(g: &Graph, involutions: bool) -> Result<Output, CliError> {
    require_connected_regular(g)?;
    let labeling = if involutions {
        let b = g.bipartition().ok_or(Error::NotBipartite)?;
        label_bipartite_involutions(g, &b)?
    } else {
        match Verdict::from_result(&schreier_core::classify(g)?) {
            Verdict::Direct { labeling } => labeling,
            other => {
                return Err(CliError::Usage(format!(
                    "graph has no direct labeling (verdict {}); run `classify` for its cover",
                    other.name()
                )))
            }
        }
    };
    Ok(Output::ok(emit(&Certificate::Labeling(labeling), g)?))
}

pub fn verify(g: &Graph, cert: &Certificate) -> Output {
    let problems = cert.check(g);
    if problems.is_empty() {
        Output::ok(format!("ok {}\n", cert.kind()))
    } else {
        let mut text = problems.join("\n");
        text.push('\n');
        Output {
            text,
            certificate: None,
            notes: vec![format!("{} violation(s)", problems.len())],
            code: exit::VIOLATIONS,
        }
    }
}

/// The canonical double cover as a graph document, with the covering map
/// as certificate.
pub fn cover(g: &Graph) -> Result<Output, CliError> {
    let (doc, _) = CoveringDoc::from_map(&canonical_double_cover(g), None);
    let text = serialize_graph(&doc.source);
    let certificate = emit(&Certificate::Covering(doc), g)?;
    Ok(Output {
        certificate: Some(certificate),
        ..Output::ok(text)
    })
}

pub fn matching(g: &Graph) -> Result<Output, CliError> {
    let cert = is_matchable(g);
    cert.matching
        .check(g)
        .map_err(|e| CliError::SelfCheck(e.to_string()))?;
    let edges: Vec<String> = cert
        .matching
        .edges()
        .iter()
        .map(|e| e.to_string())
        .collect();
    Ok(Output::ok(format!(
        "matchable: {}\nmax: {}\ndeficiency: {}\nmatching: {}\n",
        cert.matchable,
        cert.matching.len(),
        cert.deficiency,
        edges.join(" ")
    )))
}

/// The 2-factors of an even-regular graph, one line each listing the arc
/// leaving every vertex in order, with the induced `F_d` labeling as
/// certificate.
pub fn factor(g: &Graph) -> Result<Output, CliError> {
    let factors = two_factorization(g)?;
    let mut text = String::new();
    for (i, f) in factors.iter().enumerate() {
        let arcs: Vec<String> = f.successors().iter().map(|a| a.to_string()).collect();
        text.push_str(&format!("factor {i}: {}\n", arcs.join(" ")));
    }
    let labeling = label_from_factorization(g, &factors, &[])?;
    Ok(Output {
        certificate: Some(emit(&Certificate::Labeling(labeling), g)?),
        ..Output::ok(text)
    })
}

/// The orbital graph of an action in canonical form, with its labeling as
/// certificate.
pub fn orbital(action: &PermutationAction) -> Result<Output, CliError> {
    let (h, l) = orbital_graph(action)?;
    let (h, new_of_old) = canonicalize(&h);
    let l: SchreierLabeling = transport_labeling(&l, &new_of_old);
    let text = serialize_graph(&h);
    let certificate = emit(&Certificate::Labeling(l), &h)?;
    let mut out = Output {
        certificate: Some(certificate),
        ..Output::ok(text)
    };
    if !action.is_transitive() {
        out.notes
            .push("action is not transitive; the orbital graph is disconnected".into());
    }
    Ok(out)
}

pub fn dot(g: &Graph, labeling: Option<&Certificate>) -> Result<Output, CliError> {
    let labeling = match labeling {
        None => None,
        Some(Certificate::Labeling(l)) => Some(l),
        Some(Certificate::Classification(Verdict::Direct { labeling })) => Some(labeling),
        Some(other) => {
            return Err(CliError::Usage(format!(
                "cannot draw a {} certificate as a labeling",
                other.kind()
            )))
        }
    };
    if let Some(l) = labeling {
        let problems = Certificate::Labeling(l.clone()).check(g);
        if !problems.is_empty() {
            return Ok(verify(g, &Certificate::Labeling(l.clone())));
        }
    }
    Ok(Output::ok(crate::dot::export_dot(g, labeling)))
}

pub fn canon(g: &Graph) -> Output {
    Output::ok(serialize_graph(g))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomSpec {
    pub vertices: usize,
    pub degree: usize,
    pub half_edges: usize,
    pub simple: bool,
    pub bipartite: bool,
    pub seed: u64,
}

/// A seeded random connected regular graph. With `bipartite`, `vertices`
/// is the size of each side.
pub fn random(spec: RandomSpec) -> Result<Output, CliError> {
    let mut r = rng(spec.seed);
    let g = if spec.bipartite {
        random_regular_bipartite(&mut r, spec.vertices, spec.degree)
    } else {
        let opts = RegularOptions {
            half_edges: spec.half_edges,
            loops: !spec.simple,
            parallel_edges: !spec.simple,
        };
        random_regular(&mut r, spec.vertices, spec.degree, opts)
    };
    let g = g.ok_or_else(|| {
        CliError::Usage("no connected regular graph found for these parameters".into())
    })?;
    Ok(Output::ok(serialize_graph(&g)))
}
