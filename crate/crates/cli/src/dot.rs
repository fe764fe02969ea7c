//! Graphviz rendering.

use schreier_core::{EdgeKind, GeneratorLetter, Graph, SchreierLabeling, Sign};

/// One statement per edge. Half-edges are dotted self-arcs. With a
/// labeling, free letters become directed `a<i>` labels pointing along the
/// `+` arc and involutions become `t<j>` labels.
pub fn export_dot(g: &Graph, labeling: Option<&SchreierLabeling>) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        out.push_str(&format!("  {v};\n"));
    }
    for e in g.edges() {
        let mut arc = e.arc();
        let mut attrs = Vec::new();
        if g.kind(arc) == EdgeKind::HalfEdge {
            attrs.push("style=dotted".to_string());
        }
        match labeling.map(|l| l.label(arc)) {
            Some(GeneratorLetter::Free(i, sign)) => {
                if sign == Sign::Minus {
                    arc = g.inv(arc);
                }
                attrs.push(format!("label=\"a{i}\""));
                attrs.push("dir=forward".into());
            }
            Some(GeneratorLetter::Inv(j)) => attrs.push(format!("label=\"t{j}\"")),
            None => {}
        }
        let (u, v) = (g.iota(arc), g.tau(arc));
        if attrs.is_empty() {
            out.push_str(&format!("  {u} -- {v};\n"));
        } else {
            out.push_str(&format!("  {u} -- {v} [{}];\n", attrs.join(", ")));
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use schreier_core::fixtures::{complete, single_half_edge};
    use schreier_core::{classify, ClassificationResult, VertexId};

    fn edge_statements(dot: &str) -> Vec<&str> {
        dot.lines().filter(|l| l.contains(" -- ")).collect()
    }

    #[test]
    fn half_edge_is_dotted() {
        let dot = export_dot(&single_half_edge(), None);
        assert_eq!(edge_statements(&dot), vec!["  0 -- 0 [style=dotted];"]);
    }

    #[test]
    fn single_edge_is_plain() {
        let mut g = Graph::new(2);
        g.add_edge(VertexId(0), VertexId(1)).unwrap();
        assert_eq!(edge_statements(&export_dot(&g, None)), vec!["  0 -- 1;"]);
    }

    #[test]
    fn labeled_k4() {
        let g = complete(4);
        let ClassificationResult::DirectSchreier { labeling } = classify(&g).unwrap() else {
            panic!()
        };
        let dot = export_dot(&g, Some(&labeling));
        let edges = edge_statements(&dot);
        assert_eq!(edges.len(), 6);
        assert_eq!(
            edges.iter().filter(|l| l.contains("label=\"a0\"")).count(),
            4
        );
        assert_eq!(
            edges.iter().filter(|l| l.contains("label=\"t0\"")).count(),
            2
        );
    }
}
