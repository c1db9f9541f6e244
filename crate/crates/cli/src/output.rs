//! Rendering: human-readable text, schema-versioned line-delimited records,
//! and DOT graph export.

use idealgraph::edges::SchemeDiagnostics;
use idealgraph::intpoly::IntPoly;
use idealgraph::monomial::Direction;
use idealgraph::partitions::IdealGraph;
use idealgraph::simplicial::{face_vertices, SimplicialComplex};
use serde_json::{json, Value};

pub const SCHEMA: &str = "idealgraph/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Human,
    JsonLines,
    Dot,
}

/// A polynomial as text plus explicit integer terms.
pub fn poly_value(p: &IntPoly, names: &[String]) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| json!([c.to_string(), m.exponents()]))
        .collect();
    json!({ "text": p.format(names), "terms": terms })
}

pub fn direction_value(c: &Direction) -> Value {
    json!(c.entries())
}

pub fn diagnostics_value(d: &SchemeDiagnostics) -> Value {
    json!({
        "empty": d.is_empty,
        "zero_dimensional": d.zero_dimensional,
        "quotient_dim": d.quotient_dim,
        "has_nonzero_nilpotent": d.has_nonzero_nilpotent,
    })
}

pub fn diagnostics_text(d: &SchemeDiagnostics) -> String {
    if d.is_empty {
        return "empty scheme".to_string();
    }
    let mut parts = Vec::new();
    match d.quotient_dim {
        Some(dim) => parts.push(format!("quotient dimension {}", dim)),
        None => parts.push("positive-dimensional".to_string()),
    }
    match d.has_nonzero_nilpotent {
        Some(true) => parts.push("nonzero nilpotent present".to_string()),
        Some(false) => parts.push("reduced".to_string()),
        None => {}
    }
    parts.join(", ")
}

/// One json-lines record with the schema tag.
pub fn record(kind: &str, mut fields: Value) -> String {
    let obj = fields.as_object_mut().expect("record fields are an object");
    obj.insert("schema".into(), json!(SCHEMA));
    obj.insert("record".into(), json!(kind));
    serde_json::to_string(&obj).expect("serializable")
}

pub fn facet_list_text(x: &SimplicialComplex) -> String {
    if x.is_void() {
        return "-".to_string();
    }
    let compact = x.nvars() <= 9;
    x.facets()
        .iter()
        .map(|&f| {
            let verts = face_vertices(f);
            if compact && !verts.is_empty() {
                verts
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join("")
            } else {
                format!(
                    "{{{}}}",
                    verts
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}

pub fn facets_value(x: &SimplicialComplex) -> Value {
    let facets: Vec<Vec<usize>> = x.facets().iter().map(|&f| face_vertices(f)).collect();
    json!(facets)
}

/// DOT export with partition labels (or ideal text when labels are absent).
pub fn graph_dot(graph: &IdealGraph, name: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!("graph \"{}\" {{\n", name));
    for (i, label) in graph.labels.iter().enumerate() {
        out.push_str(&format!("  v{} [label=\"{}\"];\n", i, label));
    }
    for edge in &graph.edges {
        out.push_str(&format!(
            "  v{} -- v{} [label=\"{}\"];\n",
            edge.endpoints.0, edge.endpoints.1, edge.direction
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use idealgraph::field::Field;
    use idealgraph::partitions::partition_graph;
    use idealgraph::simplicial::face_from_vertices;

    #[test]
    fn dot_contains_every_vertex_and_edge() {
        let g = partition_graph(3, &Field::Q, 13).unwrap();
        let dot = graph_dot(&g, "G3");
        assert!(dot.starts_with("graph \"G3\""));
        let nodes = dot
            .lines()
            .filter(|l| l.contains("[label=") && !l.contains(" -- "))
            .count();
        assert_eq!(nodes, 3);
        assert_eq!(dot.matches(" -- ").count(), g.edges.len());
    }

    #[test]
    fn facet_lists() {
        let x = SimplicialComplex::from_faces(
            4,
            vec![
                face_from_vertices(&[1, 2, 3]),
                face_from_vertices(&[1, 2, 4]),
            ],
        )
        .unwrap();
        assert_eq!(facet_list_text(&x), "123,124");
        assert_eq!(facet_list_text(&SimplicialComplex::void(2)), "-");
    }

    #[test]
    fn records_carry_schema() {
        let r = record("test", json!({"a": 1}));
        let v: Value = serde_json::from_str(&r).unwrap();
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["record"], "test");
    }
}
