//! File formats. Writers emit one canonical compact form: edges as `[u, v]`
//! with `u < v` in lexicographic order, vertex lists sorted ascending, and a
//! trailing newline. Readers accept any edge order and orientation.

use std::fs;
use std::path::Path;

use constel_core::constellation::ConstellationError;
use constel_core::hypergraph::HypergraphError;
use constel_core::models::ModelViolation;
use constel_core::width::{Certificate, WidthResult};
use constel_core::{ApexOrder, Constellation, Graph, GraphError, Hypergraph, IndexSequence, InducedModel, VertexSet};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("line {line}: {msg}")]
    Text { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("not a constellation: {}", join(.0))]
    Constellation(Vec<ConstellationError>),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error("not an induced model: {0:?}")]
    Model(Vec<ModelViolation>),
    #[error("invalid sequence: {0}")]
    Sequence(String),
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstellationJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub apex: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
    /// Optional apex order, least first.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphJson {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub a_sets: Vec<Vec<usize>>,
    pub b_sets: Vec<Vec<usize>>,
}

/// Treewidth certificates carry an elimination order, pathwidth ones a layout.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub width: WidthKind,
    pub value: usize,
    pub order: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WidthKind {
    Treewidth,
    Pathwidth,
}

fn edge_list(g: &Graph) -> Vec<[usize; 2]> {
    g.edges().into_iter().map(|(u, v)| [u, v]).collect()
}

fn sorted(v: &[usize]) -> Vec<usize> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

fn to_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn graph_from(n: usize, edges: &[[usize; 2]]) -> Result<Graph, IoError> {
    Ok(Graph::from_edges(n, edges.iter().map(|&[u, v]| (u, v)))?)
}

pub fn graph_to_json(g: &Graph) -> GraphJson {
    GraphJson {
        n: g.n(),
        edges: edge_list(g),
    }
}

pub fn write_graph(g: &Graph) -> String {
    to_line(&graph_to_json(g))
}

pub fn parse_graph(text: &str) -> Result<Graph, IoError> {
    let j: GraphJson = serde_json::from_str(text)?;
    graph_from(j.n, &j.edges)
}

/// One `u v` pair per line; `#` starts a comment. A line with a single id
/// declares a vertex, which is how isolated vertices are listed. The vertex
/// count is one more than the largest id.
pub fn parse_edge_list(text: &str) -> Result<Graph, IoError> {
    let mut edges = Vec::new();
    let mut n = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let ids = line
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| IoError::Text {
                line: i + 1,
                msg: e.to_string(),
            })?;
        match ids[..] {
            [v] => n = n.max(v + 1),
            [u, v] => {
                n = n.max(u.max(v) + 1);
                edges.push((u, v));
            }
            _ => {
                return Err(IoError::Text {
                    line: i + 1,
                    msg: format!("expected `u v`, got {} ids", ids.len()),
                })
            }
        }
    }
    Ok(Graph::from_edges(n, edges)?)
}

pub fn constellation_to_json(c: &Constellation, order: Option<&ApexOrder>) -> ConstellationJson {
    ConstellationJson {
        n: c.host().n(),
        edges: edge_list(c.host()),
        apex: c.apex().iter().collect(),
        paths: c.paths().to_vec(),
        order: order.map(|o| o.as_slice().to_vec()),
    }
}

pub fn write_constellation(c: &Constellation, order: Option<&ApexOrder>) -> String {
    to_line(&constellation_to_json(c, order))
}

/// Parses and validates. The optional order is returned unchecked.
pub fn parse_constellation(text: &str) -> Result<(Constellation, Option<ApexOrder>), IoError> {
    let j: ConstellationJson = serde_json::from_str(text)?;
    let g = graph_from(j.n, &j.edges)?;
    let c = Constellation::validate(g, j.apex.into_iter().collect(), j.paths).map_err(IoError::Constellation)?;
    Ok((c, j.order.map(ApexOrder::new)))
}

pub fn hypergraph_to_json(h: &Hypergraph) -> HypergraphJson {
    HypergraphJson {
        n: h.n(),
        edges: h.edges().iter().map(|e| sorted(e)).collect(),
    }
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    to_line(&hypergraph_to_json(h))
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, IoError> {
    let j: HypergraphJson = serde_json::from_str(text)?;
    Ok(Hypergraph::new(j.n, j.edges)?)
}

pub fn model_to_json(m: &InducedModel) -> ModelJson {
    let sets = |s: &[VertexSet]| s.iter().map(|b| b.iter().collect()).collect();
    ModelJson {
        n: m.host().n(),
        edges: edge_list(m.host()),
        a_sets: sets(m.a_sets()),
        b_sets: sets(m.b_sets()),
    }
}

pub fn write_model(m: &InducedModel) -> String {
    to_line(&model_to_json(m))
}

/// Parses and verifies an induced model.
pub fn parse_model(text: &str) -> Result<InducedModel, IoError> {
    let (g, a, b) = parse_model_parts(text)?;
    InducedModel::verify(g, a, b).map_err(IoError::Model)
}

/// Parses a model file without verifying it.
pub fn parse_model_parts(text: &str) -> Result<(Graph, Vec<VertexSet>, Vec<VertexSet>), IoError> {
    let j: ModelJson = serde_json::from_str(text)?;
    let g = graph_from(j.n, &j.edges)?;
    let sets = |s: Vec<Vec<usize>>| s.into_iter().map(|b| b.into_iter().collect()).collect();
    Ok((g, sets(j.a_sets), sets(j.b_sets)))
}

pub fn write_sequence(a: &IndexSequence) -> String {
    to_line(&a.as_slice())
}

pub fn parse_sequence(text: &str) -> Result<IndexSequence, IoError> {
    let v: Vec<usize> = serde_json::from_str(text)?;
    IndexSequence::new(v).map_err(|e| IoError::Sequence(e.to_string()))
}

pub fn certificate_to_json(r: &WidthResult) -> CertificateJson {
    let (width, order) = match &r.certificate {
        Certificate::EliminationOrder(o) => (WidthKind::Treewidth, o.clone()),
        Certificate::Layout(o) => (WidthKind::Pathwidth, o.clone()),
    };
    CertificateJson {
        width,
        value: r.value,
        order,
    }
}

pub fn write_certificate(r: &WidthResult) -> String {
    to_line(&certificate_to_json(r))
}

pub fn parse_certificate(text: &str) -> Result<WidthResult, IoError> {
    let j: CertificateJson = serde_json::from_str(text)?;
    let certificate = match j.width {
        WidthKind::Treewidth => Certificate::EliminationOrder(j.order),
        WidthKind::Pathwidth => Certificate::Layout(j.order),
    };
    Ok(WidthResult {
        value: j.value,
        certificate,
    })
}

pub fn read_file(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })
}

/// Graphs from `.json` files are read as graph JSON, anything else as an edge list.
/// Constellation and model files also work, since extra fields are ignored.
pub fn load_graph(path: &Path) -> Result<Graph, IoError> {
    let text = read_file(path)?;
    if path.extension().is_some_and(|e| e == "json") {
        parse_graph(&text)
    } else {
        parse_edge_list(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use constel_core::generators::{occultation_ample, wall, zigzag_graph};

    #[test]
    fn canonical_graph_text() {
        let g = Graph::from_edges(4, [(2, 1), (0, 3), (1, 0)]).unwrap();
        assert_eq!(write_graph(&g), "{\"n\":4,\"edges\":[[0,1],[0,3],[1,2]]}\n");
        let back = parse_graph("{\"edges\":[[3,0],[1,2],[0,1]],\"n\":4}").unwrap();
        assert_eq!(write_graph(&back), write_graph(&g));
    }

    #[test]
    fn edge_list_reader() {
        let g = parse_edge_list("# a path\n0 1\n1 2 # middle\n\n5\n").unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert!(matches!(parse_edge_list("0 1 2"), Err(IoError::Text { line: 1, .. })));
        assert!(matches!(parse_edge_list("0 x"), Err(IoError::Text { .. })));
        assert!(parse_edge_list("1 1").is_err());
    }

    #[test]
    fn constellation_round_trip() {
        let (c, order) = occultation_ample(3, 2);
        let text = write_constellation(&c, Some(&order));
        let (back, o) = parse_constellation(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(o, Some(order));
        assert_eq!(write_constellation(&back, o.as_ref()), text);
        let plain = write_constellation(&zigzag_graph(3, 1), None);
        assert!(!plain.contains("order"));
    }

    #[test]
    fn invalid_constellation_is_reported() {
        let text = "{\"n\":3,\"edges\":[[0,1],[1,2]],\"apex\":[0,1],\"paths\":[[2]]}";
        match parse_constellation(text) {
            Err(IoError::Constellation(errs)) => assert!(!errs.is_empty()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn other_formats_round_trip() {
        let h = parse_hypergraph("{\"n\":4,\"edges\":[[2,0],[1],[0,2]]}").unwrap();
        assert_eq!(write_hypergraph(&h), "{\"n\":4,\"edges\":[[0,2],[1],[0,2]]}\n");
        let m = InducedModel::from_constellation(&zigzag_graph(3, 2));
        let back = parse_model(&write_model(&m)).unwrap();
        assert_eq!(back, m);
        let seq = parse_sequence("[1,2,3,2]").unwrap();
        assert_eq!(write_sequence(&seq), "[1,2,3,2]\n");
        assert!(parse_sequence("[]").is_err());
        let r = constel_core::width::treewidth_exact(&wall(2), 18).unwrap();
        assert_eq!(parse_certificate(&write_certificate(&r)).unwrap(), r);
    }
}
