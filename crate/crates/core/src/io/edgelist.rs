//! Whitespace edge lists.
//!
//! One edge per line as two node tokens; a line with a single token declares
//! a node without forcing an edge. Lines starting with `#` or `%` are
//! comments. Tokens map to dense ids in order of first appearance.

use std::collections::HashMap;
use std::collections::HashSet;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DuplicatePolicy {
    /// Keep the first occurrence and record a warning.
    #[default]
    Dedupe,
    Reject,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseOptions {
    pub duplicates: DuplicatePolicy,
    /// Reject self-loops (otherwise drop them with a warning).
    pub strict_self_loops: bool,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            duplicates: DuplicatePolicy::Dedupe,
            strict_self_loops: true,
        }
    }
}

/// A parsed edge list: the graph, the original token of every node id, and
/// any warnings raised while reading.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeList {
    pub graph: Graph,
    pub labels: Vec<String>,
    pub warnings: Vec<String>,
}

const DIRECTED_MARKERS: [&str; 4] = ["->", "<-", "-->", "<--"];

pub fn parse_edge_list_str<'a>(text: &'a str, options: ParseOptions) -> Result<EdgeList> {
    let mut ids: HashMap<&'a str, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut warnings = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            continue;
        }
        if DIRECTED_MARKERS.iter().any(|m| line.contains(m)) {
            return Err(Error::Parse {
                line: line_no,
                message: "directed edge marker found; only undirected edge lists are supported"
                    .into(),
            });
        }
        let tokens: Vec<&'a str> = line.split_whitespace().collect();
        if tokens.len() > 2 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected one or two node tokens, found {}", tokens.len()),
            });
        }
        let mut node = |tok: &'a str| -> usize {
            let next = labels.len();
            *ids.entry(tok).or_insert_with(|| {
                labels.push(tok.to_string());
                next
            })
        };
        let a = node(tokens[0]);
        let Some(&second) = tokens.get(1) else {
            continue;
        };
        let b = node(second);
        if a == b {
            let message = format!("self-loop on node '{}'", tokens[0]);
            if options.strict_self_loops {
                return Err(Error::Validation {
                    line: line_no,
                    message,
                });
            }
            log::warn!("line {line_no}: {message}; dropped");
            warnings.push(format!("line {line_no}: {message}; dropped"));
            continue;
        }
        let key = (a.min(b), a.max(b));
        if !seen.insert(key) {
            let message = format!("duplicate edge {} {}", tokens[0], second);
            if options.duplicates == DuplicatePolicy::Reject {
                return Err(Error::Validation {
                    line: line_no,
                    message,
                });
            }
            log::warn!("line {line_no}: {message}; kept once");
            warnings.push(format!("line {line_no}: {message}; kept once"));
            continue;
        }
        edges.push(key);
    }
    let graph = Graph::from_edges(labels.len(), edges)?;
    Ok(EdgeList {
        graph,
        labels,
        warnings,
    })
}

pub fn parse_edge_list(path: &Path, options: ParseOptions) -> Result<EdgeList> {
    let text = std::fs::read_to_string(path)?;
    parse_edge_list_str(&text, options)
}

/// Canonical text form: every node declared on its own line in id order,
/// then the edges in canonical order. Without labels, ids are used as tokens.
pub fn write_edge_list(g: &Graph, labels: Option<&[String]>) -> Result<String> {
    g.require_undirected("the edge-list writer")?;
    let n = g.node_count();
    let names: Vec<String> = match labels {
        Some(l) => {
            if l.len() != n {
                return Err(Error::input(format!("{} labels for {n} nodes", l.len())));
            }
            let mut unique = HashSet::new();
            for s in l {
                let ok = !s.is_empty()
                    && !s.chars().any(char::is_whitespace)
                    && !s.starts_with('#')
                    && !s.starts_with('%')
                    && !DIRECTED_MARKERS.iter().any(|m| s.contains(m));
                if !ok || !unique.insert(s.as_str()) {
                    return Err(Error::input(format!(
                        "label '{s}' cannot be written as a node token"
                    )));
                }
            }
            l.to_vec()
        }
        None => (0..n).map(|i| i.to_string()).collect(),
    };
    let mut out = format!("# nodes: {n}, edges: {}\n", g.edge_count());
    for name in &names {
        out.push_str(name);
        out.push('\n');
    }
    for &(u, v) in g.edges() {
        out.push_str(&names[u]);
        out.push(' ');
        out.push_str(&names[v]);
        out.push('\n');
    }
    Ok(out)
}

/// Sidecar `id,label` CSV.
pub fn write_labels(labels: &[String]) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(["id", "label"]).map_err(csv_error)?;
    for (i, l) in labels.iter().enumerate() {
        w.write_record([i.to_string().as_str(), l.as_str()])
            .map_err(csv_error)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::input(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::input(e.to_string()))
}

/// Reads a sidecar written by [`write_labels`].
pub fn read_labels(text: &str) -> Result<Vec<String>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let mut out = Vec::new();
    for (k, rec) in r.records().enumerate() {
        let rec = rec.map_err(csv_error)?;
        let line = k + 2;
        let id: usize = rec
            .get(0)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse {
                line,
                message: "bad id".into(),
            })?;
        if id != out.len() {
            return Err(Error::Parse {
                line,
                message: format!("expected id {}, found {id}", out.len()),
            });
        }
        out.push(rec.get(1).unwrap_or("").to_string());
    }
    Ok(out)
}

pub(crate) fn csv_error(e: csv::Error) -> Error {
    let line = e.position().map_or(0, |p| p.line() as usize);
    Error::Parse {
        line,
        message: e.to_string(),
    }
}

const KARATE: &str = include_str!("../../data/karate.edges");
const FLORENTINE: &str = include_str!("../../data/florentine.edges");

/// Zachary's karate club, 34 members.
pub fn karate() -> EdgeList {
    parse_edge_list_str(KARATE, ParseOptions::default()).expect("bundled fixture parses")
}

/// Padgett's Florentine marriage network, 16 families (Pucci isolated).
pub fn florentine() -> EdgeList {
    parse_edge_list_str(FLORENTINE, ParseOptions::default()).expect("bundled fixture parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures() {
        let k = karate();
        assert_eq!((k.graph.node_count(), k.graph.edge_count()), (34, 78));
        assert_eq!(k.labels[0], "1");
        assert_eq!(k.graph.component_count(), 1);
        let f = florentine();
        assert_eq!((f.graph.node_count(), f.graph.edge_count()), (16, 20));
        assert_eq!(f.graph.component_count(), 2);
        let pucci = f.labels.iter().position(|l| l == "Pucci").unwrap();
        assert_eq!(f.graph.degree(pucci), 0);
        let medici = f.labels.iter().position(|l| l == "Medici").unwrap();
        assert_eq!(f.graph.degree(medici), 6);
    }

    #[test]
    fn comments_and_first_appearance_ids() {
        let e =
            parse_edge_list_str("% header\n# c\n b a\n\na c\n", ParseOptions::default()).unwrap();
        assert_eq!(e.labels, vec!["b", "a", "c"]);
        assert_eq!(e.graph.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn duplicates() {
        let text = "a b\nb a\n";
        let e = parse_edge_list_str(text, ParseOptions::default()).unwrap();
        assert_eq!(e.graph.edge_count(), 1);
        assert_eq!(e.warnings.len(), 1);
        let strict = ParseOptions {
            duplicates: DuplicatePolicy::Reject,
            ..Default::default()
        };
        assert!(matches!(
            parse_edge_list_str(text, strict),
            Err(Error::Validation { line: 2, .. })
        ));
    }

    #[test]
    fn self_loops() {
        assert!(matches!(
            parse_edge_list_str("a b\nc c\n", ParseOptions::default()),
            Err(Error::Validation { line: 2, .. })
        ));
        let lax = ParseOptions {
            strict_self_loops: false,
            ..Default::default()
        };
        let e = parse_edge_list_str("a b\nc c\n", lax).unwrap();
        assert_eq!((e.graph.node_count(), e.graph.edge_count()), (3, 1));
    }

    #[test]
    fn malformed_lines() {
        assert!(matches!(
            parse_edge_list_str("a b\na b c\n", ParseOptions::default()),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list_str("# x\na -> b\n", ParseOptions::default()),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn round_trip() {
        let g = Graph::from_edges(5, vec![(0, 3), (1, 2), (2, 3)]).unwrap();
        let text = write_edge_list(&g, None).unwrap();
        assert_eq!(
            parse_edge_list_str(&text, ParseOptions::default())
                .unwrap()
                .graph,
            g
        );
        let f = florentine();
        let text = write_edge_list(&f.graph, Some(&f.labels)).unwrap();
        let back = parse_edge_list_str(&text, ParseOptions::default()).unwrap();
        assert_eq!(back.graph, f.graph);
        assert_eq!(back.labels, f.labels);
        assert_eq!(
            write_edge_list(&back.graph, Some(&back.labels)).unwrap(),
            text
        );
        let bad = vec![
            "a b".to_string(),
            "c".into(),
            "d".into(),
            "e".into(),
            "f".into(),
        ];
        assert!(write_edge_list(&g, Some(&bad)).is_err());
    }

    #[test]
    fn labels_sidecar() {
        let labels = vec!["x".to_string(), "has,comma".into(), "q\"uote".into()];
        let text = write_labels(&labels).unwrap();
        assert!(text.starts_with("id,label\n"));
        assert_eq!(read_labels(&text).unwrap(), labels);
    }
}
