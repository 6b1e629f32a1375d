//! Plain-text edge lists as distributed by SNAP.
//!
//! One edge per line, two whitespace-separated non-negative integers. Lines
//! starting with `#` or `%` and blank lines are skipped. Columns after the
//! second (weights, timestamps) are ignored.

use std::fs::File;
use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use thiserror::Error;

use crate::graph::{build_graph, Graph, LabelMap};

#[derive(Debug, Error)]
pub enum EdgeListError {
    #[error("cannot read edge list: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

/// Parses an edge list from any reader.
pub fn read_edge_list<R: Read>(reader: R) -> Result<(Graph, LabelMap), EdgeListError> {
    let mut edges = Vec::new();
    for (idx, line) in BufReader::new(reader).lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let mut endpoint = || -> Result<u64, EdgeListError> {
            let tok = fields.next().ok_or_else(|| EdgeListError::Parse {
                line: idx + 1,
                reason: "expected two vertex labels".into(),
            })?;
            tok.parse().map_err(|_| EdgeListError::Parse {
                line: idx + 1,
                reason: format!("invalid vertex label {tok:?}"),
            })
        };
        let u = endpoint()?;
        let v = endpoint()?;
        edges.push((u, v));
    }
    Ok(build_graph(edges))
}

pub fn load_edge_list(path: impl AsRef<Path>) -> Result<(Graph, LabelMap), EdgeListError> {
    read_edge_list(File::open(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skips_comments_and_blanks() {
        let text = "# FromNodeId ToNodeId\n% matrix-market style\n\n0 1\n1\t2\n2 0 17\n1 0\n3 3\n";
        let (g, labels) = read_edge_list(text.as_bytes()).unwrap();
        assert_eq!(g.num_vertices(), 4);
        assert_eq!(g.num_edges(), 3);
        assert_eq!(labels.original(3), 3);
    }

    #[test]
    fn reports_line_numbers() {
        let err = read_edge_list("0 1\n1 x\n".as_bytes()).unwrap_err();
        match err {
            EdgeListError::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            read_edge_list("7\n".as_bytes()),
            Err(EdgeListError::Parse { line: 1, .. })
        ));
        assert!(read_edge_list("-1 2\n".as_bytes()).is_err());
    }
}
