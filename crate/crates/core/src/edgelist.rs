//! Plain-text edge lists: a header line `n <count>`, then one `i j` line per
//! edge with `0 <= i < j < count`. `#` starts a comment, blank lines are
//! ignored.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match n {
            None => {
                if fields.len() != 2 || fields[0] != "n" {
                    return Err(Error::EdgeList {
                        line,
                        msg: format!("expected header 'n <count>', got '{content}'"),
                    });
                }
                let count: usize = fields[1].parse().map_err(|_| Error::EdgeList {
                    line,
                    msg: format!("invalid vertex count '{}'", fields[1]),
                })?;
                n = Some(count);
            }
            Some(count) => {
                if fields.len() != 2 {
                    return Err(Error::EdgeList {
                        line,
                        msg: format!("expected edge 'i j', got '{content}'"),
                    });
                }
                let parse = |s: &str| -> Result<usize> {
                    s.parse().map_err(|_| Error::EdgeList {
                        line,
                        msg: format!("invalid vertex index '{s}'"),
                    })
                };
                let (i, j) = (parse(fields[0])?, parse(fields[1])?);
                if i == j {
                    return Err(Error::EdgeList { line, msg: format!("self-loop at vertex {i}") });
                }
                if i > j {
                    return Err(Error::EdgeList {
                        line,
                        msg: format!("endpoints must satisfy i < j, got {i} {j}"),
                    });
                }
                if j >= count {
                    return Err(Error::EdgeList {
                        line,
                        msg: format!("vertex {j} out of range for {count} vertices"),
                    });
                }
                if !seen.insert((i, j)) {
                    return Err(Error::EdgeList { line, msg: format!("duplicate edge {i} {j}") });
                }
                edges.push((i, j));
            }
        }
    }
    let Some(count) = n else {
        return Err(Error::EdgeList { line: 1, msg: "missing header 'n <count>'".into() });
    };
    Graph::new(count, edges).map_err(|e| match e {
        Error::Capability(msg) => Error::Capability(msg),
        other => Error::EdgeList { line: 1, msg: other.to_string() },
    })
}
