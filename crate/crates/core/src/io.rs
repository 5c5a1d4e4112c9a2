//! Plain-text hypergraph files.
//!
//! ```text
//! # comment
//! h <n> <m>
//! e v1 v2 ... vk
//! ```
//!
//! Vertices are 0-based. Blank lines and `#` comments are skipped. The
//! writer emits edges in lexicographic order so output is byte-stable.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "h {} {}", h.n(), h.num_edges());
    for e in h.edges() {
        out.push('e');
        for v in e {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    out
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse { line: line_no, msg };
        let mut tokens = line.split_whitespace();
        let tag = tokens.next().unwrap_or_default();
        let nums = tokens
            .map(|t| t.parse::<usize>().map_err(|_| err(format!("bad integer {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        match tag {
            "h" => {
                if header.is_some() {
                    return Err(err("duplicate header".into()));
                }
                if nums.len() != 2 {
                    return Err(err("header must be `h <n> <m>`".into()));
                }
                header = Some((nums[0], nums[1]));
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(err("edge before header".into()));
                };
                if nums.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(err("edge vertices must be strictly increasing".into()));
                }
                if let Some(&v) = nums.iter().find(|&&v| v >= n) {
                    return Err(err(format!("vertex {v} out of range for {n} vertices")));
                }
                edges.push(nums);
            }
            other => return Err(err(format!("unknown record {other:?}"))),
        }
    }
    let (n, m) = header.ok_or(Error::Parse { line: 0, msg: "missing header".into() })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    let h = Hypergraph::new(n, &edges).map_err(|e| Error::Parse { line: 0, msg: e.to_string() })?;
    if h.num_edges() != m {
        return Err(Error::Parse { line: 0, msg: "duplicate edges".into() });
    }
    Ok(h)
}
