//! Edge-list text, DOT export and the JSON eccentricity record.
//!
//! Edge lists are UTF-8 with one `u v` pair per line. Blank lines and lines
//! starting with `#` are skipped. A line holding a single id declares an
//! isolated vertex, which is how the one-vertex tree is written.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::eccentric::EccentricSequence;
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph, Tree};

struct Parsed {
    n: usize,
    edges: Vec<(usize, usize)>,
    edge_lines: Vec<usize>,
    first_seen: HashMap<usize, usize>,
}

fn parse_lines(text: &str) -> Result<Parsed> {
    let mut edges = Vec::new();
    let mut edge_lines = Vec::new();
    let mut first_seen = HashMap::new();
    let mut max_id: Option<(usize, usize)> = None;
    let mut seen_pairs = HashMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let syntax = || Error::Syntax {
            line,
            text: trimmed.to_string(),
        };
        let ids: Vec<usize> = trimmed
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| syntax())?;
        for &v in &ids {
            first_seen.entry(v).or_insert(line);
            if max_id.is_none_or(|(m, _)| v > m) {
                max_id = Some((v, line));
            }
        }
        match ids[..] {
            [_] => {}
            [u, v] => {
                if u == v {
                    return Err(Error::SelfLoop { line, vertex: u });
                }
                if seen_pairs.insert((u.min(v), u.max(v)), line).is_some() {
                    return Err(Error::DuplicateEdge { line, u, v });
                }
                edges.push((u, v));
                edge_lines.push(line);
            }
            _ => return Err(syntax()),
        }
    }
    let (max, max_line) = max_id.ok_or(Error::EmptyInput)?;
    if let Some(missing) = (0..=max).find(|v| !first_seen.contains_key(v)) {
        return Err(Error::NonContiguous {
            line: max_line,
            missing,
            max,
        });
    }
    Ok(Parsed {
        n: max + 1,
        edges,
        edge_lines,
        first_seen,
    })
}

/// Parses an edge list into a general graph.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let parsed = parse_lines(text)?;
    Graph::new(parsed.n, &parsed.edges)
}

/// Parses an edge list that must describe a tree.
pub fn parse_tree(text: &str) -> Result<Tree> {
    let parsed = parse_lines(text)?;
    let mut dsu: Vec<usize> = (0..parsed.n).collect();
    fn find(dsu: &mut [usize], mut x: usize) -> usize {
        while dsu[x] != x {
            dsu[x] = dsu[dsu[x]];
            x = dsu[x];
        }
        x
    }
    for (&(u, v), &line) in parsed.edges.iter().zip(&parsed.edge_lines) {
        let (a, b) = (find(&mut dsu, u), find(&mut dsu, v));
        if a == b {
            return Err(Error::Cycle { line, u, v });
        }
        dsu[a] = b;
    }
    let root = find(&mut dsu, 0);
    if let Some(vertex) = (0..parsed.n).find(|&v| find(&mut dsu, v) != root) {
        return Err(Error::Disconnected {
            line: parsed.first_seen[&vertex],
            vertex,
        });
    }
    Tree::new(Graph::new(parsed.n, &parsed.edges)?)
}

/// Writes `u v` lines, one per edge; a lone vertex is written as `0`.
pub fn write_edge_list(graph: &Graph) -> String {
    let mut out = String::new();
    if graph.size() == 0 {
        for v in 0..graph.order() {
            let _ = writeln!(out, "{v}");
        }
        return out;
    }
    for &(u, v) in graph.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

const DOT_PALETTE: [&str; 8] = [
    "white", "black", "gray", "red", "blue", "green", "orange", "purple",
];

/// Undirected DOT with vertex ids as labels. With a coloring, every vertex
/// gets a `color` attribute naming its class (`c<k>` past the palette).
pub fn to_dot(graph: &Graph, coloring: Option<&Coloring>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..graph.order() {
        match coloring {
            Some(c) => {
                let k = c.colors()[v] as usize;
                let name = DOT_PALETTE
                    .get(k - 1)
                    .map(|s| s.to_string())
                    .unwrap_or_else(|| format!("c{k}"));
                let _ = writeln!(
                    out,
                    "  {v} [label=\"{v}\", color=\"{name}\", class={k}];"
                );
            }
            None => {
                let _ = writeln!(out, "  {v} [label=\"{v}\"];");
            }
        }
    }
    for &(u, v) in graph.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// `{"n":…,"radius":…,"diameter":…,"eccentric_sequence":[[i,m_i],…]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EccentricityRecord {
    pub n: usize,
    pub radius: usize,
    pub diameter: usize,
    pub eccentric_sequence: Vec<(usize, usize)>,
}

impl EccentricityRecord {
    pub fn of(tree: &Tree) -> Self {
        let seq = EccentricSequence::of(tree);
        Self {
            n: tree.order(),
            radius: seq.radius(),
            diameter: seq.diameter(),
            eccentric_sequence: seq.pairs().to_vec(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain record")
    }
}
