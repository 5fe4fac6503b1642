//! Ordered graphs on a vertex set `0..n` whose linear order is the numeric one.
//!
//! Vertex indices are 0-based in code. The text formats are 1-based:
//!
//! ```text
//! n 4
//! # comment
//! 1 2
//! 1 3
//! ```
//!
//! and the inline form `n=4;e=1-2,1-3`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

fn parse_err(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        message: message.into(),
    }
}

/// A simple graph with a fixed linear order on its vertices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedGraph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    left: Vec<Vec<Vertex>>,
    right: Vec<Vec<Vertex>>,
}

impl OrderedGraph {
    /// Builds a graph from 0-based edges. Endpoints may be given in either
    /// order; duplicates are merged.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            list.push((a.min(b), a.max(b)));
        }
        Ok(Self::from_sorted(n, list))
    }

    /// Panicking variant of [`OrderedGraph::new`] for edges known to be valid.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::new(n, edges).expect("invalid edge list")
    }

    fn from_sorted(n: usize, mut edges: Vec<(Vertex, Vertex)>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let mut left = vec![Vec::new(); n];
        let mut right = vec![Vec::new(); n];
        for &(u, v) in &edges {
            right[u].push(v);
            left[v].push(u);
        }
        for l in &mut left {
            l.sort_unstable();
        }
        OrderedGraph { n, edges, left, right }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self::from_sorted(n, edges)
    }

    /// `k` edges from a common leftmost centre.
    pub fn right_star(k: usize) -> Self {
        Self::from_sorted(k + 1, (1..=k).map(|v| (0, v)).collect())
    }

    /// `k` edges into a common rightmost centre.
    pub fn left_star(k: usize) -> Self {
        Self::right_star(k).mirror()
    }

    /// Path `0-1-...-(n-1)`.
    pub fn monotone_path(n: usize) -> Self {
        Self::from_sorted(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    /// `k` consecutive disjoint edges `01, 23, ...`.
    pub fn monotone_matching(k: usize) -> Self {
        Self::from_sorted(2 * k, (0..k).map(|i| (2 * i, 2 * i + 1)).collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let e = (u.min(v), u.max(v));
        self.edges.binary_search(&e).ok()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.right[u.min(v)].binary_search(&u.max(v)).is_ok()
    }

    pub fn left_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.left[v]
    }

    pub fn right_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.right[v]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.left[v].iter().chain(self.right[v].iter()).copied()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.left[v].len() + self.right[v].len()
    }

    pub fn is_isolated(&self, v: Vertex) -> bool {
        self.degree(v) == 0
    }

    /// Reverses the vertex order.
    pub fn mirror(&self) -> Self {
        let n = self.n;
        Self::from_sorted(n, self.edges.iter().map(|&(u, v)| (n - 1 - v, n - 1 - u)).collect())
    }

    /// The subgraph induced by `vertices`, relabelled to `0..k` in order.
    pub fn induced(&self, vertices: &[Vertex]) -> Self {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vs.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
            .map(|&(u, v)| (pos[u], pos[v]))
            .collect();
        Self::from_sorted(vs.len(), edges)
    }

    /// Same vertex set, keeping the edges whose index satisfies `keep`.
    pub fn spanning_subgraph(&self, mut keep: impl FnMut(usize) -> bool) -> Self {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| keep(i))
            .map(|(_, &e)| e)
            .collect();
        Self::from_sorted(self.n, edges)
    }

    pub fn without_edge(&self, index: usize) -> Self {
        self.spanning_subgraph(|i| i != index)
    }

    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Self {
        let mut edges = self.edges.clone();
        edges.push((u.min(v), u.max(v)));
        Self::from_sorted(self.n, edges)
    }

    pub fn without_vertex(&self, v: Vertex) -> Self {
        let keep: Vec<Vertex> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Drops every isolated vertex.
    pub fn without_isolated(&self) -> Self {
        let keep: Vec<Vertex> = (0..self.n).filter(|&u| !self.is_isolated(u)).collect();
        self.induced(&keep)
    }

    pub fn isolated_count(&self) -> usize {
        (0..self.n).filter(|&u| self.is_isolated(u)).count()
    }

    /// Unchecked constructor for builders that assemble graphs from pieces.
    pub(crate) fn from_parts(n: usize, edges: Vec<(Vertex, Vertex)>) -> Self {
        Self::from_sorted(n, edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect())
    }

    /// Parses the line-based text format.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match n {
                None => {
                    if fields.len() != 2 || fields[0] != "n" {
                        return Err(parse_err(line_no, "expected header `n <count>`"));
                    }
                    let count = fields[1]
                        .parse::<usize>()
                        .map_err(|_| parse_err(line_no, format!("bad vertex count `{}`", fields[1])))?;
                    n = Some(count);
                }
                Some(count) => {
                    if fields.len() != 2 {
                        return Err(parse_err(line_no, "expected an edge `<u> <v>`"));
                    }
                    let u = parse_vertex(fields[0], count, line_no)?;
                    let v = parse_vertex(fields[1], count, line_no)?;
                    if u >= v {
                        return Err(parse_err(
                            line_no,
                            format!("edge {} {} must satisfy u < v", u + 1, v + 1),
                        ));
                    }
                    edges.push(((u, v), line_no));
                }
            }
        }
        let n = n.ok_or_else(|| parse_err(1, "missing header `n <count>`"))?;
        let mut sorted: Vec<_> = edges.clone();
        sorted.sort();
        for w in sorted.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(parse_err(
                    w[1].1,
                    format!("duplicate edge {} {}", w[1].0 .0 + 1, w[1].0 .1 + 1),
                ));
            }
        }
        Ok(Self::from_sorted(n, edges.into_iter().map(|(e, _)| e).collect()))
    }

    /// Parses the inline form `n=5;e=1-2,2-4`.
    pub fn parse_inline(text: &str) -> Result<Self, GraphError> {
        let mut n = None;
        let mut edge_text = "";
        for part in text.trim().split(';') {
            let part = part.trim();
            if let Some(rest) = part.strip_prefix("n=") {
                n = Some(
                    rest.trim()
                        .parse::<usize>()
                        .map_err(|_| parse_err(1, format!("bad vertex count `{rest}`")))?,
                );
            } else if let Some(rest) = part.strip_prefix("e=") {
                edge_text = rest;
            } else if !part.is_empty() {
                return Err(parse_err(1, format!("unexpected field `{part}`")));
            }
        }
        let n = n.ok_or_else(|| parse_err(1, "missing `n=`"))?;
        let mut edges = Vec::new();
        for item in edge_text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (a, b) = item
                .split_once('-')
                .ok_or_else(|| parse_err(1, format!("bad edge `{item}`")))?;
            let u = parse_vertex(a.trim(), n, 1)?;
            let v = parse_vertex(b.trim(), n, 1)?;
            if u == v {
                return Err(parse_err(1, format!("self-loop `{item}`")));
            }
            edges.push((u.min(v), u.max(v)));
        }
        Ok(Self::from_sorted(n, edges))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for &(u, v) in &self.edges {
            out.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        out
    }

    pub fn to_inline(&self) -> String {
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|&(u, v)| format!("{}-{}", u + 1, v + 1))
            .collect();
        format!("n={};e={}", self.n, edges.join(","))
    }
}

fn parse_vertex(field: &str, n: usize, line: usize) -> Result<Vertex, GraphError> {
    let x = field
        .parse::<usize>()
        .map_err(|_| parse_err(line, format!("bad vertex `{field}`")))?;
    if x == 0 || x > n {
        return Err(parse_err(line, format!("vertex {x} outside 1..={n}")));
    }
    Ok(x - 1)
}

impl fmt::Display for OrderedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_inline())
    }
}

impl fmt::Debug for OrderedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrderedGraph({})", self.to_inline())
    }
}

impl FromStr for OrderedGraph {
    type Err = GraphError;

    /// Accepts either the inline form or the line-based format.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim_start().starts_with("n=") {
            Self::parse_inline(s)
        } else {
            Self::parse(s)
        }
    }
}
