//! Red/blue edge colorings and the star, bipartite and bend colorings.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::embed::{find_embedding, Embedding};
use crate::graph::{OrderedGraph, Vertex};
use crate::structure::{components, is_forest};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("expected {expected} colors, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(Vertex),
    #[error("host is not a forest")]
    NotAForest,
    #[error("partition is not proper: edge {0}-{1} stays inside one side")]
    ImproperPartition(Vertex, Vertex),
}

/// A color for every edge of a host graph, indexed like `host.edges()`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    host: OrderedGraph,
    colors: Vec<Color>,
}

/// A monochromatic copy that a coloring was supposed to avoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub color: Color,
    pub embedding: Embedding,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.embedding.0.iter().map(|v| (v + 1).to_string()).collect();
        write!(
            f,
            "{} copy on vertices {}",
            if self.color == Color::Red { "red" } else { "blue" },
            vs.join(",")
        )
    }
}

impl EdgeColoring {
    pub fn new(host: OrderedGraph, colors: Vec<Color>) -> Result<Self, ColoringError> {
        if colors.len() != host.edge_count() {
            return Err(ColoringError::WrongLength {
                expected: host.edge_count(),
                got: colors.len(),
            });
        }
        Ok(EdgeColoring { host, colors })
    }

    pub fn uniform(host: &OrderedGraph, color: Color) -> Self {
        EdgeColoring {
            host: host.clone(),
            colors: vec![color; host.edge_count()],
        }
    }

    pub fn host(&self) -> &OrderedGraph {
        &self.host
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, edge: usize) -> Color {
        self.colors[edge]
    }

    pub fn color_of(&self, u: Vertex, v: Vertex) -> Option<Color> {
        self.host.edge_index(u, v).map(|i| self.colors[i])
    }

    pub fn set(&mut self, edge: usize, color: Color) {
        self.colors[edge] = color;
    }

    pub fn set_edge(&mut self, u: Vertex, v: Vertex, color: Color) {
        let i = self.host.edge_index(u, v).expect("edge of host");
        self.colors[i] = color;
    }

    /// Spanning subgraph of the edges with `color`.
    pub fn class(&self, color: Color) -> OrderedGraph {
        self.host.spanning_subgraph(|i| self.colors[i] == color)
    }

    pub fn swapped(&self) -> Self {
        EdgeColoring {
            host: self.host.clone(),
            colors: self.colors.iter().map(|c| c.other()).collect(),
        }
    }

    /// The same coloring viewed on the mirrored host.
    pub fn mirrored(&self) -> Self {
        let host = self.host.mirror();
        let n = host.vertex_count();
        let mut colors = vec![Color::Red; host.edge_count()];
        for (i, &(u, v)) in self.host.edges().iter().enumerate() {
            colors[host.edge_index(n - 1 - v, n - 1 - u).unwrap()] = self.colors[i];
        }
        EdgeColoring { host, colors }
    }

    pub fn copy_in(&self, color: Color, pattern: &OrderedGraph) -> Option<Embedding> {
        find_embedding(&self.class(color), pattern)
    }

    /// Checks that there is no red `h` and no blue `h2`.
    pub fn check_avoids(&self, h: &OrderedGraph, h2: &OrderedGraph) -> Result<(), Violation> {
        if let Some(embedding) = self.copy_in(Color::Red, h) {
            return Err(Violation {
                color: Color::Red,
                embedding,
            });
        }
        if let Some(embedding) = self.copy_in(Color::Blue, h2) {
            return Err(Violation {
                color: Color::Blue,
                embedding,
            });
        }
        Ok(())
    }

    /// One `u v R|B` line per edge, 1-based, in lexicographic edge order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (&(u, v), c) in self.host.edges().iter().zip(&self.colors) {
            out.push_str(&format!("{} {} {}\n", u + 1, v + 1, c.letter()));
        }
        out
    }

    /// Parses [`EdgeColoring::to_text`] output; every host edge must appear once.
    pub fn parse(host: &OrderedGraph, text: &str) -> Result<Self, ColoringError> {
        let err = |line: usize, message: String| ColoringError::Parse { line, message };
        let mut colors: Vec<Option<Color>> = vec![None; host.edge_count()];
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let f: Vec<&str> = body.split_whitespace().collect();
            if f.len() != 3 {
                return Err(err(line, "expected `<u> <v> R|B`".into()));
            }
            let num = |s: &str| s.parse::<usize>().ok().filter(|&x| x >= 1 && x <= host.vertex_count());
            let (Some(u), Some(v)) = (num(f[0]), num(f[1])) else {
                return Err(err(line, format!("bad vertex in `{body}`")));
            };
            let c = match f[2] {
                "R" | "r" => Color::Red,
                "B" | "b" => Color::Blue,
                other => return Err(err(line, format!("bad color `{other}`"))),
            };
            let Some(i) = host.edge_index(u - 1, v - 1).filter(|_| u < v) else {
                return Err(err(line, format!("{u} {v} is not an edge of the host")));
            };
            if colors[i].replace(c).is_some() {
                return Err(err(line, format!("edge {u} {v} colored twice")));
            }
        }
        if let Some(i) = colors.iter().position(Option::is_none) {
            let (u, v) = host.edges()[i];
            return Err(err(
                text.lines().count().max(1),
                format!("edge {} {} has no color", u + 1, v + 1),
            ));
        }
        Ok(EdgeColoring {
            host: host.clone(),
            colors: colors.into_iter().map(Option::unwrap).collect(),
        })
    }
}

impl fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.colors.iter().map(|c| c.letter()).collect();
        write!(f, "EdgeColoring({} {})", self.host.to_inline(), s)
    }
}

/// BFS distances from `root` over the edges allowed by `alive`, plus the edge
/// used to reach each vertex.
pub(crate) fn bfs_tree(g: &OrderedGraph, alive: &[bool], root: Vertex) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
    let n = g.vertex_count();
    let mut dist = vec![None; n];
    let mut via = vec![None; n];
    dist[root] = Some(0);
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for y in g.neighbors(x) {
            let e = g.edge_index(x, y).unwrap();
            if alive[e] && dist[y].is_none() {
                dist[y] = Some(dist[x].unwrap() + 1);
                via[y] = Some(e);
                queue.push_back(y);
            }
        }
    }
    (dist, via)
}

/// Red iff the distance of the edge to the root of its component is odd; an
/// edge at the root has distance 1. Each component not containing `root` uses
/// its smallest vertex.
pub fn star_coloring(f: &OrderedGraph, root: Vertex) -> Result<EdgeColoring, ColoringError> {
    if root >= f.vertex_count() {
        return Err(ColoringError::VertexOutOfRange(root));
    }
    let alive = vec![true; f.edge_count()];
    let mut dist = vec![0usize; f.vertex_count()];
    for comp in components(f) {
        let r = if comp.contains(&root) { root } else { comp[0] };
        let (d, _) = bfs_tree(f, &alive, r);
        for &v in &comp {
            dist[v] = d[v].unwrap();
        }
    }
    let colors = f
        .edges()
        .iter()
        .map(|&(u, v)| {
            if (dist[u].min(dist[v]) + 1) % 2 == 1 {
                Color::Red
            } else {
                Color::Blue
            }
        })
        .collect();
    Ok(EdgeColoring {
        host: f.clone(),
        colors,
    })
}

/// Red iff the left endpoint lies in `A` (`in_a[v]`). The partition must be
/// proper.
pub fn bipartite_coloring(f: &OrderedGraph, in_a: &[bool]) -> Result<EdgeColoring, ColoringError> {
    if in_a.len() != f.vertex_count() {
        return Err(ColoringError::WrongLength {
            expected: f.vertex_count(),
            got: in_a.len(),
        });
    }
    if let Some(&(u, v)) = f.edges().iter().find(|&&(u, v)| in_a[u] == in_a[v]) {
        return Err(ColoringError::ImproperPartition(u, v));
    }
    Ok(EdgeColoring {
        host: f.clone(),
        colors: side_rule(f, in_a),
    })
}

pub(crate) fn side_rule(f: &OrderedGraph, in_a: &[bool]) -> Vec<Color> {
    f.edges()
        .iter()
        .map(|&(u, _)| if in_a[u] { Color::Red } else { Color::Blue })
        .collect()
}

/// Three vertices `x < y < z` with `z` adjacent to both others, or `x`
/// adjacent to both others: the shared vertex is an extreme of both edges.
pub fn is_bend(e: (Vertex, Vertex), f: (Vertex, Vertex)) -> bool {
    (e.0 == f.0 || e.1 == f.1) && e != f
}

/// Colors the tree containing `root` inside `alive` and writes into `out`.
pub(crate) fn bend_colors_into(g: &OrderedGraph, alive: &[bool], root: Vertex, out: &mut [Color]) {
    let (dist, via) = bfs_tree(g, alive, root);
    for (i, &(x, y)) in g.edges().iter().enumerate() {
        if !alive[i] || dist[x].is_none() {
            continue;
        }
        let near = if dist[x] < dist[y] { x } else { y };
        out[i] = if y == root {
            Color::Red
        } else if let Some(next) = via[near] {
            if is_bend((x, y), g.edges()[next]) {
                Color::Red
            } else {
                Color::Blue
            }
        } else {
            Color::Blue
        };
    }
}

/// Red iff the right endpoint is `root`, or the next edge on the path to the
/// root forms a bend with it. Components without `root` use their smallest
/// vertex.
pub fn bend_coloring(f: &OrderedGraph, root: Vertex) -> Result<EdgeColoring, ColoringError> {
    if root >= f.vertex_count() {
        return Err(ColoringError::VertexOutOfRange(root));
    }
    if !is_forest(f) {
        return Err(ColoringError::NotAForest);
    }
    let alive = vec![true; f.edge_count()];
    let mut colors = vec![Color::Blue; f.edge_count()];
    for comp in components(f) {
        let r = if comp.contains(&root) { root } else { comp[0] };
        bend_colors_into(f, &alive, r, &mut colors);
    }
    Ok(EdgeColoring {
        host: f.clone(),
        colors,
    })
}

/// A proper 2-coloring of the edges allowed by `alive`, with some vertices
/// pinned (`Some(true)` = side A). `None` if no such partition exists.
pub(crate) fn pinned_bipartition(g: &OrderedGraph, alive: &[bool], pins: &[Option<bool>]) -> Option<Vec<bool>> {
    let n = g.vertex_count();
    let mut side: Vec<Option<bool>> = vec![None; n];
    let order: Vec<Vertex> = (0..n)
        .filter(|&v| pins[v].is_some())
        .chain((0..n).filter(|&v| pins[v].is_none()))
        .collect();
    for s in order {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(pins[s].unwrap_or(true));
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            let sx = side[x].unwrap();
            for y in g.neighbors(x) {
                if !alive[g.edge_index(x, y).unwrap()] {
                    continue;
                }
                match side[y] {
                    Some(sy) if sy == sx => return None,
                    Some(_) => {}
                    None => {
                        if pins[y].is_some_and(|p| p == sx) {
                            return None;
                        }
                        side[y] = Some(!sx);
                        queue.push_back(y);
                    }
                }
            }
        }
    }
    Some(side.into_iter().map(|s| s.unwrap()).collect())
}
