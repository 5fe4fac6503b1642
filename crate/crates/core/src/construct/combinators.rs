use crate::coloring::Color;
use crate::graph::{OrderedGraph, Vertex};
use crate::structure::DefiningSequence;

/// Assembles a graph left to right from pieces, keeping optional edge colors.
#[derive(Debug, Clone, Default)]
pub struct Builder {
    n: usize,
    edges: Vec<(Vertex, Vertex, Option<Color>)>,
}

impl Builder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.n += 1;
        self.n - 1
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex, color: Option<Color>) {
        self.edges.push((u.min(v), u.max(v), color));
    }

    /// Places `g` to the right of everything so far; returns its offset.
    pub fn append(&mut self, g: &OrderedGraph) -> usize {
        self.append_colored(g, None)
    }

    pub fn append_colored(&mut self, g: &OrderedGraph, colors: Option<&[Color]>) -> usize {
        let off = self.n;
        self.n += g.vertex_count();
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            self.edges.push((u + off, v + off, colors.map(|c| c[i])));
        }
        off
    }

    /// Places `g` so that its leftmost vertex is the current rightmost one;
    /// returns the offset of `g`'s vertex 0.
    pub fn glue(&mut self, g: &OrderedGraph) -> usize {
        self.glue_colored(g, None)
    }

    pub fn glue_colored(&mut self, g: &OrderedGraph, colors: Option<&[Color]>) -> usize {
        assert!(
            self.n > 0 && g.vertex_count() > 0,
            "gluing needs a vertex on both sides"
        );
        let off = self.n - 1;
        self.n = off + g.vertex_count();
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            self.edges.push((u + off, v + off, colors.map(|c| c[i])));
        }
        off
    }

    pub fn graph(&self) -> OrderedGraph {
        OrderedGraph::from_parts(self.n, self.edges.iter().map(|&(u, v, _)| (u, v)).collect())
    }

    /// The graph with colors aligned to its edge order; uncolored edges
    /// default to blue.
    pub fn colored_graph(&self) -> (OrderedGraph, Vec<Color>) {
        let g = self.graph();
        let mut colors = vec![Color::Blue; g.edge_count()];
        for &(u, v, c) in &self.edges {
            if let Some(c) = c {
                colors[g.edge_index(u, v).unwrap()] = c;
            }
        }
        (g, colors)
    }
}

/// `g ⊔ g2`: `g2` placed entirely to the right of `g`.
pub fn union_intervally(g: &OrderedGraph, g2: &OrderedGraph) -> OrderedGraph {
    union_all([g, g2])
}

pub fn union_all<'a>(gs: impl IntoIterator<Item = &'a OrderedGraph>) -> OrderedGraph {
    let mut b = Builder::new();
    for g in gs {
        b.append(g);
    }
    b.graph()
}

/// `g ∘ g2`: the rightmost vertex of `g` is identified with the leftmost
/// vertex of `g2`. Both must have a vertex.
pub fn concatenate(g: &OrderedGraph, g2: &OrderedGraph) -> Option<OrderedGraph> {
    if g.vertex_count() == 0 || g2.vertex_count() == 0 {
        return None;
    }
    let mut b = Builder::new();
    b.append(g);
    b.glue(g2);
    Some(b.graph())
}

/// `S_a ⊔ g ⊔ ... ⊔ g` (`b` copies) with an edge from the star centre to the
/// leftmost vertex of every copy.
pub fn hang(a: usize, copies: usize, g: &OrderedGraph) -> OrderedGraph {
    hang_colored(a, copies, g, None, |_| None).graph()
}

/// [`hang`] with colors: copies get `inner`, star edges and spokes get the
/// colors chosen by `spoke` (index `0..copies`, `None` for star edges).
pub(crate) fn hang_colored(
    a: usize,
    copies: usize,
    g: &OrderedGraph,
    inner: Option<&[Color]>,
    spoke: impl Fn(Option<usize>) -> Option<Color>,
) -> Builder {
    let mut b = Builder::new();
    let centre = b.add_vertex();
    for _ in 0..a {
        let leaf = b.add_vertex();
        b.add_edge(centre, leaf, spoke(None));
    }
    for t in 0..copies {
        let off = b.append_colored(g, inner);
        b.add_edge(centre, off, spoke(Some(t)));
    }
    b
}

/// `S_{d_hi} ∘ ... ∘ S_{d_lo}` for `1 <= lo`, `hi <= i`; a single vertex
/// when `lo > hi`.
pub fn caterpillar_segments(d: &DefiningSequence, lo: usize, hi: usize) -> OrderedGraph {
    let mut b = Builder::new();
    b.add_vertex();
    for k in (lo..=hi).rev() {
        b.glue(&OrderedGraph::right_star(d.d(k)));
    }
    b.graph()
}

/// `H_t(d) = S_{d_t} ∘ ... ∘ S_{d_1}`; a single vertex for `t = 0`.
pub fn caterpillar_prefix(d: &DefiningSequence, t: usize) -> OrderedGraph {
    caterpillar_segments(d, 1, t)
}

/// The right caterpillar with defining sequence `d`.
pub fn build_caterpillar(d: &DefiningSequence) -> OrderedGraph {
    caterpillar_prefix(d, d.len())
}
