//! Structural predicates on ordered graphs.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::graph::{OrderedGraph, Vertex};

/// Flags and degree data computed by [`classify_structure`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub is_forest: bool,
    pub is_pseudoforest: bool,
    /// A pseudoforest with at least one cycle.
    pub is_proper_pseudoforest: bool,
    pub is_partial_matching: bool,
    pub is_monotone_matching: bool,
    pub is_monotone_path: bool,
    pub is_left_star: bool,
    pub is_right_star: bool,
    pub is_star_forest: bool,
    pub is_connected: bool,
    pub left_degrees: Vec<usize>,
    pub right_degrees: Vec<usize>,
    pub max_left_degree: usize,
    pub max_right_degree: usize,
    pub components: Vec<Vec<Vertex>>,
}

pub fn classify_structure(g: &OrderedGraph) -> StructureReport {
    let n = g.vertex_count();
    let left_degrees: Vec<usize> = (0..n).map(|v| g.left_neighbors(v).len()).collect();
    let right_degrees: Vec<usize> = (0..n).map(|v| g.right_neighbors(v).len()).collect();
    let components = components(g);
    StructureReport {
        vertex_count: n,
        edge_count: g.edge_count(),
        is_forest: is_forest(g),
        is_pseudoforest: is_pseudoforest(g),
        is_proper_pseudoforest: is_pseudoforest(g) && !is_forest(g),
        is_partial_matching: is_partial_matching(g),
        is_monotone_matching: is_monotone_matching(g),
        is_monotone_path: is_monotone_path(g),
        is_left_star: is_left_star(g),
        is_right_star: is_right_star(g),
        is_star_forest: is_star_forest(g),
        is_connected: n > 0 && components.len() == 1,
        max_left_degree: left_degrees.iter().copied().max().unwrap_or(0),
        max_right_degree: right_degrees.iter().copied().max().unwrap_or(0),
        left_degrees,
        right_degrees,
        components,
    }
}

/// Connected components as sorted vertex lists, ordered by smallest vertex.
pub fn components(g: &OrderedGraph) -> Vec<Vec<Vertex>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Components with at least one edge, each relabelled as its own graph.
pub fn nontrivial_component_graphs(g: &OrderedGraph) -> Vec<OrderedGraph> {
    components(g)
        .into_iter()
        .filter(|c| c.len() > 1)
        .map(|c| g.induced(&c))
        .collect()
}

pub fn is_connected(g: &OrderedGraph) -> bool {
    g.vertex_count() > 0 && components(g).len() == 1
}

fn component_edge_counts(g: &OrderedGraph) -> Vec<(usize, usize)> {
    let comps = components(g);
    let mut which = vec![0; g.vertex_count()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            which[v] = i;
        }
    }
    let mut counts: Vec<(usize, usize)> = comps.iter().map(|c| (c.len(), 0)).collect();
    for &(u, _) in g.edges() {
        counts[which[u]].1 += 1;
    }
    counts
}

pub fn is_forest(g: &OrderedGraph) -> bool {
    component_edge_counts(g).iter().all(|&(v, e)| e < v)
}

/// Every component has at most as many edges as vertices.
pub fn is_pseudoforest(g: &OrderedGraph) -> bool {
    component_edge_counts(g).iter().all(|&(v, e)| e <= v)
}

pub fn has_cycle(g: &OrderedGraph) -> bool {
    !is_forest(g)
}

pub fn is_partial_matching(g: &OrderedGraph) -> bool {
    (0..g.vertex_count()).all(|v| g.degree(v) <= 1)
}

/// Exactly `K2 ⊔ ... ⊔ K2` with at least one edge and no isolated vertex.
pub fn is_monotone_matching(g: &OrderedGraph) -> bool {
    let n = g.vertex_count();
    n >= 2 && n.is_multiple_of(2) && *g == OrderedGraph::monotone_matching(n / 2)
}

/// Exactly the path `0-1-...-(n-1)` with at least one edge.
pub fn is_monotone_path(g: &OrderedGraph) -> bool {
    g.vertex_count() >= 2 && *g == OrderedGraph::monotone_path(g.vertex_count())
}

/// A star whose centre is its leftmost vertex, without isolated vertices.
pub fn is_right_star(g: &OrderedGraph) -> bool {
    g.vertex_count() >= 2
        && g.right_neighbors(0).len() == g.vertex_count() - 1
        && g.edge_count() == g.vertex_count() - 1
}

pub fn is_left_star(g: &OrderedGraph) -> bool {
    is_right_star(&g.mirror())
}

/// Connected with a vertex incident to every edge (an unordered star).
pub fn is_star(g: &OrderedGraph) -> bool {
    let n = g.vertex_count();
    n >= 2 && g.edge_count() == n - 1 && (0..n).any(|v| g.degree(v) == n - 1)
}

/// Every component with an edge is a star.
pub fn is_star_forest(g: &OrderedGraph) -> bool {
    nontrivial_component_graphs(g).iter().all(is_star)
}

/// Every component with an edge satisfies `pred`.
pub fn all_components(g: &OrderedGraph, pred: impl Fn(&OrderedGraph) -> bool) -> bool {
    nontrivial_component_graphs(g).iter().all(pred)
}

pub fn max_left_degree(g: &OrderedGraph) -> usize {
    (0..g.vertex_count())
        .map(|v| g.left_neighbors(v).len())
        .max()
        .unwrap_or(0)
}

pub fn max_right_degree(g: &OrderedGraph) -> usize {
    (0..g.vertex_count())
        .map(|v| g.right_neighbors(v).len())
        .max()
        .unwrap_or(0)
}

/// Some vertex has a neighbour on each side.
pub fn contains_monotone_p3(g: &OrderedGraph) -> bool {
    (0..g.vertex_count()).any(|v| !g.left_neighbors(v).is_empty() && !g.right_neighbors(v).is_empty())
}

/// A star with three edges whose centre has neighbours on both sides.
pub fn contains_mixed_three_star(g: &OrderedGraph) -> bool {
    (0..g.vertex_count()).any(|v| {
        let (l, r) = (g.left_neighbors(v).len(), g.right_neighbors(v).len());
        l >= 1 && r >= 1 && l + r >= 3
    })
}

/// Vertex sequences `a-b-c-d` forming a path with three edges, each path
/// listed once (from the end with the smaller first vertex).
pub fn paths_with_three_edges(g: &OrderedGraph) -> Vec<[Vertex; 4]> {
    let mut out = Vec::new();
    for a in 0..g.vertex_count() {
        for b in g.neighbors(a) {
            for c in g.neighbors(b).filter(|&c| c != a) {
                for d in g.neighbors(c).filter(|&d| d != a && d != b) {
                    if a < d {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

pub fn contains_path_with_three_edges(g: &OrderedGraph) -> bool {
    !paths_with_three_edges(g).is_empty()
}

/// Every split of the vertex order into two intervals is crossed by an edge.
pub fn is_loosely_connected(g: &OrderedGraph) -> bool {
    g.vertex_count() >= 2 && cut_points(g).is_empty()
}

/// Positions `k` such that no edge joins `0..=k` to `k+1..`.
fn cut_points(g: &OrderedGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut reach = vec![0usize; n];
    for &(u, v) in g.edges() {
        reach[u] = reach[u].max(v);
    }
    let mut cuts = Vec::new();
    let mut far = 0;
    for (k, &r) in reach.iter().enumerate().take(n.saturating_sub(1)) {
        far = far.max(r);
        if far <= k {
            cuts.push(k);
        }
    }
    cuts
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("graph has isolated vertex {0}")]
    HasIsolatedVertex(Vertex),
}

/// Splits `g` into its loosely connected interval blocks, left to right.
pub fn decompose_loosely(g: &OrderedGraph) -> Result<Vec<OrderedGraph>, DecomposeError> {
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.is_isolated(v)) {
        return Err(DecomposeError::HasIsolatedVertex(v));
    }
    let mut blocks = Vec::new();
    let mut start = 0;
    let mut bounds = cut_points(g);
    if g.vertex_count() > 0 {
        bounds.push(g.vertex_count() - 1);
    }
    for end in bounds {
        let vs: Vec<Vertex> = (start..=end).collect();
        blocks.push(g.induced(&vs));
        start = end + 1;
    }
    Ok(blocks)
}

/// Segment sizes `d_1, ..., d_i` of a right caterpillar, with `d_1` the
/// rightmost segment.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DefiningSequence(Vec<usize>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("defining sequence is empty")]
    Empty,
    #[error("segment sizes must be positive")]
    ZeroSegment,
}

impl DefiningSequence {
    pub fn new(d: Vec<usize>) -> Result<Self, SequenceError> {
        if d.is_empty() {
            return Err(SequenceError::Empty);
        }
        if d.contains(&0) {
            return Err(SequenceError::ZeroSegment);
        }
        Ok(DefiningSequence(d))
    }

    /// Number of segments `i`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `d_k` for `1 <= k <= i`.
    pub fn d(&self, k: usize) -> usize {
        self.0[k - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// `i <= 2`, or `d_1 <= d_3` and `d_2 <= ... <= d_i`.
    pub fn is_almost_increasing(&self) -> bool {
        self.len() <= 2 || (self.0[0] <= self.0[2] && self.0[1..].windows(2).all(|w| w[0] <= w[1]))
    }
}

impl fmt::Display for DefiningSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("not a right caterpillar: {0}")]
pub struct NotCaterpillar(pub String);

/// Reads off the defining sequence of a right caterpillar.
pub fn extract_defining_sequence(g: &OrderedGraph) -> Result<DefiningSequence, NotCaterpillar> {
    let n = g.vertex_count();
    let fail = |msg: String| Err(NotCaterpillar(msg));
    if n < 2 || !is_connected(g) {
        return fail("must be connected with at least one edge".into());
    }
    let mut segments = Vec::new();
    let mut c = 0;
    loop {
        let r = g.right_neighbors(c);
        let Some(&last) = r.last() else { break };
        if r.len() != last - c {
            return fail(format!("vertex {} skips a vertex to its right", c + 1));
        }
        if let Some(v) = (c + 1..last).find(|&v| g.degree(v) != 1) {
            return fail(format!(
                "inner leaf {} of the segment at {} has degree {}",
                v + 1,
                c + 1,
                g.degree(v)
            ));
        }
        segments.push(r.len());
        c = last;
    }
    if c != n - 1 || g.edge_count() != segments.iter().sum::<usize>() {
        return fail("segments do not cover the graph".into());
    }
    segments.reverse();
    Ok(DefiningSequence(segments))
}

/// Defining sequence of the mirror image, for left caterpillars.
pub fn extract_left_defining_sequence(g: &OrderedGraph) -> Result<DefiningSequence, NotCaterpillar> {
    extract_defining_sequence(&g.mirror())
}

/// Vertices `a` with no edge `bc` such that `b < a < c`.
pub fn displayed_vertices(g: &OrderedGraph) -> Vec<Vertex> {
    let n = g.vertex_count();
    let mut covered = vec![false; n];
    for &(u, v) in g.edges() {
        for c in covered.iter_mut().take(v).skip(u + 1) {
            *c = true;
        }
    }
    (0..n).filter(|&v| !covered[v]).collect()
}
