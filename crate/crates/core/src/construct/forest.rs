use crate::arrow::ordered_ramsey_number;
use crate::classify::{forest_ramsey_case, ForestRamseyCase};
use crate::graph::{OrderedGraph, Vertex};
use crate::search::SearchOptions;
use crate::structure::{components, is_right_star};

use super::{Builder, ConstructError};

#[derive(Debug, Clone)]
pub struct ForestBuildOptions {
    pub search: SearchOptions,
    /// Largest complete graph tried when the matching case needs an ordered
    /// Ramsey number.
    pub ramsey_cap: usize,
}

impl Default for ForestBuildOptions {
    fn default() -> Self {
        ForestBuildOptions {
            search: SearchOptions::default(),
            ramsey_cap: 24,
        }
    }
}

/// An ordered forest arrowing `(h, h2)`, when the pair admits one.
pub fn build_forest_ramsey(
    h: &OrderedGraph,
    h2: &OrderedGraph,
    opts: &ForestBuildOptions,
) -> Result<(OrderedGraph, ForestRamseyCase), ConstructError> {
    if h.edge_count() == 0 || h2.edge_count() == 0 {
        return Err(ConstructError::NotApplicable("edgeless input".into()));
    }
    let (case, swapped) =
        forest_ramsey_case(h, h2).ok_or_else(|| ConstructError::NotApplicable("no forest arrows this pair".into()))?;
    // Arrowing is symmetric in the two colors.
    let (a, b) = if swapped { (h2, h) } else { (h, h2) };
    let f = padded(a, b, |a, b| match case {
        ForestRamseyCase::PartialMatching => matching_case(a, b, opts),
        ForestRamseyCase::RightStarsVsOneLeft => Ok(right_stars_case(a, b)),
        ForestRamseyCase::LeftStarsVsOneRight => Ok(left_stars_case(a, b)),
        ForestRamseyCase::StarsVsMonotonePaths => Ok(mixed_stars_case(a, b)),
    })?;
    Ok((f, case))
}

/// The monotone path on five vertices plus the chord between the second and
/// fourth vertex.
pub fn build_pseudoforest_ramsey_monotone_p3() -> OrderedGraph {
    OrderedGraph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)])
}

/// Builds for the pair with isolated vertices removed, then pads: `t`
/// isolated vertices at both ends and between consecutive vertices.
fn padded<E>(
    a: &OrderedGraph,
    b: &OrderedGraph,
    inner: impl FnOnce(&OrderedGraph, &OrderedGraph) -> Result<OrderedGraph, E>,
) -> Result<OrderedGraph, E> {
    let t = a.isolated_count() + b.isolated_count();
    let f = inner(&a.without_isolated(), &b.without_isolated())?;
    Ok(pad(&f, t))
}

fn pad(f: &OrderedGraph, t: usize) -> OrderedGraph {
    if t == 0 {
        return f.clone();
    }
    let pos = |v: Vertex| t + v * (t + 1);
    let n = f.vertex_count() + t * (f.vertex_count() + 1);
    OrderedGraph::from_parts(n, f.edges().iter().map(|&(u, v)| (pos(u), pos(v))).collect())
}

fn infallible(
    a: &OrderedGraph,
    b: &OrderedGraph,
    inner: impl FnOnce(&OrderedGraph, &OrderedGraph) -> OrderedGraph,
) -> OrderedGraph {
    padded::<std::convert::Infallible>(a, b, |a, b| Ok(inner(a, b))).unwrap_or_else(|e| match e {})
}

/// `a` a perfect matching: one vertex block per vertex of a complete graph
/// `K_r` arrowing the pair, and one copy of `b` per `|V(b)|`-subset of `K_r`.
fn matching_case(
    a: &OrderedGraph,
    b: &OrderedGraph,
    opts: &ForestBuildOptions,
) -> Result<OrderedGraph, ConstructError> {
    let r = ordered_ramsey_number(a, b, opts.ramsey_cap, &opts.search)?;
    let k = b.vertex_count();
    let subsets = k_subsets(r, k);
    let block = subsets.iter().filter(|s| s[0] == 0).count();
    let mut used = vec![0usize; r];
    let mut edges = Vec::new();
    for s in &subsets {
        let slot: Vec<Vertex> = s
            .iter()
            .map(|&i| {
                used[i] += 1;
                i * block + used[i] - 1
            })
            .collect();
        edges.extend(b.edges().iter().map(|&(p, q)| (slot[p], slot[q])));
    }
    Ok(OrderedGraph::from_parts(r * block, edges))
}

fn k_subsets(r: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, r: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=(r - (k - cur.len())) {
            cur.push(i);
            go(i + 1, r, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, r, k, &mut Vec::new(), &mut out);
    out
}

/// `a` a union of right stars, every vertex of `b` with at most one left
/// neighbour. Induction on `b` minus its rightmost vertex.
fn right_stars_case(a: &OrderedGraph, b: &OrderedGraph) -> OrderedGraph {
    if b.edge_count() <= 1 {
        return a.clone();
    }
    let shorter = b.without_vertex(b.vertex_count() - 1);
    let inner = infallible(a, &shorter, right_stars_case);
    let m = inner.vertex_count();
    let mut bld = Builder::new();
    for v in 0..a.vertex_count() {
        if a.right_neighbors(v).is_empty() {
            for _ in 0..m {
                bld.add_vertex();
            }
        } else {
            bld.append(&inner);
        }
    }
    for &(u, v) in a.edges() {
        for t in 0..m {
            bld.add_edge(u * m + t, v * m + t, None);
        }
    }
    bld.graph()
}

fn left_stars_case(a: &OrderedGraph, b: &OrderedGraph) -> OrderedGraph {
    right_stars_case(&a.mirror(), &b.mirror()).mirror()
}

/// `a` a union of left and right stars, `b` a union of monotone paths.
fn mixed_stars_case(a: &OrderedGraph, b: &OrderedGraph) -> OrderedGraph {
    if b.edge_count() <= 1 {
        return a.clone();
    }
    let comps: Vec<Vec<Vertex>> = components(a).into_iter().filter(|c| c.len() > 1).collect();
    if comps.len() == 1 {
        return if is_right_star(a) {
            right_stars_case(a, b)
        } else {
            left_stars_case(a, b)
        };
    }
    let Some(star) = comps.iter().find(|c| is_right_star(&a.induced(c))) else {
        return mixed_stars_case(&a.mirror(), &b.mirror()).mirror();
    };
    let star_edges = star.len() - 1;
    let rest: Vec<Vertex> = (0..a.vertex_count()).filter(|v| !star.contains(v)).collect();
    let big_a = mixed_stars_case(&a.induced(&rest), b);
    let shorter = b.without_vertex(b.vertex_count() - 1);
    let big_b = infallible(a, &shorter, mixed_stars_case);

    // Layout: B_1 L_1 a_1 B_2 L_2 a_2 ... B_{n+1} L_{n+1}, where the leaf
    // block L_j holds the star leaves of every vertex of B_1..B_j.
    let n = big_a.vertex_count();
    let nb = big_b.vertex_count();
    let mut bld = Builder::new();
    let mut copies = Vec::with_capacity(n + 1);
    let mut anchors = Vec::with_capacity(n);
    for j in 0..=n {
        copies.push(bld.append(&big_b));
        for &off in &copies {
            for u in off..off + nb {
                for _ in 0..star_edges {
                    let leaf = bld.add_vertex();
                    bld.add_edge(u, leaf, None);
                }
            }
        }
        if j < n {
            anchors.push(bld.add_vertex());
        }
    }
    for &(u, v) in big_a.edges() {
        bld.add_edge(anchors[u], anchors[v], None);
    }
    bld.graph()
}
