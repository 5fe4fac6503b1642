//! Brute-force oracles written without the library's search or embedding
//! code, plus small generators shared by the integration tests.
#![allow(dead_code)]

use ordered_ramsey::{Color, EdgeColoring, OrderedGraph};
use rand::Rng;

/// Adjacency matrix over `n` vertices.
pub struct Matrix {
    n: usize,
    adj: Vec<bool>,
}

impl Matrix {
    pub fn new(n: usize) -> Self {
        Matrix {
            n,
            adj: vec![false; n * n],
        }
    }

    pub fn from_graph(g: &OrderedGraph) -> Self {
        let mut m = Matrix::new(g.vertex_count());
        for &(u, v) in g.edges() {
            m.set(u, v);
        }
        m
    }

    pub fn set(&mut self, u: usize, v: usize) {
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
    }

    pub fn get(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }
}

/// Calls `f` on every increasing `k`-tuple of `0..n` until it returns true.
pub fn any_combination(n: usize, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for x in start..n {
            if n - x < k - cur.len() {
                break;
            }
            cur.push(x);
            if go(n, k, x + 1, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    go(n, k, 0, &mut Vec::with_capacity(k), f)
}

/// Whether `pattern` is an ordered subgraph of the host matrix: tries every
/// increasing vertex tuple.
pub fn naive_contains(host: &Matrix, pattern: &OrderedGraph) -> bool {
    let k = pattern.vertex_count();
    if k > host.n {
        return false;
    }
    any_combination(host.n, k, &mut |t| {
        pattern.edges().iter().all(|&(a, b)| host.get(t[a], t[b]))
    })
}

fn class_matrix(f: &OrderedGraph, colors: &[Color], color: Color) -> Matrix {
    let mut m = Matrix::new(f.vertex_count());
    for (i, &(u, v)) in f.edges().iter().enumerate() {
        if colors[i] == color {
            m.set(u, v);
        }
    }
    m
}

/// No red `h` and no blue `h2`.
pub fn naive_avoids(f: &OrderedGraph, colors: &[Color], h: &OrderedGraph, h2: &OrderedGraph) -> bool {
    !naive_contains(&class_matrix(f, colors, Color::Red), h)
        && !naive_contains(&class_matrix(f, colors, Color::Blue), h2)
}

pub fn coloring_avoids(c: &EdgeColoring, h: &OrderedGraph, h2: &OrderedGraph) -> bool {
    naive_avoids(c.host(), c.colors(), h, h2)
}

/// Tries all `2^|E|` colorings.
pub fn naive_arrows(f: &OrderedGraph, h: &OrderedGraph, h2: &OrderedGraph) -> bool {
    let m = f.edge_count();
    assert!(m <= 20);
    (0u32..1 << m).all(|mask| {
        let colors: Vec<Color> = (0..m)
            .map(|i| if mask >> i & 1 == 1 { Color::Red } else { Color::Blue })
            .collect();
        !naive_avoids(f, &colors, h, h2)
    })
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn better(a: (u64, u64), b: Option<(u64, u64)>) -> bool {
    b.is_none_or(|b| a.0 * b.1 > b.0 * a.1)
}

fn reduce((p, q): (u64, u64)) -> (u64, u64) {
    let g = gcd(p, q).max(1);
    (p / g, q / g)
}

fn induced_edges(g: &OrderedGraph, mask: u32) -> u64 {
    g.edges()
        .iter()
        .filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
        .count() as u64
}

/// `max |E'|/|V'|` over nonempty vertex subsets, reduced.
pub fn naive_m(g: &OrderedGraph) -> (u64, u64) {
    let mut best = None;
    for mask in 1u32..1 << g.vertex_count() {
        let r = (induced_edges(g, mask), mask.count_ones() as u64);
        if better(r, best) {
            best = Some(r);
        }
    }
    reduce(best.unwrap())
}

/// `max (|E'|-1)/(|V'|-2)` over subsets with three vertices and an edge.
pub fn naive_m2(g: &OrderedGraph) -> (u64, u64) {
    let mut best = None;
    for mask in 1u32..1 << g.vertex_count() {
        let (e, v) = (induced_edges(g, mask), mask.count_ones() as u64);
        if v >= 3 && e >= 1 && better((e - 1, v - 2), best) {
            best = Some((e - 1, v - 2));
        }
    }
    reduce(best.unwrap())
}

/// Every ordered graph on exactly `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = OrderedGraph> {
    let k = OrderedGraph::complete(n);
    (0u64..1 << k.edge_count()).map(move |mask| k.spanning_subgraph(|i| mask >> i & 1 == 1))
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> OrderedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    OrderedGraph::from_edges(n, edges)
}

/// A uniformly labelled random tree: each vertex after the first, in a random
/// order, attaches to an earlier one.
pub fn random_tree(rng: &mut impl Rng, n: usize) -> OrderedGraph {
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let edges = (1..n).map(|i| {
        let (a, b) = (order[i], order[rng.gen_range(0..i)]);
        (a.min(b), a.max(b))
    });
    OrderedGraph::from_edges(n, edges.collect::<Vec<_>>())
}

/// Components of the graph spanned by `edges` on `n` vertices.
pub fn naive_components(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut label: Vec<usize> = (0..n).collect();
    loop {
        let mut changed = false;
        for &(u, v) in edges {
            let m = label[u].min(label[v]);
            if label[u] != m || label[v] != m {
                label[u] = m;
                label[v] = m;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    for root in 0..n {
        let c: Vec<usize> = (0..n).filter(|&v| label[v] == root).collect();
        if !c.is_empty() {
            out.push(c);
        }
    }
    out
}

/// Proper two-coloring of a forest by walking components.
pub fn forest_bipartition(g: &OrderedGraph) -> Vec<bool> {
    let n = g.vertex_count();
    let mut side = vec![None; n];
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(true);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for w in g.neighbors(u).collect::<Vec<_>>() {
                if side[w].is_none() {
                    side[w] = Some(!side[u].unwrap());
                    stack.push(w);
                }
            }
        }
    }
    side.into_iter().map(Option::unwrap).collect()
}

/// Edges of one color as `(u, v)` pairs.
pub fn class_edges(c: &EdgeColoring, color: Color) -> Vec<(usize, usize)> {
    c.host()
        .edges()
        .iter()
        .zip(c.colors())
        .filter(|(_, &k)| k == color)
        .map(|(&e, _)| e)
        .collect()
}

/// Every component of the edge set is a star: some vertex meets all of its
/// edges.
pub fn all_components_stars(n: usize, edges: &[(usize, usize)]) -> bool {
    naive_components(n, edges).iter().all(|comp| {
        let es: Vec<_> = edges.iter().filter(|&&(u, _)| comp.contains(&u)).collect();
        es.is_empty() || comp.iter().any(|&c| es.iter().all(|&&(u, v)| u == c || v == c))
    })
}

/// Some `a < b < c` with `ab` and `bc` both in the edge set.
pub fn has_monotone_p3(edges: &[(usize, usize)]) -> bool {
    edges
        .iter()
        .any(|&(a, b)| edges.iter().any(|&(x, c)| x == b && c > b && a < b))
}

/// Ordered graphs spanning every shape used by the refuter pairs.
pub fn pattern(name: &str) -> OrderedGraph {
    OrderedGraph::parse_inline(match name {
        "K2" => "n=2;e=1-2",
        "K3" => "n=3;e=1-2,1-3,2-3",
        "P3" => "n=3;e=1-2,2-3",
        "P4" => "n=4;e=1-2,2-3,3-4",
        "zigzag" => "n=4;e=1-3,2-3,2-4",
        "S2" => "n=3;e=1-2,1-3",
        "L2" => "n=3;e=1-3,2-3",
        "mixed3" => "n=4;e=1-2,2-3,2-4",
        "M2" => "n=4;e=1-2,3-4",
        other => panic!("unknown pattern {other}"),
    })
    .unwrap()
}

/// Ordered graphs on `1..=max_n` vertices with arbitrary edge sets.
pub fn arb_graph(max_n: usize) -> impl proptest::strategy::Strategy<Value = OrderedGraph> {
    use proptest::prelude::*;
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |bits| OrderedGraph::complete(n).spanning_subgraph(|i| bits[i]))
    })
}

/// Every labelled tree on `n` vertices, from Pruefer sequences.
pub fn all_trees(n: usize) -> Vec<OrderedGraph> {
    if n <= 2 {
        return vec![OrderedGraph::complete(n)];
    }
    let mut out = Vec::new();
    let total = n.pow(n as u32 - 2);
    for code in 0..total {
        let mut seq = Vec::with_capacity(n - 2);
        let mut c = code;
        for _ in 0..n - 2 {
            seq.push(c % n);
            c /= n;
        }
        let mut degree = vec![1usize; n];
        for &x in &seq {
            degree[x] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        for &x in &seq {
            let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
            edges.push((leaf.min(x), leaf.max(x)));
            degree[leaf] -= 1;
            degree[x] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
        out.push(OrderedGraph::from_edges(n, edges));
    }
    out
}
