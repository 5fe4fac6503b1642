use crate::graph::{OrderedGraph, Vertex};
use crate::structure::DefiningSequence;

use super::combinators::hang;
use super::determiner::{left_determiner, right_determiner};
use super::{invalid, Builder, ConstructError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaConstruction {
    pub graph: OrderedGraph,
    /// The long edge of `Γ''`.
    pub gamma2_edge: (Vertex, Vertex),
    /// The long edges of the `n` copies of `Γ'`, left to right.
    pub gamma1_edges: Vec<(Vertex, Vertex)>,
    /// `|V(Γ')|`, for size bookkeeping.
    pub gamma1_vertices: usize,
}

/// `hang(a, s-1, left) ⊔ right` plus an edge from its leftmost to its
/// rightmost vertex.
fn spanned(a: usize, s: usize, left: &OrderedGraph, right: &OrderedGraph) -> OrderedGraph {
    let mut b = Builder::new();
    b.append(&hang(a, s - 1, left));
    b.append(right);
    b.add_edge(0, b.vertex_count() - 1, None);
    b.graph()
}

/// `D_{>=j+3} ∘ Γ'' ∘ Γ' ∘ ... ∘ Γ' ∘ D_{<=tail}` with `n` copies of `Γ'`.
/// Needs `1 <= j <= |d| - 2` with `d_j > max(d_{j+1}, d_{j+2})`.
pub fn gamma_n(
    s: usize,
    d: &DefiningSequence,
    j: usize,
    n: usize,
    tail: usize,
) -> Result<GammaConstruction, ConstructError> {
    let i = d.len();
    if s < 2 {
        return Err(invalid("star needs at least two edges"));
    }
    if j == 0 || j + 2 > i {
        return Err(invalid(format!("j = {j} outside 1..={}", i.saturating_sub(2))));
    }
    let a = d.d(j + 1).max(d.d(j + 2));
    if d.d(j) <= a {
        return Err(invalid(format!(
            "d_{j} = {} is not larger than d_{} and d_{}",
            d.d(j),
            j + 1,
            j + 2
        )));
    }
    if n == 0 {
        return Err(invalid("n must be positive"));
    }
    if tail > i {
        return Err(invalid(format!("tail index {tail} exceeds {i}")));
    }
    let right = right_determiner(s, d, j + 3)?;
    let g1 = spanned(a - 1, s, &left_determiner(s, d, j)?, &right);
    let g2 = spanned(a - 1, s, &left_determiner(s, d, j + 1)?, &right);

    let mut b = Builder::new();
    b.append(&right);
    let off = b.glue(&g2);
    let gamma2_edge = (off, off + g2.vertex_count() - 1);
    let mut gamma1_edges = Vec::with_capacity(n);
    for _ in 0..n {
        let off = b.glue(&g1);
        gamma1_edges.push((off, off + g1.vertex_count() - 1));
    }
    b.glue(&left_determiner(s, d, tail)?);
    Ok(GammaConstruction {
        graph: b.graph(),
        gamma2_edge,
        gamma1_edges,
        gamma1_vertices: g1.vertex_count(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FnConstruction {
    pub graph: OrderedGraph,
    /// `γ_1 < ... < γ_{n+1}`, the junctions of the `Γ` chain.
    pub gammas: Vec<Vertex>,
    /// The `d_{j-1} - d_j` isolated vertices joined to the chain.
    pub u_vertices: Vec<Vertex>,
    /// Leftmost vertices of the `s - 1` copies of `D_{<=j-2}`.
    pub w_vertices: Vec<Vertex>,
}

/// `F_n`: needs `3 <= j <= |d|` and `d_{j-1} > d_j`.
pub fn f_n(s: usize, d: &DefiningSequence, j: usize, n: usize) -> Result<FnConstruction, ConstructError> {
    let i = d.len();
    if s < 2 {
        return Err(invalid("star needs at least two edges"));
    }
    if j < 3 || j > i {
        return Err(invalid(format!("j = {j} outside 3..={i}")));
    }
    if d.d(j - 1) <= d.d(j) {
        return Err(invalid(format!(
            "d_{} = {} is not larger than d_{j} = {}",
            j - 1,
            d.d(j - 1),
            d.d(j)
        )));
    }
    if n == 0 {
        return Err(invalid("n must be positive"));
    }
    let next = right_determiner(s, d, j + 1)?;
    let whole = right_determiner(s, d, j)?;

    // D: D_{>=j} with a copy of D_{>=j+1} squeezed in before its rightmost
    // vertex, sharing that vertex.
    let mut dg = Builder::new();
    let last = whole.vertex_count() - 1;
    dg.append(&whole.without_vertex(last));
    let copy = dg.append(&next.without_vertex(next.vertex_count() - 1));
    let y = dg.add_vertex();
    for &(u, v) in whole.edges() {
        dg.add_edge(if u == last { y } else { u }, if v == last { y } else { v }, None);
    }
    let next_last = next.vertex_count() - 1;
    for &(u, v) in next.edges() {
        let map = |w: Vertex| if w == next_last { y } else { copy + w };
        dg.add_edge(map(u), map(v), None);
    }
    let dgraph = dg.graph();

    let mut gb = Builder::new();
    gb.append(&OrderedGraph::right_star(d.d(j) - 1));
    gb.append(&next);
    gb.add_edge(0, gb.vertex_count() - 1, None);
    let gamma = gb.graph();
    let mut b = Builder::new();
    b.append(&dgraph);
    let mut gammas = Vec::with_capacity(n + 1);
    for _ in 0..n {
        gammas.push(b.glue(&gamma));
    }
    gammas.push(b.vertex_count() - 1);
    b.glue(&left_determiner(s, d, j - 1)?);
    let u_vertices: Vec<Vertex> = (0..d.d(j - 1) - d.d(j)).map(|_| b.add_vertex()).collect();
    let tail = left_determiner(s, d, j - 2)?;
    let w_vertices: Vec<Vertex> = (0..s - 1).map(|_| b.append(&tail)).collect();
    for &z in u_vertices.iter().chain(&w_vertices) {
        for &g in &gammas[..n] {
            b.add_edge(z, g, None);
        }
    }
    Ok(FnConstruction {
        graph: b.graph(),
        gammas,
        u_vertices,
        w_vertices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(d: &[usize]) -> DefiningSequence {
        DefiningSequence::new(d.to_vec()).unwrap()
    }

    #[test]
    fn gamma_counts_follow_concatenation() {
        let d = seq(&[2, 1, 1]);
        let g1 = gamma_n(2, &d, 1, 1, 1).unwrap();
        let g2 = gamma_n(2, &d, 1, 2, 1).unwrap();
        // D_{>=4} is one vertex; Γ'' has 11 vertices, Γ' has 6, D_{<=1} = S_3.
        assert_eq!(g1.gamma1_vertices, 6);
        assert_eq!(g1.graph.vertex_count(), 1 + 10 + 5 + 3);
        assert_eq!(g1.graph.edge_count(), 10 + 5 + 3);
        assert_eq!(
            g2.graph.vertex_count() - g1.graph.vertex_count(),
            g1.gamma1_vertices - 1
        );
        assert!(g1.graph.has_edge(g1.gamma2_edge.0, g1.gamma2_edge.1));
        assert!(gamma_n(2, &seq(&[1, 1, 1]), 1, 1, 1).is_err());
    }

    #[test]
    fn f_n_fields() {
        let d = seq(&[1, 2, 1]);
        let f = f_n(2, &d, 3, 2).unwrap();
        assert_eq!(f.u_vertices.len(), 1);
        assert_eq!(f.w_vertices.len(), 1);
        assert_eq!(f.gammas.len(), 3);
        for &z in f.u_vertices.iter().chain(&f.w_vertices) {
            for &g in &f.gammas[..2] {
                assert!(f.graph.has_edge(g, z));
            }
        }
        assert!(f_n(2, &seq(&[1, 1, 2]), 3, 1).is_err());
    }
}
