//! Bonnets, tangled paths, and the check that trees avoiding both (with
//! every vertex having at most one left neighbour) are right caterpillars.

use crate::embed::{find_embedding, Embedding};
use crate::graph::{OrderedGraph, Vertex};
use crate::structure::{extract_defining_sequence, is_connected, is_forest, max_left_degree, DefiningSequence};

/// The six ordered shapes of a bonnet: three edges `u1u2, u1u5, u3u4` with
/// `u1 < u2 <= u3 < u4 <= u5` (at most one identification), and mirror images.
pub fn bonnet_patterns() -> Vec<OrderedGraph> {
    let forward = [
        OrderedGraph::from_edges(5, [(0, 1), (0, 4), (2, 3)]),
        OrderedGraph::from_edges(4, [(0, 1), (0, 3), (1, 2)]),
        OrderedGraph::from_edges(4, [(0, 1), (0, 3), (2, 3)]),
    ];
    let mut all: Vec<OrderedGraph> = forward.to_vec();
    all.extend(forward.iter().map(OrderedGraph::mirror));
    all
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BonnetWitness {
    pub pattern: OrderedGraph,
    pub embedding: Embedding,
}

pub fn detect_bonnet(g: &OrderedGraph) -> Option<BonnetWitness> {
    bonnet_patterns()
        .into_iter()
        .find_map(|p| find_embedding(g, &p).map(|embedding| BonnetWitness { pattern: p, embedding }))
}

/// `x < x' < y < y'` for edges `xy` and `x'y'` (either order).
pub fn edges_cross(a: (Vertex, Vertex), b: (Vertex, Vertex)) -> bool {
    let (a, b) = if a.0 <= b.0 { (a, b) } else { (b, a) };
    a.0 < b.0 && b.0 < a.1 && a.1 < b.1
}

/// A path `u_1 .. u_n` is tangled if some inner vertex `u_i` that is leftmost
/// or rightmost on the path splits it into two subpaths with crossing edges.
pub fn is_tangled(path: &[Vertex]) -> bool {
    let n = path.len();
    if n < 4 {
        return false;
    }
    let lo = *path.iter().min().unwrap();
    let hi = *path.iter().max().unwrap();
    let edge = |k: usize| {
        let (a, b) = (path[k], path[k + 1]);
        (a.min(b), a.max(b))
    };
    (1..n - 1)
        .filter(|&i| path[i] == lo || path[i] == hi)
        .any(|i| (0..i).any(|k| (i..n - 1).any(|l| edges_cross(edge(k), edge(l)))))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TangledSearch {
    Found(Vec<Vertex>),
    /// Every path was examined.
    NotFound,
    /// Some path reached the length bound and could have been extended.
    BoundExceeded,
}

/// Searches simple paths with at most `max_vertices` vertices.
pub fn detect_tangled_path(g: &OrderedGraph, max_vertices: usize) -> TangledSearch {
    let n = g.vertex_count();
    let mut truncated = false;
    let mut on_path = vec![false; n];
    for s in 0..n {
        let mut path = vec![s];
        on_path[s] = true;
        if let Some(p) = walk(g, &mut path, &mut on_path, max_vertices, &mut truncated) {
            return TangledSearch::Found(p);
        }
        on_path[s] = false;
    }
    return if truncated {
        TangledSearch::BoundExceeded
    } else {
        TangledSearch::NotFound
    };

    fn walk(
        g: &OrderedGraph,
        path: &mut Vec<Vertex>,
        on_path: &mut [bool],
        bound: usize,
        truncated: &mut bool,
    ) -> Option<Vec<Vertex>> {
        if is_tangled(path) {
            return Some(path.clone());
        }
        let last = *path.last().unwrap();
        let next: Vec<Vertex> = g.neighbors(last).filter(|&w| !on_path[w]).collect();
        if path.len() >= bound {
            *truncated |= !next.is_empty();
            return None;
        }
        for w in next {
            path.push(w);
            on_path[w] = true;
            let found = walk(g, path, on_path, bound, truncated);
            on_path[w] = false;
            path.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// Outcome of checking the caterpillar criterion on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CaterpillarCertificate {
    /// All hypotheses hold and the graph is a right caterpillar.
    Certified(DefiningSequence),
    /// Not a tree, or some vertex has two left neighbours.
    NotApplicable(&'static str),
    Bonnet(BonnetWitness),
    Tangled(Vec<Vertex>),
    /// The tangled-path search hit its bound.
    Inconclusive,
    /// Hypotheses hold yet the graph is not a right caterpillar.
    Counterexample,
}

pub fn is_right_caterpillar_certified(g: &OrderedGraph) -> CaterpillarCertificate {
    use CaterpillarCertificate::*;
    if !is_connected(g) || !is_forest(g) || g.edge_count() == 0 {
        return NotApplicable("not a tree with an edge");
    }
    if max_left_degree(g) > 1 {
        return NotApplicable("a vertex has two left neighbours");
    }
    if let Some(w) = detect_bonnet(g) {
        return Bonnet(w);
    }
    match detect_tangled_path(g, g.vertex_count()) {
        TangledSearch::Found(p) => Tangled(p),
        TangledSearch::BoundExceeded => Inconclusive,
        TangledSearch::NotFound => match extract_defining_sequence(g) {
            Ok(d) => Certified(d),
            Err(_) => Counterexample,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> OrderedGraph {
        OrderedGraph::parse_inline(s).unwrap()
    }

    #[test]
    fn bonnet_shapes() {
        let w = detect_bonnet(&g("n=5;e=1-2,1-5,3-4")).unwrap();
        assert_eq!(w.embedding.0, vec![0, 1, 2, 3, 4]);
        assert!(detect_bonnet(&g("n=4;e=1-2,1-4,2-3")).is_some());
        assert!(detect_bonnet(&OrderedGraph::monotone_path(5)).is_none());
        assert!(detect_bonnet(&OrderedGraph::right_star(4)).is_none());
    }

    #[test]
    fn crossing_and_tangling() {
        assert!(edges_cross((0, 2), (1, 3)));
        assert!(!edges_cross((0, 3), (1, 2)));
        assert!(!edges_cross((0, 1), (1, 2)));
        // Inner vertex 0 is leftmost; edge 1-3 before it crosses 0-2 after it.
        assert!(is_tangled(&[1, 3, 0, 2]));
        assert!(!is_tangled(&[0, 1, 2, 3]));
        assert_eq!(
            detect_tangled_path(&OrderedGraph::monotone_path(6), 6),
            TangledSearch::NotFound
        );
        assert_eq!(
            detect_tangled_path(&g("n=4;e=1-3,2-4,1-2"), 4),
            TangledSearch::Found(vec![2, 0, 1, 3])
        );
    }

    #[test]
    fn bound_is_reported() {
        assert_eq!(
            detect_tangled_path(&OrderedGraph::monotone_path(6), 3),
            TangledSearch::BoundExceeded
        );
    }

    #[test]
    fn caterpillar_certificates() {
        let cat = g("n=6;e=1-2,1-3,3-4,3-5,3-6");
        assert!(matches!(
            is_right_caterpillar_certified(&cat),
            CaterpillarCertificate::Certified(_)
        ));
        assert!(matches!(
            is_right_caterpillar_certified(&g("n=5;e=1-2,1-5,3-4")),
            CaterpillarCertificate::NotApplicable(_)
        ));
        assert!(matches!(
            is_right_caterpillar_certified(&g("n=4;e=1-2,1-4,2-3")),
            CaterpillarCertificate::Bonnet(_)
        ));
    }
}
