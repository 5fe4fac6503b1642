//! Order-preserving embeddings of a pattern into a host graph.

use std::ops::ControlFlow;

use crate::graph::{OrderedGraph, Vertex};

/// Image of each pattern vertex, strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Embedding(pub Vec<Vertex>);

impl Embedding {
    /// Host edge indices covered by the image of the pattern's edges.
    pub fn edge_indices(&self, host: &OrderedGraph, pattern: &OrderedGraph) -> Vec<usize> {
        pattern
            .edges()
            .iter()
            .map(|&(a, b)| {
                host.edge_index(self.0[a], self.0[b])
                    .expect("embedding maps edges to edges")
            })
            .collect()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }
}

/// Calls `visit` on every strictly increasing map `pattern -> host` that sends
/// edges to edges. Stops early when `visit` breaks.
pub fn for_each_embedding<F>(host: &OrderedGraph, pattern: &OrderedGraph, mut visit: F)
where
    F: FnMut(&[Vertex]) -> ControlFlow<()>,
{
    let k = pattern.vertex_count();
    let n = host.vertex_count();
    if k > n {
        return;
    }
    let mut map = vec![0usize; k];
    let _ = extend(host, pattern, 0, &mut map, &mut visit);

    fn extend<F>(
        host: &OrderedGraph,
        pattern: &OrderedGraph,
        i: usize,
        map: &mut [Vertex],
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[Vertex]) -> ControlFlow<()>,
    {
        let k = pattern.vertex_count();
        if i == k {
            return visit(map);
        }
        let lo = if i == 0 { 0 } else { map[i - 1] + 1 };
        let hi = host.vertex_count() - (k - i);
        let lefts = pattern.left_neighbors(i);
        let need_left = lefts.len();
        let need_right = pattern.right_neighbors(i).len();
        let fits = |x: Vertex, map: &[Vertex]| {
            host.left_neighbors(x).len() >= need_left
                && host.right_neighbors(x).len() >= need_right
                && lefts.iter().all(|&p| host.has_edge(map[p], x))
        };
        if let Some(&first) = lefts.first() {
            let cands = host.right_neighbors(map[first]);
            let start = cands.partition_point(|&x| x < lo);
            for &x in &cands[start..] {
                if x > hi {
                    break;
                }
                if fits(x, map) {
                    map[i] = x;
                    extend(host, pattern, i + 1, map, visit)?;
                }
            }
        } else {
            for x in lo..=hi {
                if fits(x, map) {
                    map[i] = x;
                    extend(host, pattern, i + 1, map, visit)?;
                }
            }
        }
        ControlFlow::Continue(())
    }
}

/// All embeddings, or the first `limit` of them in lexicographic order.
pub fn find_embeddings(host: &OrderedGraph, pattern: &OrderedGraph, limit: Option<usize>) -> Vec<Embedding> {
    let mut out = Vec::new();
    if limit == Some(0) {
        return out;
    }
    for_each_embedding(host, pattern, |m| {
        out.push(Embedding(m.to_vec()));
        if limit.is_some_and(|l| out.len() >= l) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    out
}

pub fn find_embedding(host: &OrderedGraph, pattern: &OrderedGraph) -> Option<Embedding> {
    find_embeddings(host, pattern, Some(1)).pop()
}

pub fn contains(host: &OrderedGraph, pattern: &OrderedGraph) -> bool {
    find_embedding(host, pattern).is_some()
}

/// Distinct host edge sets hit by copies of `pattern`, each sorted.
pub fn copy_edge_sets(host: &OrderedGraph, pattern: &OrderedGraph) -> Vec<Vec<usize>> {
    copy_edge_sets_where(host, pattern, |_| true)
}

/// Like [`copy_edge_sets`], restricted to embeddings accepted by `keep`.
pub fn copy_edge_sets_where(
    host: &OrderedGraph,
    pattern: &OrderedGraph,
    mut keep: impl FnMut(&[Vertex]) -> bool,
) -> Vec<Vec<usize>> {
    let mut sets = Vec::new();
    for_each_embedding(host, pattern, |m| {
        if keep(m) {
            let mut s: Vec<usize> = pattern
                .edges()
                .iter()
                .map(|&(a, b)| host.edge_index(m[a], m[b]).expect("edge"))
                .collect();
            s.sort_unstable();
            sets.push(s);
        }
        ControlFlow::Continue(())
    });
    sets.sort();
    sets.dedup();
    sets
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> OrderedGraph {
        OrderedGraph::parse_inline(s).unwrap()
    }

    #[test]
    fn monotone_path_in_its_square() {
        let host = g("n=5;e=1-2,2-3,3-4,4-5,2-4");
        let p3 = OrderedGraph::monotone_path(3);
        let found = find_embeddings(&host, &p3, None);
        let expect: Vec<Vec<usize>> = vec![
            vec![0, 1, 2],
            vec![0, 1, 3],
            vec![1, 2, 3],
            vec![1, 3, 4],
            vec![2, 3, 4],
        ];
        assert_eq!(found.into_iter().map(|e| e.0).collect::<Vec<_>>(), expect);
    }

    #[test]
    fn isolated_pattern_vertices_need_room() {
        let host = g("n=3;e=1-2");
        assert!(contains(&host, &g("n=3;e=1-2")));
        assert!(!contains(&host, &g("n=3;e=2-3")));
        assert!(!contains(&host, &g("n=4;e=1-2")));
        assert_eq!(find_embeddings(&host, &OrderedGraph::empty(2), None).len(), 3);
    }

    #[test]
    fn order_matters() {
        assert!(!contains(&OrderedGraph::left_star(2), &OrderedGraph::right_star(2)));
        assert!(contains(&OrderedGraph::complete(3), &OrderedGraph::right_star(2)));
    }
}
