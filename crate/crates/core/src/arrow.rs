//! The arrow relation `F -> (H, H')`, minimality, enumeration of minimal
//! Ramsey graphs, and small ordered Ramsey numbers.

use std::collections::HashMap;

use thiserror::Error;

use crate::coloring::{Color, EdgeColoring};
use crate::embed::{contains, copy_edge_sets};
use crate::graph::OrderedGraph;
use crate::search::{solve, BudgetExceeded, SearchOptions, TwoColorProblem};

pub use crate::search::{BranchOrder, SearchOptions as ArrowOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrowVerdict {
    Arrows,
    NotArrows,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchStats {
    pub nodes: u64,
    pub red_copies: usize,
    pub blue_copies: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowCertificate {
    pub verdict: ArrowVerdict,
    /// For `NotArrows`: a coloring with no red `H` and no blue `H'`.
    pub witness: Option<EdgeColoring>,
    pub stats: SearchStats,
}

impl ArrowCertificate {
    pub fn arrows(&self) -> bool {
        self.verdict == ArrowVerdict::Arrows
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrowError {
    #[error("pattern graphs must have at least one edge")]
    EdgelessPattern,
    #[error(transparent)]
    BudgetExceeded(#[from] BudgetExceeded),
}

/// Decides `f -> (h, h2)`: every red/blue coloring of `f` has a red `h` or a
/// blue `h2`.
pub fn arrows(
    f: &OrderedGraph,
    h: &OrderedGraph,
    h2: &OrderedGraph,
    opts: &SearchOptions,
) -> Result<ArrowCertificate, ArrowError> {
    if h.edge_count() == 0 || h2.edge_count() == 0 {
        return Err(ArrowError::EdgelessPattern);
    }
    let problem = TwoColorProblem {
        edge_count: f.edge_count(),
        no_all_red: copy_edge_sets(f, h),
        no_all_blue: copy_edge_sets(f, h2),
    };
    let mut stats = SearchStats {
        nodes: 0,
        red_copies: problem.no_all_red.len(),
        blue_copies: problem.no_all_blue.len(),
    };
    let outcome = solve(&problem, opts)?;
    stats.nodes = outcome.nodes;
    Ok(match outcome.solution {
        Some(colors) => {
            let witness = EdgeColoring::new(f.clone(), colors).expect("one color per edge");
            debug_assert!(witness.check_avoids(h, h2).is_ok());
            ArrowCertificate {
                verdict: ArrowVerdict::NotArrows,
                witness: Some(witness),
                stats,
            }
        }
        None => ArrowCertificate {
            verdict: ArrowVerdict::Arrows,
            witness: None,
            stats,
        },
    })
}

/// Shorthand returning only the verdict.
pub fn does_arrow(
    f: &OrderedGraph,
    h: &OrderedGraph,
    h2: &OrderedGraph,
    opts: &SearchOptions,
) -> Result<bool, ArrowError> {
    Ok(arrows(f, h, h2, opts)?.arrows())
}

/// Why a graph fails to be a minimal Ramsey graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Minimality {
    Minimal,
    DoesNotArrow,
    /// Deleting this edge keeps the arrow property.
    RemovableEdge(usize, usize),
    /// Deleting this isolated vertex keeps the arrow property.
    RemovableVertex(usize),
}

pub fn minimality(
    f: &OrderedGraph,
    h: &OrderedGraph,
    h2: &OrderedGraph,
    opts: &SearchOptions,
) -> Result<Minimality, ArrowError> {
    minimality_with(f, &mut |g| does_arrow(g, h, h2, opts))
}

fn minimality_with(
    f: &OrderedGraph,
    decide: &mut dyn FnMut(&OrderedGraph) -> Result<bool, ArrowError>,
) -> Result<Minimality, ArrowError> {
    if !decide(f)? {
        return Ok(Minimality::DoesNotArrow);
    }
    for (i, &(u, v)) in f.edges().iter().enumerate() {
        if decide(&f.without_edge(i))? {
            return Ok(Minimality::RemovableEdge(u, v));
        }
    }
    for v in (0..f.vertex_count()).filter(|&v| f.is_isolated(v)) {
        if decide(&f.without_vertex(v))? {
            return Ok(Minimality::RemovableVertex(v));
        }
    }
    Ok(Minimality::Minimal)
}

/// `f` arrows and no single edge or isolated vertex can be removed.
pub fn is_minimal_ramsey(
    f: &OrderedGraph,
    h: &OrderedGraph,
    h2: &OrderedGraph,
    opts: &SearchOptions,
) -> Result<bool, ArrowError> {
    Ok(minimality(f, h, h2, opts)? == Minimality::Minimal)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalEnumeration {
    pub graphs: Vec<OrderedGraph>,
    /// False if some candidate could not be decided within the budget.
    pub complete: bool,
    pub undecided: usize,
}

/// All minimal Ramsey graphs of `(h, h2)` with at most `max_vertices`
/// vertices (and at most `max_edges` edges, if given), by exhaustive search
/// over edge subsets of complete graphs.
pub fn enumerate_minimal(
    h: &OrderedGraph,
    h2: &OrderedGraph,
    max_vertices: usize,
    max_edges: Option<usize>,
    opts: &SearchOptions,
) -> Result<MinimalEnumeration, ArrowError> {
    if h.edge_count() == 0 || h2.edge_count() == 0 {
        return Err(ArrowError::EdgelessPattern);
    }
    assert!(max_vertices <= 8, "exhaustive enumeration is limited to 8 vertices");
    let mut memo: HashMap<OrderedGraph, bool> = HashMap::new();
    let mut decide = |g: &OrderedGraph| -> Result<bool, ArrowError> {
        if let Some(&b) = memo.get(g) {
            return Ok(b);
        }
        let b = contains(g, h) && contains(g, h2) && does_arrow(g, h, h2, opts)?;
        memo.insert(g.clone(), b);
        Ok(b)
    };
    let mut graphs = Vec::new();
    let mut undecided = 0;
    for n in 1..=max_vertices {
        let all = OrderedGraph::complete(n);
        let m = all.edge_count();
        for mask in 0u64..(1u64 << m) {
            if max_edges.is_some_and(|k| mask.count_ones() as usize > k) {
                continue;
            }
            let f = all.spanning_subgraph(|i| mask >> i & 1 == 1);
            match minimality_with(&f, &mut decide) {
                Ok(Minimality::Minimal) => graphs.push(f),
                Ok(_) => {}
                Err(ArrowError::BudgetExceeded(_)) => undecided += 1,
                Err(e) => return Err(e),
            }
        }
    }
    Ok(MinimalEnumeration {
        graphs,
        complete: undecided == 0,
        undecided,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RamseyNumberError {
    #[error("no complete graph on at most {0} vertices arrows the pair")]
    CapExceeded(usize),
    #[error(transparent)]
    Arrow(#[from] ArrowError),
}

/// The least `r <= cap` with `K_r -> (h, h2)`.
pub fn ordered_ramsey_number(
    h: &OrderedGraph,
    h2: &OrderedGraph,
    cap: usize,
    opts: &SearchOptions,
) -> Result<usize, RamseyNumberError> {
    let start = h.vertex_count().max(h2.vertex_count());
    for r in start..=cap {
        if does_arrow(&OrderedGraph::complete(r), h, h2, opts)? {
            return Ok(r);
        }
    }
    Err(RamseyNumberError::CapExceeded(cap))
}

/// Convenience: witness color counts.
pub fn color_counts(c: &EdgeColoring) -> (usize, usize) {
    let red = c.colors().iter().filter(|&&x| x == Color::Red).count();
    (red, c.colors().len() - red)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> OrderedGraph {
        OrderedGraph::parse_inline(s).unwrap()
    }

    #[test]
    fn path_with_chord_arrows_monotone_p3() {
        let f = g("n=5;e=1-2,2-3,3-4,4-5,2-4");
        let p3 = OrderedGraph::monotone_path(3);
        assert!(arrows(&f, &p3, &p3, &Default::default()).unwrap().arrows());
        let c = arrows(&OrderedGraph::monotone_path(5), &p3, &p3, &Default::default()).unwrap();
        assert_eq!(c.verdict, ArrowVerdict::NotArrows);
        assert!(c.witness.unwrap().check_avoids(&p3, &p3).is_ok());
    }

    #[test]
    fn single_edges() {
        let k2 = OrderedGraph::complete(2);
        assert!(is_minimal_ramsey(&k2, &k2, &k2, &Default::default()).unwrap());
        assert_eq!(
            arrows(&k2, &OrderedGraph::empty(2), &k2, &Default::default()),
            Err(ArrowError::EdgelessPattern)
        );
    }

    #[test]
    fn minimal_graphs_of_two_right_stars() {
        let s2 = OrderedGraph::right_star(2);
        let e = enumerate_minimal(&s2, &s2, 5, None, &Default::default()).unwrap();
        assert!(e.complete);
        assert_eq!(e.graphs, vec![OrderedGraph::right_star(3)]);
    }

    #[test]
    fn ramsey_numbers() {
        let k2 = OrderedGraph::complete(2);
        let p3 = OrderedGraph::monotone_path(3);
        assert_eq!(ordered_ramsey_number(&k2, &p3, 7, &Default::default()), Ok(3));
        assert_eq!(ordered_ramsey_number(&p3, &p3, 7, &Default::default()), Ok(5));
        assert_eq!(
            ordered_ramsey_number(&p3, &p3, 4, &Default::default()),
            Err(RamseyNumberError::CapExceeded(4))
        );
    }
}
