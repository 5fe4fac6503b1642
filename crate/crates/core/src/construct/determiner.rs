use crate::coloring::{Color, EdgeColoring};
use crate::embed::{copy_edge_sets, copy_edge_sets_where, find_embeddings, Embedding};
use crate::graph::{OrderedGraph, Vertex};
use crate::search::{for_each_solution, solve, SearchOptions, TwoColorProblem};
use crate::structure::DefiningSequence;

use super::combinators::{caterpillar_prefix, caterpillar_segments, hang_colored};
use super::{invalid, Builder, ConstructError};

/// Which determiner: left for `H_i(d)` anchored at the leftmost vertex, or
/// right for `H_i^j(d)` anchored at the rightmost vertex, `i = |d|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeterminerSide {
    Left { i: usize },
    Right { j: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodColoring {
    pub coloring: EdgeColoring,
    pub distinguished_copy: Embedding,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeterminerReport {
    /// Every coloring without a red star has the anchored blue copy.
    pub forcing: bool,
    /// Some coloring is good.
    pub has_good_coloring: bool,
    pub nodes: u64,
}

impl DeterminerReport {
    pub fn holds(&self) -> bool {
        self.forcing && self.has_good_coloring
    }
}

fn check_params(s: usize, d: &DefiningSequence, side: DeterminerSide) -> Result<(), ConstructError> {
    if s == 0 {
        return Err(invalid("star must have an edge"));
    }
    match side {
        DeterminerSide::Left { i } if i > d.len() => Err(invalid(format!("left index {i} exceeds |d| = {}", d.len()))),
        DeterminerSide::Right { j } if j < 2 || j > d.len() + 1 => {
            Err(invalid(format!("right index {j} outside 2..={}", d.len() + 1)))
        }
        _ => Ok(()),
    }
}

/// Left determiner for `(S_s, H_i(d))` with its good coloring.
fn left_colored(s: usize, d: &DefiningSequence, i: usize) -> (OrderedGraph, Vec<Color>) {
    if i == 0 {
        return (OrderedGraph::empty(1), Vec::new());
    }
    let (inner, colors) = left_colored(s, d, i - 1);
    let spoke = |t: Option<usize>| Some(if t.unwrap_or(0) == 0 { Color::Blue } else { Color::Red });
    hang_colored(d.d(i) - 1, s, &inner, Some(&colors), spoke).colored_graph()
}

fn right_colored(s: usize, d: &DefiningSequence, j: usize) -> (OrderedGraph, Vec<Color>) {
    if j == d.len() + 1 {
        return (OrderedGraph::empty(1), Vec::new());
    }
    let (right, right_colors) = right_colored(s, d, j + 1);
    let (left, left_colors) = left_colored(s, d, j - 1);
    let spoke = |t: Option<usize>| Some(if t.is_none() { Color::Blue } else { Color::Red });
    let (gadget, gadget_colors) = hang_colored(d.d(j) - 1, s - 1, &left, Some(&left_colors), spoke).colored_graph();
    let mut b = Builder::new();
    b.append_colored(&right, Some(&right_colors));
    let x = b.glue_colored(&gadget, Some(&gadget_colors));
    let y = b.add_vertex();
    b.add_edge(x, y, Some(Color::Blue));
    b.colored_graph()
}

pub fn left_determiner(s: usize, d: &DefiningSequence, i: usize) -> Result<OrderedGraph, ConstructError> {
    check_params(s, d, DeterminerSide::Left { i })?;
    Ok(left_colored(s, d, i).0)
}

pub fn right_determiner(s: usize, d: &DefiningSequence, j: usize) -> Result<OrderedGraph, ConstructError> {
    check_params(s, d, DeterminerSide::Right { j })?;
    Ok(right_colored(s, d, j).0)
}

/// The patterns a determiner is judged against: the forced target with its
/// anchor, and the blue graph a good coloring must avoid.
struct Targets {
    target: OrderedGraph,
    forbidden_blue: OrderedGraph,
    anchor_left: bool,
}

fn targets(d: &DefiningSequence, side: DeterminerSide) -> Targets {
    match side {
        DeterminerSide::Left { i } => {
            let next_len = if i < d.len() { d.d(i + 1) } else { 1 };
            let mut b = Builder::new();
            b.add_vertex();
            b.glue(&OrderedGraph::right_star(next_len));
            b.glue(&caterpillar_prefix(d, i));
            Targets {
                target: caterpillar_prefix(d, i),
                forbidden_blue: b.graph(),
                anchor_left: true,
            }
        }
        DeterminerSide::Right { j } => Targets {
            target: caterpillar_segments(d, j, d.len()),
            forbidden_blue: caterpillar_prefix(d, d.len()),
            anchor_left: false,
        },
    }
}

fn anchor_of(f: &OrderedGraph, left: bool) -> Vertex {
    if left {
        0
    } else {
        f.vertex_count() - 1
    }
}

/// Whether `c` is good: no red star, no forbidden blue graph, and exactly one
/// anchored blue copy of the target, induced and isolated in blue.
fn good_copy(c: &EdgeColoring, s: usize, t: &Targets) -> Option<Embedding> {
    let f = c.host();
    if f.vertex_count() == 0 {
        return None;
    }
    let anchor = anchor_of(f, t.anchor_left);
    if c.copy_in(Color::Red, &OrderedGraph::right_star(s)).is_some()
        || c.copy_in(Color::Blue, &t.forbidden_blue).is_some()
    {
        return None;
    }
    let blue = c.class(Color::Blue);
    let anchored: Vec<Embedding> = find_embeddings(&blue, &t.target, None)
        .into_iter()
        .filter(|e| e.contains(anchor))
        .collect();
    let [copy] = <[Embedding; 1]>::try_from(anchored).ok()?;
    let used = copy.edge_indices(&blue, &t.target);
    let isolated = blue
        .edges()
        .iter()
        .enumerate()
        .all(|(k, &(u, v))| used.contains(&k) || (!copy.contains(u) && !copy.contains(v)));
    isolated.then_some(copy)
}

/// The coloring from the recursive construction, checked against every
/// condition of a good coloring.
pub fn good_coloring(s: usize, d: &DefiningSequence, side: DeterminerSide) -> Result<GoodColoring, ConstructError> {
    check_params(s, d, side)?;
    let (g, colors) = match side {
        DeterminerSide::Left { i } => left_colored(s, d, i),
        DeterminerSide::Right { j } => right_colored(s, d, j),
    };
    let coloring = EdgeColoring::new(g, colors).expect("aligned colors");
    let copy = good_copy(&coloring, s, &targets(d, side))
        .ok_or_else(|| ConstructError::VerificationFailed("recursive coloring is not good".into()))?;
    Ok(GoodColoring {
        coloring,
        distinguished_copy: copy,
    })
}

/// Exhaustively checks both determiner conditions for `candidate`.
pub fn verify_determiner(
    candidate: &OrderedGraph,
    s: usize,
    d: &DefiningSequence,
    side: DeterminerSide,
    opts: &SearchOptions,
) -> Result<DeterminerReport, ConstructError> {
    check_params(s, d, side)?;
    if candidate.vertex_count() == 0 {
        return Err(invalid("candidate has no vertices"));
    }
    let t = targets(d, side);
    let star = OrderedGraph::right_star(s);
    let anchor = anchor_of(candidate, t.anchor_left);
    let red = copy_edge_sets(candidate, &star);

    let mut blue = copy_edge_sets_where(candidate, &t.target, |m| m.contains(&anchor));
    if let DeterminerSide::Right { .. } = side {
        blue.extend(copy_edge_sets(candidate, &t.forbidden_blue));
    }
    let forcing_problem = TwoColorProblem {
        edge_count: candidate.edge_count(),
        no_all_red: red.clone(),
        no_all_blue: blue,
    };
    let outcome = solve(&forcing_problem, opts).map_err(crate::arrow::ArrowError::from)?;
    let mut nodes = outcome.nodes;
    let forcing = outcome.solution.is_none();

    let good_problem = TwoColorProblem {
        edge_count: candidate.edge_count(),
        no_all_red: red,
        no_all_blue: copy_edge_sets(candidate, &t.forbidden_blue),
    };
    let mut has_good = false;
    let visited = for_each_solution(&good_problem, opts.budget.saturating_sub(nodes), |colors| {
        let c = EdgeColoring::new(candidate.clone(), colors.to_vec()).expect("aligned colors");
        has_good = good_copy(&c, s, &t).is_some();
        if has_good {
            std::ops::ControlFlow::Break(())
        } else {
            std::ops::ControlFlow::Continue(())
        }
    })
    .map_err(crate::arrow::ArrowError::from)?;
    nodes += visited;
    Ok(DeterminerReport {
        forcing,
        has_good_coloring: has_good,
        nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::combinators::hang;

    fn seq(d: &[usize]) -> DefiningSequence {
        DefiningSequence::new(d.to_vec()).unwrap()
    }

    #[test]
    fn base_cases() {
        assert_eq!(left_determiner(2, &seq(&[1]), 1).unwrap(), OrderedGraph::right_star(2));
        assert_eq!(left_determiner(2, &seq(&[1]), 0).unwrap(), OrderedGraph::empty(1));
        assert_eq!(right_determiner(2, &seq(&[1, 1]), 3).unwrap(), OrderedGraph::empty(1));
        let two = left_determiner(2, &seq(&[1, 1]), 2).unwrap();
        assert_eq!(two, hang(0, 2, &OrderedGraph::right_star(2)));
        assert_eq!(two.vertex_count(), 7);
        assert!(right_determiner(2, &seq(&[1]), 1).is_err());
        assert!(left_determiner(2, &seq(&[1]), 2).is_err());
    }

    #[test]
    fn small_left_determiners_verify() {
        let opts = SearchOptions::default();
        for (d, i) in [(vec![1], 1), (vec![2], 1), (vec![1, 1], 2), (vec![1], 0)] {
            let d = seq(&d);
            let g = left_determiner(2, &d, i).unwrap();
            let report = verify_determiner(&g, 2, &d, DeterminerSide::Left { i }, &opts).unwrap();
            assert!(report.holds(), "d={d} i={i}: {report:?}");
            good_coloring(2, &d, DeterminerSide::Left { i }).unwrap();
        }
    }

    #[test]
    fn single_edge_is_not_a_left_determiner() {
        let d = seq(&[1]);
        let report = verify_determiner(
            &OrderedGraph::right_star(1),
            2,
            &d,
            DeterminerSide::Left { i: 1 },
            &SearchOptions::default(),
        )
        .unwrap();
        assert!(!report.forcing);
    }

    #[test]
    fn small_right_determiners_verify() {
        let opts = SearchOptions::default();
        for (d, j) in [(vec![1, 1], 2), (vec![2, 1], 2), (vec![1, 2], 2), (vec![1, 1], 3)] {
            let d = seq(&d);
            let g = right_determiner(2, &d, j).unwrap();
            let report = verify_determiner(&g, 2, &d, DeterminerSide::Right { j }, &opts).unwrap();
            assert!(report.holds(), "d={d} j={j}: {report:?}");
            good_coloring(2, &d, DeterminerSide::Right { j }).unwrap();
        }
    }
}
