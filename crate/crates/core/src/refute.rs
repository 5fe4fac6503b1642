//! Colorings showing that a forest or pseudoforest is not a Ramsey graph of a
//! pair `(H, H')`. Each case checks its hypothesis on `(H, H')`, builds the
//! coloring, and verifies it before returning.

use std::fmt;

use thiserror::Error;

use crate::coloring::{bend_colors_into, pinned_bipartition, side_rule, star_coloring, Color, EdgeColoring};
use crate::graph::{OrderedGraph, Vertex};
use crate::structure::{
    components, contains_mixed_three_star, contains_monotone_p3, has_cycle, is_forest, is_partial_matching,
    is_pseudoforest, is_star, max_left_degree, max_right_degree, nontrivial_component_graphs, paths_with_three_edges,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RefuteError {
    #[error("host is not a forest")]
    NotAForest,
    #[error("host is not a pseudoforest")]
    NotAPseudoforest,
    #[error("case {0} does not apply: {1}")]
    NotApplicable(u8, &'static str),
    #[error("case {case} produced an invalid coloring: {detail}")]
    VerificationFailed { case: u8, detail: String },
}

/// Cases for forest hosts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ForestCase {
    /// Both graphs have a component that is not a star.
    NonStarComponents,
    /// One graph has a vertex with two right neighbours, the other one with
    /// two left neighbours.
    OppositeSides,
    /// Both graphs contain a monotone `P3`.
    BothMonotoneP3,
    /// One contains a monotone `P3`, the other a path with three edges.
    MonotoneP3VsP4,
}

/// Cases for pseudoforest hosts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PseudoforestCase {
    /// One graph has a cycle and the other is not a partial matching.
    CycleVsNonMatching,
    OppositeSides,
    MonotoneP3VsP4,
    /// One contains a monotone `P3`, the other a three-edge star that is
    /// neither a left nor a right star.
    MonotoneP3VsMixedStar,
}

impl ForestCase {
    pub const ALL: [ForestCase; 4] = [
        ForestCase::NonStarComponents,
        ForestCase::OppositeSides,
        ForestCase::BothMonotoneP3,
        ForestCase::MonotoneP3VsP4,
    ];

    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    pub fn from_number(k: u8) -> Option<Self> {
        Self::ALL.get((k as usize).checked_sub(1)?).copied()
    }
}

impl PseudoforestCase {
    pub const ALL: [PseudoforestCase; 4] = [
        PseudoforestCase::CycleVsNonMatching,
        PseudoforestCase::OppositeSides,
        PseudoforestCase::MonotoneP3VsP4,
        PseudoforestCase::MonotoneP3VsMixedStar,
    ];

    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    pub fn from_number(k: u8) -> Option<Self> {
        Self::ALL.get((k as usize).checked_sub(1)?).copied()
    }
}

impl fmt::Display for ForestCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

impl fmt::Display for PseudoforestCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

type Test = fn(&OrderedGraph, &OrderedGraph) -> bool;

/// `Some(false)` if `test(h, h2)`, `Some(true)` if only `test(h2, h)`.
fn orient(h: &OrderedGraph, h2: &OrderedGraph, test: Test) -> Option<bool> {
    if test(h, h2) {
        Some(false)
    } else if test(h2, h) {
        Some(true)
    } else {
        None
    }
}

fn has_non_star_component(g: &OrderedGraph) -> bool {
    nontrivial_component_graphs(g).iter().any(|c| !is_star(c))
}

fn right_vs_left(h: &OrderedGraph, h2: &OrderedGraph) -> bool {
    max_right_degree(h) >= 2 && max_left_degree(h2) >= 2
}

fn p3_vs_p4(h: &OrderedGraph, h2: &OrderedGraph) -> bool {
    contains_monotone_p3(h) && !paths_with_three_edges(h2).is_empty()
}

fn p3_vs_mixed_star(h: &OrderedGraph, h2: &OrderedGraph) -> bool {
    contains_monotone_p3(h) && contains_mixed_three_star(h2)
}

fn cycle_vs_non_matching(h: &OrderedGraph, h2: &OrderedGraph) -> bool {
    has_cycle(h) && !is_partial_matching(h2)
}

pub fn forest_case_applies(case: ForestCase, h: &OrderedGraph, h2: &OrderedGraph) -> bool {
    match case {
        ForestCase::NonStarComponents => has_non_star_component(h) && has_non_star_component(h2),
        ForestCase::OppositeSides => orient(h, h2, right_vs_left).is_some(),
        ForestCase::BothMonotoneP3 => contains_monotone_p3(h) && contains_monotone_p3(h2),
        ForestCase::MonotoneP3VsP4 => orient(h, h2, p3_vs_p4).is_some(),
    }
}

pub fn pseudoforest_case_applies(case: PseudoforestCase, h: &OrderedGraph, h2: &OrderedGraph) -> bool {
    match case {
        PseudoforestCase::CycleVsNonMatching => orient(h, h2, cycle_vs_non_matching).is_some(),
        PseudoforestCase::OppositeSides => orient(h, h2, right_vs_left).is_some(),
        PseudoforestCase::MonotoneP3VsP4 => orient(h, h2, p3_vs_p4).is_some(),
        PseudoforestCase::MonotoneP3VsMixedStar => orient(h, h2, p3_vs_mixed_star).is_some(),
    }
}

pub fn applicable_forest_cases(h: &OrderedGraph, h2: &OrderedGraph) -> Vec<ForestCase> {
    ForestCase::ALL
        .into_iter()
        .filter(|&c| forest_case_applies(c, h, h2))
        .collect()
}

pub fn applicable_pseudoforest_cases(h: &OrderedGraph, h2: &OrderedGraph) -> Vec<PseudoforestCase> {
    PseudoforestCase::ALL
        .into_iter()
        .filter(|&c| pseudoforest_case_applies(c, h, h2))
        .collect()
}

fn verified(case: u8, c: EdgeColoring, h: &OrderedGraph, h2: &OrderedGraph) -> Result<EdgeColoring, RefuteError> {
    match c.check_avoids(h, h2) {
        Ok(()) => Ok(c),
        Err(v) => Err(RefuteError::VerificationFailed {
            case,
            detail: v.to_string(),
        }),
    }
}

/// Builds the coloring for `(red side, blue side)` with `build`, swapping
/// colors when the hypothesis holds with the roles exchanged.
fn oriented(
    f: &OrderedGraph,
    h: &OrderedGraph,
    h2: &OrderedGraph,
    case: u8,
    test: Test,
    build: impl Fn(&OrderedGraph, &OrderedGraph) -> Option<Vec<Color>>,
) -> Result<EdgeColoring, RefuteError> {
    let swap = orient(h, h2, test).ok_or(RefuteError::NotApplicable(case, "hypothesis fails for both orders"))?;
    let blue_side = if swap { h } else { h2 };
    let colors = build(f, blue_side).ok_or_else(|| RefuteError::VerificationFailed {
        case,
        detail: "no suitable bipartition".into(),
    })?;
    let mut c = EdgeColoring::new(f.clone(), colors).expect("one color per edge");
    if swap {
        c = c.swapped();
    }
    verified(case, c, h, h2)
}

/// A coloring of the forest `f` with no red `h` and no blue `h2`.
pub fn refute_forest(
    f: &OrderedGraph,
    h: &OrderedGraph,
    h2: &OrderedGraph,
    case: ForestCase,
) -> Result<EdgeColoring, RefuteError> {
    if !is_forest(f) {
        return Err(RefuteError::NotAForest);
    }
    let k = case.number();
    match case {
        ForestCase::NonStarComponents => {
            if !forest_case_applies(case, h, h2) {
                return Err(RefuteError::NotApplicable(
                    k,
                    "needs a non-star component on both sides",
                ));
            }
            let c = star_coloring(f, 0).expect("root in range");
            verified(k, c, h, h2)
        }
        ForestCase::OppositeSides => oriented(f, h, h2, k, right_vs_left, |f, _| Some(peel_colors(f))),
        ForestCase::BothMonotoneP3 => {
            if !forest_case_applies(case, h, h2) {
                return Err(RefuteError::NotApplicable(k, "needs a monotone P3 on both sides"));
            }
            let side = pinned_bipartition(f, &vec![true; f.edge_count()], &vec![None; f.vertex_count()])
                .expect("forests are bipartite");
            verified(k, EdgeColoring::new(f.clone(), side_rule(f, &side)).unwrap(), h, h2)
        }
        ForestCase::MonotoneP3VsP4 => oriented(f, h, h2, k, p3_vs_p4, p3_vs_p4_colors),
    }
}

/// A coloring of the pseudoforest `f` with no red `h` and no blue `h2`.
pub fn refute_pseudoforest(
    f: &OrderedGraph,
    h: &OrderedGraph,
    h2: &OrderedGraph,
    case: PseudoforestCase,
) -> Result<EdgeColoring, RefuteError> {
    if !is_pseudoforest(f) {
        return Err(RefuteError::NotAPseudoforest);
    }
    let k = case.number();
    match case {
        PseudoforestCase::CycleVsNonMatching => {
            oriented(f, h, h2, k, cycle_vs_non_matching, |f, _| Some(one_blue_per_cycle(f)))
        }
        PseudoforestCase::OppositeSides => oriented(f, h, h2, k, right_vs_left, |f, _| Some(peel_colors(f))),
        PseudoforestCase::MonotoneP3VsP4 => oriented(f, h, h2, k, p3_vs_p4, p3_vs_p4_colors),
        PseudoforestCase::MonotoneP3VsMixedStar => oriented(f, h, h2, k, p3_vs_mixed_star, p3_vs_mixed_star_colors),
    }
}

/// Edges on cycles of a pseudoforest: what survives repeated leaf removal.
fn cycle_edges(f: &OrderedGraph) -> Vec<bool> {
    let mut alive = vec![true; f.edge_count()];
    let mut deg: Vec<usize> = (0..f.vertex_count()).map(|v| f.degree(v)).collect();
    let mut stack: Vec<Vertex> = (0..f.vertex_count()).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = stack.pop() {
        if deg[v] != 1 {
            continue;
        }
        let (u, e) = f
            .neighbors(v)
            .map(|u| (u, f.edge_index(u, v).unwrap()))
            .find(|&(_, e)| alive[e])
            .expect("leaf has an edge");
        alive[e] = false;
        deg[v] = 0;
        deg[u] -= 1;
        if deg[u] == 1 {
            stack.push(u);
        }
    }
    alive
}

/// `(vertex list, edge mask)` for each component with an edge.
fn component_masks(f: &OrderedGraph) -> Vec<(Vec<Vertex>, Vec<bool>)> {
    components(f)
        .into_iter()
        .filter(|c| c.len() > 1)
        .map(|c| {
            let mask = f.edges().iter().map(|&(u, _)| c.binary_search(&u).is_ok()).collect();
            (c, mask)
        })
        .collect()
}

fn and(a: &[bool], b: &[bool]) -> Vec<bool> {
    a.iter().zip(b).map(|(x, y)| *x && *y).collect()
}

/// Cycle neighbours of `v` along edges in `on_cycle`.
fn cycle_neighbors(f: &OrderedGraph, on_cycle: &[bool], v: Vertex) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = f
        .neighbors(v)
        .filter(|&u| on_cycle[f.edge_index(u, v).unwrap()])
        .collect();
    out.sort_unstable();
    out
}

fn cycle_vertices(f: &OrderedGraph, on_cycle: &[bool]) -> Vec<Vertex> {
    let mut vs: Vec<Vertex> = f
        .edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| on_cycle[i])
        .flat_map(|(_, &(u, v))| [u, v])
        .collect();
    vs.sort_unstable();
    vs.dedup();
    vs
}

/// One cycle edge per component blue, everything else red.
fn one_blue_per_cycle(f: &OrderedGraph) -> Vec<Color> {
    let cyc = cycle_edges(f);
    let mut colors = vec![Color::Red; f.edge_count()];
    for (_, mask) in component_masks(f) {
        if let Some(e) = (0..f.edge_count()).find(|&e| mask[e] && cyc[e]) {
            colors[e] = Color::Blue;
        }
    }
    colors
}

/// Leaves are peeled one at a time; the edge from a leaf `v` to its neighbour
/// `u` is red iff `v < u`. Remaining cycles alternate, except that on an odd
/// cycle both edges at its leftmost vertex are blue.
fn peel_colors(f: &OrderedGraph) -> Vec<Color> {
    let cyc = cycle_edges(f);
    let mut colors = vec![Color::Blue; f.edge_count()];
    let mut alive = vec![true; f.edge_count()];
    let mut deg: Vec<usize> = (0..f.vertex_count()).map(|v| f.degree(v)).collect();
    let mut stack: Vec<Vertex> = (0..f.vertex_count()).filter(|&v| deg[v] == 1).collect();
    while let Some(leaf) = stack.pop() {
        if deg[leaf] != 1 {
            continue;
        }
        let (u, e) = f
            .neighbors(leaf)
            .map(|u| (u, f.edge_index(u, leaf).unwrap()))
            .find(|&(_, e)| alive[e])
            .unwrap();
        alive[e] = false;
        colors[e] = if leaf < u { Color::Red } else { Color::Blue };
        deg[leaf] = 0;
        deg[u] -= 1;
        if deg[u] == 1 {
            stack.push(u);
        }
    }
    let mut done = vec![false; f.edge_count()];
    for start in cycle_vertices(f, &cyc) {
        let first = cycle_neighbors(f, &cyc, start);
        if first.iter().all(|&w| done[f.edge_index(start, w).unwrap()]) {
            continue;
        }
        // Walk the cycle from its leftmost vertex.
        let mut order = vec![start];
        let mut prev = start;
        let mut cur = first[0];
        while cur != start {
            order.push(cur);
            let nb = cycle_neighbors(f, &cyc, cur);
            let next = if nb[0] == prev { nb[1] } else { nb[0] };
            prev = cur;
            cur = next;
        }
        let len = order.len();
        let edge = |k: usize| f.edge_index(order[k], order[(k + 1) % len]).unwrap();
        for k in 0..len {
            done[edge(k)] = true;
        }
        if len % 2 == 0 {
            for k in 0..len {
                colors[edge(k)] = if k % 2 == 0 { Color::Red } else { Color::Blue };
            }
        } else {
            colors[edge(0)] = Color::Blue;
            colors[edge(len - 1)] = Color::Blue;
            for k in 1..len - 1 {
                colors[edge(k)] = if k % 2 == 1 { Color::Red } else { Color::Blue };
            }
        }
    }
    colors
}

/// How a path `a-b-c-d` sits in the vertex order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum PathShape {
    Monotone,
    /// A monotone sub-path whose rightmost vertex has both path neighbours
    /// on its left.
    RightPeak,
    /// The mirror image of `RightPeak`.
    LeftPeak,
    /// No monotone sub-path with two edges.
    Zigzag,
}

fn path_shape(p: [Vertex; 4]) -> PathShape {
    let mono = |a: Vertex, b: Vertex, c: Vertex| (a < b && b < c) || (a > b && b > c);
    if mono(p[0], p[1], p[2]) && mono(p[1], p[2], p[3]) {
        return PathShape::Monotone;
    }
    let nbrs = |k: usize| -> Vec<Vertex> {
        let mut v = Vec::new();
        if k > 0 {
            v.push(p[k - 1]);
        }
        if k < 3 {
            v.push(p[k + 1]);
        }
        v
    };
    let mut shape = PathShape::Zigzag;
    for s in 0..2 {
        if !mono(p[s], p[s + 1], p[s + 2]) {
            continue;
        }
        let ends = [s, s + 2];
        let right = *ends.iter().max_by_key(|&&k| p[k]).unwrap();
        let left = *ends.iter().min_by_key(|&&k| p[k]).unwrap();
        let nr = nbrs(right);
        let nl = nbrs(left);
        if nr.len() == 2 && nr.iter().all(|&x| x < p[right]) {
            return PathShape::RightPeak;
        }
        if nl.len() == 2 && nl.iter().all(|&x| x > p[left]) {
            shape = PathShape::LeftPeak;
        }
    }
    shape
}

/// No red monotone `P3`, and no blue copy of a path with three edges of the
/// best available shape in `blue_side`.
fn p3_vs_p4_colors(f: &OrderedGraph, blue_side: &OrderedGraph) -> Option<Vec<Color>> {
    let shape = paths_with_three_edges(blue_side).into_iter().map(path_shape).min()?;
    if shape == PathShape::LeftPeak {
        let m = f.mirror();
        let mirrored = p3_vs_p4_colors(&m, &blue_side.mirror())?;
        let back = EdgeColoring::new(m, mirrored).ok()?.mirrored();
        return Some(back.colors().to_vec());
    }
    let cyc = cycle_edges(f);
    let none = vec![None; f.vertex_count()];
    let mut colors = vec![Color::Blue; f.edge_count()];
    for (comp, mask) in component_masks(f) {
        let comp_cycle = and(&mask, &cyc);
        let has_cycle = comp_cycle.iter().any(|&x| x);
        if shape != PathShape::Zigzag {
            if let Some(side) = pinned_bipartition(f, &mask, &none) {
                paint_sides(f, &mask, &side, &mut colors);
                continue;
            }
        }
        match shape {
            PathShape::Monotone => {
                // Drop one edge of the odd cycle, put both its ends in A and
                // color it blue.
                let e = (0..f.edge_count()).find(|&e| comp_cycle[e])?;
                let (a, b) = f.edges()[e];
                let mut rest = mask.clone();
                rest[e] = false;
                let mut pins = none.clone();
                pins[a] = Some(true);
                pins[b] = Some(true);
                let side = pinned_bipartition(f, &rest, &pins)?;
                paint_sides(f, &rest, &side, &mut colors);
                colors[e] = Color::Blue;
            }
            PathShape::RightPeak => {
                // Blue: all monotone paths leaving the middle cycle neighbour
                // of the cycle's rightmost vertex to the right.
                let cv = cycle_vertices(f, &comp_cycle);
                let v = *cv.last()?;
                let nb = cycle_neighbors(f, &comp_cycle, v);
                let u = *nb.last()?;
                let mut in_t = vec![false; f.edge_count()];
                let mut reached = vec![false; f.vertex_count()];
                reached[u] = true;
                let mut stack = vec![u];
                while let Some(x) = stack.pop() {
                    for &y in f.right_neighbors(x) {
                        let e = f.edge_index(x, y).unwrap();
                        if mask[e] && !in_t[e] {
                            in_t[e] = true;
                            if !reached[y] {
                                reached[y] = true;
                                stack.push(y);
                            }
                        }
                    }
                }
                let rest: Vec<bool> = mask.iter().zip(&in_t).map(|(m, t)| *m && !*t).collect();
                let pins: Vec<Option<bool>> = reached.iter().map(|&r| if r { Some(false) } else { None }).collect();
                let side = pinned_bipartition(f, &rest, &pins)?;
                paint_sides(f, &rest, &side, &mut colors);
                for e in 0..f.edge_count() {
                    if in_t[e] {
                        colors[e] = Color::Blue;
                    }
                }
            }
            PathShape::Zigzag => {
                if !has_cycle {
                    bend_colors_into(f, &mask, comp[0], &mut colors);
                } else {
                    let cv = cycle_vertices(f, &comp_cycle);
                    let u = cv[0];
                    let v = cycle_neighbors(f, &comp_cycle, u)[0];
                    let e = f.edge_index(u, v).unwrap();
                    let mut rest = mask.clone();
                    rest[e] = false;
                    bend_colors_into(f, &rest, v, &mut colors);
                    colors[e] = Color::Red;
                }
            }
            PathShape::LeftPeak => unreachable!(),
        }
    }
    Some(colors)
}

/// No red monotone `P3`, and no blue three-edge star whose centre has one
/// left and two right neighbours (or the mirror image).
fn p3_vs_mixed_star_colors(f: &OrderedGraph, blue_side: &OrderedGraph) -> Option<Vec<Color>> {
    let one_left_two_right = (0..blue_side.vertex_count())
        .any(|v| !blue_side.left_neighbors(v).is_empty() && blue_side.right_neighbors(v).len() >= 2);
    if !one_left_two_right {
        let m = f.mirror();
        let mirrored = p3_vs_mixed_star_colors(&m, &blue_side.mirror())?;
        return Some(EdgeColoring::new(m, mirrored).ok()?.mirrored().colors().to_vec());
    }
    let cyc = cycle_edges(f);
    let none = vec![None; f.vertex_count()];
    let mut colors = vec![Color::Blue; f.edge_count()];
    for (_, mask) in component_masks(f) {
        if let Some(side) = pinned_bipartition(f, &mask, &none) {
            paint_sides(f, &mask, &side, &mut colors);
            continue;
        }
        let comp_cycle = and(&mask, &cyc);
        let rest: Vec<bool> = mask.iter().zip(&comp_cycle).map(|(m, c)| *m && !*c).collect();
        let mut pins = none.clone();
        for x in cycle_vertices(f, &comp_cycle) {
            let both_right = cycle_neighbors(f, &comp_cycle, x).iter().all(|&y| y > x);
            pins[x] = Some(!both_right);
        }
        let side = pinned_bipartition(f, &rest, &pins)?;
        paint_sides(f, &rest, &side, &mut colors);
        for e in 0..f.edge_count() {
            if comp_cycle[e] {
                colors[e] = Color::Blue;
            }
        }
    }
    Some(colors)
}

fn paint_sides(f: &OrderedGraph, mask: &[bool], side: &[bool], colors: &mut [Color]) {
    let rule = side_rule(f, side);
    for e in 0..f.edge_count() {
        if mask[e] {
            colors[e] = rule[e];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> OrderedGraph {
        OrderedGraph::parse_inline(s).unwrap()
    }

    #[test]
    fn triangle_cycle_case() {
        let k3 = OrderedGraph::complete(3);
        let p3 = OrderedGraph::monotone_path(3);
        let c = refute_pseudoforest(&k3, &k3, &p3, PseudoforestCase::CycleVsNonMatching).unwrap();
        assert_eq!(c.colors().iter().filter(|&&c| c == Color::Blue).count(), 1);
        // Roles exchanged: the coloring is swapped.
        let c = refute_pseudoforest(&k3, &p3, &k3, PseudoforestCase::CycleVsNonMatching).unwrap();
        assert_eq!(c.colors().iter().filter(|&&c| c == Color::Red).count(), 1);
    }

    #[test]
    fn not_applicable() {
        let k2 = OrderedGraph::complete(2);
        let r = refute_pseudoforest(&k2, &k2, &k2, PseudoforestCase::CycleVsNonMatching);
        assert!(matches!(r, Err(RefuteError::NotApplicable(1, _))));
        assert_eq!(
            refute_forest(&OrderedGraph::complete(3), &k2, &k2, ForestCase::BothMonotoneP3),
            Err(RefuteError::NotAForest)
        );
    }

    #[test]
    fn both_monotone_p3_on_a_path() {
        let p = OrderedGraph::monotone_path(5);
        let p3 = OrderedGraph::monotone_path(3);
        let c = refute_forest(&p, &p3, &p3, ForestCase::BothMonotoneP3).unwrap();
        assert_eq!(c.colors(), &[Color::Red, Color::Blue, Color::Red, Color::Blue]);
    }

    #[test]
    fn path_shapes() {
        assert_eq!(path_shape([0, 1, 2, 3]), PathShape::Monotone);
        assert_eq!(path_shape([0, 1, 3, 2]), PathShape::RightPeak);
        assert_eq!(path_shape([1, 0, 2, 3]), PathShape::LeftPeak);
        assert_eq!(path_shape([1, 0, 3, 2]), PathShape::Zigzag);
    }

    #[test]
    fn odd_cycle_with_tail() {
        let f = g("n=5;e=1-2,2-3,1-3,3-4,4-5");
        let p3 = OrderedGraph::monotone_path(3);
        for shape in [g("n=4;e=1-2,2-3,3-4"), g("n=4;e=1-2,2-4,3-4"), g("n=4;e=1-3,2-3,2-4")] {
            refute_pseudoforest(&f, &p3, &shape, PseudoforestCase::MonotoneP3VsP4).unwrap();
        }
    }
}
