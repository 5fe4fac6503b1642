//! Verdicts on whether pairs of ordered graphs are Ramsey finite, or have
//! Ramsey graphs of a given sparse kind.

use std::fmt;

use thiserror::Error;

use crate::graph::OrderedGraph;
use crate::refute::{applicable_forest_cases, ForestCase};
use crate::structure::{
    all_components, extract_defining_sequence, extract_left_defining_sequence, is_connected, is_forest, is_left_star,
    is_monotone_matching, is_monotone_path, is_partial_matching, is_pseudoforest, is_right_star, max_left_degree,
    max_right_degree, DefiningSequence,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Answer::Yes => "YES",
            Answer::No => "NO",
            Answer::Unknown => "UNKNOWN",
        })
    }
}

/// The result a verdict rests on, named by what it characterizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    /// Pairs of forests with a forest Ramsey graph.
    ForestRamseyPairs,
    /// Pairs of connected graphs with a pseudoforest Ramsey graph.
    PseudoforestRamseyPairs,
    /// Connected graphs that are Ramsey finite.
    ConnectedRamseyFinite,
    /// Component shapes forced on Ramsey finite graphs.
    RamseyFiniteComponentShapes,
    /// A right star against a right caterpillar.
    StarVersusCaterpillar,
    /// Monotone matchings against graphs without isolated vertices.
    MonotoneMatchingPairs,
}

impl Basis {
    pub fn tag(self) -> &'static str {
        match self {
            Basis::ForestRamseyPairs => "forest-ramsey-pairs",
            Basis::PseudoforestRamseyPairs => "pseudoforest-ramsey-pairs",
            Basis::ConnectedRamseyFinite => "connected-ramsey-finite",
            Basis::RamseyFiniteComponentShapes => "ramsey-finite-component-shapes",
            Basis::StarVersusCaterpillar => "star-versus-caterpillar",
            Basis::MonotoneMatchingPairs => "monotone-matching-pairs",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub answer: Answer,
    pub basis: Basis,
    /// Case number within the basis, where it has cases.
    pub case: Option<u8>,
    /// True if the second graph plays the role the case names first.
    pub swapped: bool,
    /// Human-readable justification; every claim in it is a checkable flag.
    pub reason: String,
    pub sequence: Option<DefiningSequence>,
}

impl Verdict {
    fn new(answer: Answer, basis: Basis, reason: impl Into<String>) -> Self {
        Verdict {
            answer,
            basis,
            case: None,
            swapped: false,
            reason: reason.into(),
            sequence: None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}", self.answer, self.basis.tag())?;
        if let Some(c) = self.case {
            write!(f, " case {c}")?;
        }
        write!(f, "] {}", self.reason)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("{0} has no edges")]
    Edgeless(&'static str),
    #[error("{0} is not connected")]
    NotConnected(&'static str),
    #[error("neither order of the pair is a star against a caterpillar of the same orientation")]
    NotStarCaterpillar,
}

fn require_edges(h: &OrderedGraph, h2: &OrderedGraph) -> Result<(), ClassifyError> {
    if h.edge_count() == 0 {
        return Err(ClassifyError::Edgeless("H"));
    }
    if h2.edge_count() == 0 {
        return Err(ClassifyError::Edgeless("H'"));
    }
    Ok(())
}

/// The four ways a pair of forests can have a forest Ramsey graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForestRamseyCase {
    /// One graph is a partial matching.
    PartialMatching,
    /// One graph is a union of right stars; in the other every vertex has at
    /// most one left neighbour.
    RightStarsVsOneLeft,
    /// Mirror image of the previous case.
    LeftStarsVsOneRight,
    /// One graph is a union of left and right stars; the other is a union of
    /// monotone paths.
    StarsVsMonotonePaths,
}

impl ForestRamseyCase {
    pub fn number(self) -> u8 {
        self as u8 + 1
    }
}

fn forest_case_holds(case: ForestRamseyCase, a: &OrderedGraph, b: &OrderedGraph) -> bool {
    match case {
        ForestRamseyCase::PartialMatching => is_partial_matching(a),
        ForestRamseyCase::RightStarsVsOneLeft => all_components(a, is_right_star) && max_left_degree(b) <= 1,
        ForestRamseyCase::LeftStarsVsOneRight => all_components(a, is_left_star) && max_right_degree(b) <= 1,
        ForestRamseyCase::StarsVsMonotonePaths => {
            all_components(a, |c| is_left_star(c) || is_right_star(c)) && all_components(b, is_monotone_path)
        }
    }
}

/// Lowest-numbered case that applies, with `swapped` set when the second
/// graph takes the first role. Isolated vertices are ignored.
pub fn forest_ramsey_case(h: &OrderedGraph, h2: &OrderedGraph) -> Option<(ForestRamseyCase, bool)> {
    if !is_forest(h) || !is_forest(h2) {
        return None;
    }
    let (a, b) = (h.without_isolated(), h2.without_isolated());
    use ForestRamseyCase::*;
    for case in [
        PartialMatching,
        RightStarsVsOneLeft,
        LeftStarsVsOneRight,
        StarsVsMonotonePaths,
    ] {
        if forest_case_holds(case, &a, &b) {
            return Some((case, false));
        }
        if forest_case_holds(case, &b, &a) {
            return Some((case, true));
        }
    }
    None
}

/// Whether some forest arrows `(h, h2)`.
pub fn ramsey_forest_case(h: &OrderedGraph, h2: &OrderedGraph) -> Result<Verdict, ClassifyError> {
    require_edges(h, h2)?;
    let basis = Basis::ForestRamseyPairs;
    if !is_forest(h) || !is_forest(h2) {
        return Ok(Verdict::new(
            Answer::No,
            basis,
            "a graph with a cycle has no forest Ramsey graph",
        ));
    }
    if let Some((case, swapped)) = forest_ramsey_case(h, h2) {
        let reason = match case {
            ForestRamseyCase::PartialMatching => "one graph is a partial matching",
            ForestRamseyCase::RightStarsVsOneLeft => {
                "one graph is a union of right stars, the other has at most one left neighbour per vertex"
            }
            ForestRamseyCase::LeftStarsVsOneRight => {
                "one graph is a union of left stars, the other has at most one right neighbour per vertex"
            }
            ForestRamseyCase::StarsVsMonotonePaths => {
                "one graph is a union of left and right stars, the other a union of monotone paths"
            }
        };
        let mut v = Verdict::new(Answer::Yes, basis, reason);
        v.case = Some(case.number());
        v.swapped = swapped;
        return Ok(v);
    }
    match applicable_forest_cases(h, h2).first() {
        Some(c) => {
            let reason = match c {
                ForestCase::NonStarComponents => "both graphs have a component that is not a star",
                ForestCase::OppositeSides => "a vertex with two right neighbours against one with two left neighbours",
                ForestCase::BothMonotoneP3 => "both graphs contain a monotone P3",
                ForestCase::MonotoneP3VsP4 => "a monotone P3 against a path with three edges",
            };
            let mut v = Verdict::new(
                Answer::No,
                basis,
                format!("refuting coloring case {}: {reason}", c.number()),
            );
            v.case = Some(c.number());
            Ok(v)
        }
        None => Ok(Verdict::new(
            Answer::Unknown,
            basis,
            "no construction and no refuting coloring applies",
        )),
    }
}

/// For connected `h`, `h2`: whether some pseudoforest arrows the pair while
/// no forest does.
pub fn ramsey_pseudoforest_connected(h: &OrderedGraph, h2: &OrderedGraph) -> Result<Verdict, ClassifyError> {
    require_edges(h, h2)?;
    if !is_connected(h) {
        return Err(ClassifyError::NotConnected("H"));
    }
    if !is_connected(h2) {
        return Err(ClassifyError::NotConnected("H'"));
    }
    let basis = Basis::PseudoforestRamseyPairs;
    let k2 = OrderedGraph::complete(2);
    let proper = |g: &OrderedGraph| is_pseudoforest(g) && !is_forest(g);
    let p3 = OrderedGraph::monotone_path(3);
    if (*h == k2 && proper(h2)) || (*h2 == k2 && proper(h)) {
        let mut v = Verdict::new(Answer::Yes, basis, "K2 against a connected pseudoforest with a cycle");
        v.swapped = *h2 == k2 && *h != k2;
        return Ok(v);
    }
    if *h == p3 && *h2 == p3 {
        return Ok(Verdict::new(
            Answer::Yes,
            basis,
            "both graphs are monotone P3; witness: path on 5 vertices plus chord 2-4",
        ));
    }
    Ok(Verdict::new(
        Answer::No,
        basis,
        "neither K2 against a connected proper pseudoforest nor two monotone P3",
    ))
}

/// A connected graph is Ramsey finite iff it is a left or a right star.
pub fn ramsey_finite_connected(h: &OrderedGraph) -> Result<Verdict, ClassifyError> {
    if h.edge_count() == 0 {
        return Err(ClassifyError::Edgeless("H"));
    }
    if !is_connected(h) {
        return Err(ClassifyError::NotConnected("H"));
    }
    let basis = Basis::ConnectedRamseyFinite;
    Ok(if is_right_star(h) {
        Verdict::new(Answer::Yes, basis, "right star")
    } else if is_left_star(h) {
        Verdict::new(Answer::Yes, basis, "left star")
    } else {
        Verdict::new(Answer::No, basis, "connected but neither a left nor a right star")
    })
}

/// Necessary condition only: in a Ramsey finite graph either every
/// component other than a monotone P3 is a right star, or every such
/// component is a left star. Isolated vertices are ignored.
pub fn ramsey_finite_structural_filter(h: &OrderedGraph) -> Verdict {
    let basis = Basis::RamseyFiniteComponentShapes;
    let p3 = OrderedGraph::monotone_path(3);
    let others = |pred: fn(&OrderedGraph) -> bool| all_components(h, |c| *c == p3 || pred(c));
    if others(is_right_star) || others(is_left_star) {
        Verdict::new(
            Answer::Unknown,
            basis,
            "component shapes are compatible with Ramsey finiteness",
        )
    } else {
        Verdict::new(
            Answer::No,
            basis,
            "components mix star orientations or include a non-star other than a monotone P3",
        )
    }
}

fn star_caterpillar(star: &OrderedGraph, cat: &OrderedGraph) -> Option<DefiningSequence> {
    if is_right_star(star) {
        if let Ok(d) = extract_defining_sequence(cat) {
            return Some(d);
        }
    }
    if is_left_star(star) {
        if let Ok(d) = extract_left_defining_sequence(cat) {
            return Some(d);
        }
    }
    None
}

/// A right star with `s` edges against a right caterpillar (or the mirror
/// image): finite if `s = 1`, `i <= 2` or `d` is nondecreasing; infinite if
/// `s >= 2` and `d` is not almost increasing; unknown otherwise.
pub fn caterpillar_pair_verdict(h: &OrderedGraph, h2: &OrderedGraph) -> Result<Verdict, ClassifyError> {
    let (swapped, star, d) = if let Some(d) = star_caterpillar(h, h2) {
        (false, h, d)
    } else if let Some(d) = star_caterpillar(h2, h) {
        (true, h2, d)
    } else {
        return Err(ClassifyError::NotStarCaterpillar);
    };
    let basis = Basis::StarVersusCaterpillar;
    let s = star.edge_count();
    let mut v = if s == 1 {
        Verdict::new(Answer::Yes, basis, "the star is a single edge")
    } else if d.len() <= 2 {
        Verdict::new(Answer::Yes, basis, format!("caterpillar {d} has at most two segments"))
    } else if d.is_nondecreasing() {
        Verdict::new(Answer::Yes, basis, format!("defining sequence {d} is nondecreasing"))
    } else if !d.is_almost_increasing() {
        Verdict::new(
            Answer::No,
            basis,
            format!("defining sequence {d} is not almost increasing"),
        )
    } else {
        Verdict::new(
            Answer::Unknown,
            basis,
            format!("defining sequence {d} is almost increasing but not nondecreasing"),
        )
    };
    v.swapped = swapped;
    v.sequence = Some(d);
    Ok(v)
}

/// Finite if one graph is a monotone matching and the other has no isolated
/// vertices, or one graph is a single edge.
pub fn monotone_matching_finite(h: &OrderedGraph, h2: &OrderedGraph) -> Verdict {
    let basis = Basis::MonotoneMatchingPairs;
    let k2 = OrderedGraph::complete(2);
    if *h == k2 || *h2 == k2 {
        let mut v = Verdict::new(Answer::Yes, basis, "one graph is a single edge");
        v.swapped = *h != k2;
        return v;
    }
    for (swapped, a, b) in [(false, h, h2), (true, h2, h)] {
        if is_monotone_matching(a) && b.isolated_count() == 0 {
            let mut v = Verdict::new(
                Answer::Yes,
                basis,
                "monotone matching against a graph without isolated vertices",
            );
            v.swapped = swapped;
            return v;
        }
    }
    Verdict::new(
        Answer::Unknown,
        basis,
        "no monotone matching against a graph without isolated vertices",
    )
}
