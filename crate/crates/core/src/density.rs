//! Exact densities `m`, `m2` and the asymmetric `m2(H, H')`, computed by
//! enumerating vertex subsets.

use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

use crate::graph::OrderedGraph;

/// Subset enumeration is exhaustive, so inputs are capped.
pub const MAX_DENSITY_VERTICES: usize = 24;

/// A non-negative reduced fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DensityValue(Ratio<u64>);

impl DensityValue {
    pub fn new(num: u64, den: u64) -> Self {
        DensityValue(Ratio::new(num, den))
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    pub fn as_ratio(&self) -> Ratio<u64> {
        self.0
    }
}

impl fmt::Display for DensityValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DensityError {
    #[error("graph has no vertices")]
    Empty,
    #[error("m2 needs at least two edges, got {0}")]
    TooFewEdges(usize),
    #[error("graph has {0} vertices; the exhaustive search handles at most {MAX_DENSITY_VERTICES}")]
    TooLarge(usize),
    #[error("m2(H) = {h} is smaller than m2(H') = {h2}")]
    Unbalanced { h: DensityValue, h2: DensityValue },
}

/// Edge counts of every induced subgraph, indexed by vertex mask.
fn subset_edge_counts(g: &OrderedGraph) -> Vec<u32> {
    let n = g.vertex_count();
    let mut nbr = vec![0u32; n];
    for &(u, v) in g.edges() {
        nbr[u] |= 1 << v;
        nbr[v] |= 1 << u;
    }
    let mut counts = vec![0u32; 1 << n];
    for mask in 1usize..(1 << n) {
        let top = usize::BITS - 1 - mask.leading_zeros();
        let rest = mask & !(1 << top);
        counts[mask] = counts[rest] + (nbr[top as usize] & rest as u32).count_ones();
    }
    counts
}

fn check_size(g: &OrderedGraph) -> Result<(), DensityError> {
    match g.vertex_count() {
        0 => Err(DensityError::Empty),
        n if n > MAX_DENSITY_VERTICES => Err(DensityError::TooLarge(n)),
        _ => Ok(()),
    }
}

/// Best `num/den` over all masks accepted by `value`.
fn maximise(g: &OrderedGraph, mut value: impl FnMut(u32, u32) -> Option<(u64, u64)>) -> Option<DensityValue> {
    let counts = subset_edge_counts(g);
    let mut best: Option<Ratio<u64>> = None;
    for (mask, &e) in counts.iter().enumerate().skip(1) {
        let v = (mask as u64).count_ones();
        if let Some((num, den)) = value(v, e) {
            let r = Ratio::new(num, den);
            if best.is_none_or(|b| r > b) {
                best = Some(r);
            }
        }
    }
    best.map(DensityValue)
}

/// `m(G)`: the largest `|E'|/|V'|` over nonempty subgraphs.
pub fn density_m(g: &OrderedGraph) -> Result<DensityValue, DensityError> {
    check_size(g)?;
    Ok(maximise(g, |v, e| Some((e as u64, v as u64))).expect("nonempty"))
}

/// `m2(G)`: the largest `(|E'|-1)/(|V'|-2)` over subgraphs with at least
/// three vertices and one edge. Needs at least two edges.
pub fn density_m2(g: &OrderedGraph) -> Result<DensityValue, DensityError> {
    check_size(g)?;
    if g.edge_count() < 2 {
        return Err(DensityError::TooFewEdges(g.edge_count()));
    }
    Ok(
        maximise(g, |v, e| (v >= 3 && e >= 1).then(|| (e as u64 - 1, v as u64 - 2)))
            .expect("two edges span three vertices"),
    )
}

/// Total version of [`density_m2`]: a single edge gets `1/2`, flagged by the
/// returned boolean.
pub fn density_m2_total(g: &OrderedGraph) -> Result<(DensityValue, bool), DensityError> {
    match density_m2(g) {
        Ok(v) => Ok((v, false)),
        Err(DensityError::TooFewEdges(1)) => Ok((DensityValue::new(1, 2), true)),
        Err(e) => Err(e),
    }
}

/// `m2(H, H')`: the largest `|E''| / (|V''| - 2 + 1/m2(H))` over subgraphs
/// `H''` of `H'` with an edge. Requires `m2(H) >= m2(H')`.
pub fn density_m2_asym(h: &OrderedGraph, h2: &OrderedGraph) -> Result<DensityValue, DensityError> {
    check_size(h2)?;
    let mh = density_m2(h)?;
    let (mh2, _) = density_m2_total(h2)?;
    if mh < mh2 {
        return Err(DensityError::Unbalanced { h: mh, h2: mh2 });
    }
    let (p, q) = (mh.numer(), mh.denom());
    // e / (v - 2 + q/p) = e*p / ((v-2)*p + q)
    Ok(maximise(h2, |v, e| {
        (v >= 2 && e >= 1).then(|| (e as u64 * p, (v as u64 - 2) * p + q))
    })
    .expect("h2 has an edge"))
}
