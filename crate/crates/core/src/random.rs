//! Monte-Carlo scans of how often `G(n, p)` arrows `(h, h)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::arrow::{arrows, ArrowError};
use crate::graph::OrderedGraph;
use crate::search::SearchOptions;

#[derive(Debug, Clone)]
pub struct ThresholdExperiment {
    pub h: OrderedGraph,
    pub n: usize,
    pub p_grid: Vec<f64>,
    pub trials: usize,
    pub seed: u64,
    pub search: SearchOptions,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow {
    pub p: f64,
    pub trials: usize,
    pub arrows: usize,
    pub not_arrows: usize,
    /// Samples whose search ran out of budget.
    pub unknown: usize,
}

impl ScanRow {
    /// Arrowing samples over all samples, unknowns included in the
    /// denominator.
    pub fn frequency(&self) -> f64 {
        self.arrows as f64 / self.trials as f64
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RandomError {
    #[error("probability {0} is outside [0, 1]")]
    Probability(f64),
    #[error("at least one trial is needed")]
    NoTrials,
    #[error(transparent)]
    Arrow(ArrowError),
}

/// `G(n, p)` on `0..n`, using stream 0 of `seed`.
pub fn sample_gnp(n: usize, p: f64, seed: u64) -> OrderedGraph {
    sample_gnp_stream(n, p, seed, 0)
}

/// Edges are visited in lexicographic order and each draws one uniform
/// `f64` from ChaCha8 seeded with `seed` on stream `stream`. Reusing the
/// stream across `p` couples the samples monotonically.
pub fn sample_gnp_stream(n: usize, p: f64, seed: u64, stream: u64) -> OrderedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    OrderedGraph::from_parts(n, edges)
}

/// One row per grid point. Trial `t` uses stream `t`, so results do not
/// depend on how the trials are scheduled.
pub fn run_threshold_scan(exp: &ThresholdExperiment) -> Result<Vec<ScanRow>, RandomError> {
    if exp.trials == 0 {
        return Err(RandomError::NoTrials);
    }
    if let Some(&p) = exp.p_grid.iter().find(|p| !(0.0..=1.0).contains(*p)) {
        return Err(RandomError::Probability(p));
    }
    if exp.h.edge_count() == 0 {
        return Err(RandomError::Arrow(ArrowError::EdgelessPattern));
    }
    let search = SearchOptions {
        threads: 1,
        ..exp.search
    };
    exp.p_grid
        .iter()
        .map(|&p| {
            let verdicts: Vec<Option<bool>> = (0..exp.trials as u64)
                .into_par_iter()
                .map(|t| {
                    let g = sample_gnp_stream(exp.n, p, exp.seed, t);
                    match arrows(&g, &exp.h, &exp.h, &search) {
                        Ok(c) => Ok(Some(c.arrows())),
                        Err(ArrowError::BudgetExceeded(_)) => Ok(None),
                        Err(e) => Err(RandomError::Arrow(e)),
                    }
                })
                .collect::<Result<_, _>>()?;
            let arrows = verdicts.iter().filter(|v| **v == Some(true)).count();
            let not_arrows = verdicts.iter().filter(|v| **v == Some(false)).count();
            Ok(ScanRow {
                p,
                trials: exp.trials,
                arrows,
                not_arrows,
                unknown: exp.trials - arrows - not_arrows,
            })
        })
        .collect()
}

pub fn scan_to_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from("p,trials,arrows,not_arrows,unknown\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.p, r.trials, r.arrows, r.not_arrows, r.unknown
        ));
    }
    out
}
