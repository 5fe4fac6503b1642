//! Explicit Ramsey graphs, determiners, infinite families of minimal Ramsey
//! graphs, and the colorings that go with them.

mod combinators;
mod determiner;
mod family;
mod forest;
mod infinite;

use thiserror::Error;

use crate::arrow::{ArrowError, RamseyNumberError};

pub use combinators::{
    build_caterpillar, caterpillar_prefix, caterpillar_segments, concatenate, hang, union_all, union_intervally,
    Builder,
};
pub use determiner::{
    good_coloring, left_determiner, right_determiner, verify_determiner, DeterminerReport, DeterminerSide, GoodColoring,
};
pub use family::{
    canonical_h_coloring, canonical_h_coloring_with, family_fj, family_fst, family_levels, family_member_witness,
    CanonicalVariant, FamilyEnumeration,
};
pub use forest::{build_forest_ramsey, build_pseudoforest_ramsey_monotone_p3, ForestBuildOptions};
pub use infinite::{f_n, gamma_n, FnConstruction, GammaConstruction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("no construction applies: {0}")]
    NotApplicable(String),
    #[error(transparent)]
    RamseyNumber(#[from] RamseyNumberError),
    #[error(transparent)]
    Arrow(#[from] ArrowError),
    #[error("graph contains a member of the family at level {level} (leftmost vertex {vertex})")]
    ContainsFamilyMember {
        level: usize,
        vertex: usize,
        embedding: Vec<usize>,
    },
    #[error("constructed coloring fails verification: {0}")]
    VerificationFailed(String),
}

pub(crate) fn invalid(msg: impl Into<String>) -> ConstructError {
    ConstructError::InvalidParameters(msg.into())
}
