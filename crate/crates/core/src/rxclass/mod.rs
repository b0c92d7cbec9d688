//! R(X)-classification of submersion germs on the model surface: tangent
//! spaces, complete transversals, determinacy, codimension, versality,
//! triviality and the classifier for the codimension ≤ 3 orbits.

mod classify;
mod tangent;

pub use classify::{
    classify, classify_with, radical_scaling_maps, rational_root, reduce_linear_part, replay_rational, verify_trace,
    ClassificationReport, ClassifyOptions, LinearClass, OrbitLabel, Sign, TraceStep,
};
pub use tangent::{
    codimension, codimension_with, complete_transversal, complete_transversal_with, determinacy_degree,
    is_k_determined, is_k_determined_with, tangent_space, tangent_space_with, triviality_check, versal_check,
    versal_monomials, Codimension, Determinacy, DeterminacyCriterion, Generator, SubmersionGerm, TangentSpaceModel,
    NILPOTENT_BARE,
};

use crate::modelsurface::ModelError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassError {
    #[error("germ must be in 4 variables, got {0}")]
    WrongVariables(usize),
    #[error("germ has a nonzero constant term")]
    NonzeroConstant,
    #[error("linear part is zero: not a submersion")]
    NotSubmersion,
    #[error("truncation degree {0} is too low")]
    TruncationTooLow(u32),
    #[error("undecided within truncation: {0}")]
    Undecided(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}
