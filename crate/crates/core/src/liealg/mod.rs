//! Explicit linear algebra in `sl3` and its B-subrepresentations.
//!
//! The Borel subalgebra `b` is spanned by `fa = E23`, `fb = E12`, `fr = E13`
//! (weights `-alpha`, `-beta`, `-rho`) and the torus elements `ta`, `tb`
//! dual to the simple lowering operators. The operators `e_{-kappa}` act by
//! `ad f_kappa`, so `[e_{-alpha}, e_{-beta}] = -e_{-rho}`.

mod checks;
mod rep;

pub use checks::{
    cn_ideal_reduction, demazure_checks, displayed_identities, identity_suite, p_extend_check, p_extend_check_for,
    span_check, verify_identities, w1_weights, w2_weights, Extension, IdentityTerm, Parabolic, RootElem,
    TensorIdentity,
};
pub use rep::{build_based_rep, torus_basis, BasedRep, LoweringOp, MAX_DIM};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("the torus basis t_alpha, t_beta needs 3 invertible; characteristic is {characteristic}")]
    NoTorusBasis { characteristic: u64 },
    #[error("{op} maps {from} to {to}, which has the wrong weight")]
    Grading { op: &'static str, from: String, to: String },
    #[error("no basis vector labelled '{0}'")]
    UnknownLabel(String),
    #[error("operation needs a {0}")]
    Shape(&'static str),
    #[error("span is not stable under {0}")]
    NotInvariant(&'static str),
    #[error("vector is not a weight vector")]
    NotHomogeneous,
    #[error("vector is not in the subspace")]
    NotInSubspace,
    #[error("representation of dimension {0} is too large")]
    TooLarge(usize),
}
