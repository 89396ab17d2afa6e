//! Ideals of matrix pairs, their verification campaigns, and the divisorial
//! multiplicity table.

mod checks;
mod ideals;
mod multiplicity;

pub use checks::{
    cross_characteristic_check, gb_hilbert, gl_special_fibre_check, hilbert_cross_check, krull_dim_checks,
    min_gen_check, mnm_membership_check, parametrization_check, relative_generators_check, span17_check, span17_data,
    Span17, EVAL_PRIME,
};
pub use ideals::{
    cnil_ideal, det, generic_matrix, group_variables, make_ideal, mat_add, mat_mul, mat_scalar, mat_scale, mat_sub,
    pair_variables, principal_minors2, trace, Ambient, Ideal, IdealCase, Mat, QValue, Tag,
};
pub use multiplicity::{multiplicity, parse_multiplicity_table, verify_multiplicities, MultiplicityRow};

use crate::polyalg::PolyError;
use crate::weights::Weight;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SteinbergError {
    #[error("case {tag} is not available in the {ambient} ambient")]
    UnsupportedAmbient { tag: Tag, ambient: Ambient },
    #[error("matrix size {0} is not supported")]
    UnsupportedSize(usize),
    #[error("{needed} must be invertible in the coefficient field")]
    CharacteristicTooSmall { needed: u64 },
    #[error("no verified multiplicity for weight {0}")]
    UnsupportedWeight(Weight),
    #[error("multiplicity table line {line}: {message}")]
    Table { line: usize, message: String },
    #[error(transparent)]
    Poly(#[from] PolyError),
}
