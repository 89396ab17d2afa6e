//! Multivariate polynomials, Gröbner bases, Hilbert functions and Smith
//! normal form.

mod groebner;
mod hilbert;
mod monomial;
mod poly;
mod snf;
mod text;

pub use groebner::{groebner, GroebnerBasis, IdealBasis};
pub use hilbert::{hilbert_function, krull_dim, min_gen_degrees, relative_min_gen_degrees, GradedDims};
pub use monomial::{monomials_of_degree, Monomial, MAX_VARS};
pub use poly::{Poly, PolyRing};
pub use snf::{gcd_of_minors, snf, IntMatrix};
pub use text::{format_poly, parse_int_matrix, parse_poly};

use crate::field::Rationals;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("{0} variables exceeds the limit of {MAX_VARS}")]
    TooManyVariables(usize),
    #[error("invalid variable name '{0}'")]
    BadVariableName(String),
    #[error("duplicate variable '{0}'")]
    DuplicateVariable(String),
    #[error("Gröbner bases need field coefficients, not integers")]
    IntegerCoefficients,
    #[error("degree truncation requires homogeneous generators")]
    TruncatedInhomogeneous,
    #[error("degree {degree} exceeds the truncation bound {bound}")]
    DegreeExceedsBound { degree: u32, bound: u32 },
    #[error("operation needs a complete Gröbner basis, got one truncated at degree {0}")]
    Truncated(u32),
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
}

/// Polynomials with integer coefficients, stored as rationals with integrality
/// enforced by the parser and rejected by `groebner`.
pub fn integer_ring<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Result<PolyRing<Rationals>, PolyError> {
    let mut r = PolyRing::new(Rationals, vars)?;
    r.set_integral();
    Ok(r)
}
