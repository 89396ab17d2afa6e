//! Exact verification toolkit for the cohomology of B-representations on the
//! flag variety of SL3 and for the equations of the Steinberg component of
//! the commuting-pairs parameter space.

pub mod breps;
pub mod bwb;
pub mod campaigns;
pub mod data;
pub mod field;
pub mod liealg;
pub mod linalg;
pub mod polyalg;
pub mod report;
pub mod steinberg;
pub mod weights;
