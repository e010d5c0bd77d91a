//! Global symmetric 2-tensor fields on the plane blown up at points.
//!
//! A field is stored by its 45 coefficient slots. Regularity on the plane is
//! eighteen linear forms ([`p2_constraints`]); each blown-up point adds seven
//! more ([`blowup_point_constraints`]). The kernel of the assembled system is
//! the space of sections.

mod constraints;
mod field;
mod kernel;
mod transport;

pub use constraints::{
    assemble_points, assemble_system, blowup_point_constraints, p2_constraints, point_rows_over, ConstraintSystem,
    LinearFunctional, PointForm, RowOrigin,
};
pub use field::{chart_vars, xy_vars, Component, Slot, SymField, NUM_SLOTS};
pub use kernel::{
    kernel_basis, kernel_dimension, kernel_vectors, rank_cross_check, section_space_dimension, SectionBasis,
};
pub use transport::{chart_transport_check, restrict_at, transport_u1, transport_u2};

use thiserror::Error;

use crate::projective::GeometryError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SectionError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("invalid field: {0}")]
    Field(String),
    #[error("kernel dimension is {0}, expected 2")]
    KernelDimension(usize),
    #[error("kernel verification failed: {0}")]
    Verification(String),
}
