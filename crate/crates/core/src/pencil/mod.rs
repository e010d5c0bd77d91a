//! The pencil of quadrics, the five-point configuration and the lattice
//! combinatorics of lines and conic fibrations.

mod config;
mod lines;
mod quadrics;

pub use config::{branch_alt, branch_main, frame_transform, normalize_config, PointConfig};
pub use lines::{
    brute_force_lines, conic_fibrations, enumerate_lines, others, pairings, sums_to_two_zeta, vmrt_class_sum,
    vmrt_classes, zeta_numerology, ConicFibration, DivisorClass, Line, ZetaClass, ZetaNumerology,
};
pub use quadrics::{
    singular_members, standard_dp4_quadrics, theta_polynomial, veronese_points, QuadricPencil, SingularMember,
};

use thiserror::Error;

use crate::projective::GeometryError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PencilError {
    #[error("expected five theta values, got {0}")]
    ThetaCount(usize),
    #[error("repeated theta value {0}")]
    RepeatedTheta(String),
    #[error("expected five points, got {0}")]
    PointCount(usize),
    #[error("pencil matrices must be symmetric 5x5")]
    NotSymmetric5,
    #[error("Q1 is singular")]
    SingularQ1,
    #[error("pencil not generic: characteristic polynomial {polynomial} has a repeated root")]
    NotGeneric { polynomial: String },
    #[error("rational-root regime only: factors {factors:?}")]
    IrrationalRoots { factors: Vec<String> },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("no rational normal form: the fifth point stays on the line at infinity")]
    NoRationalNormalForm,
    #[error("verification failed: {0}")]
    Verification(String),
}
