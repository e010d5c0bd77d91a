//! Sparse multivariate polynomials over the rationals.
//!
//! [`MPoly`] is the carrier for every polynomial in the crate. Univariate
//! helpers live in [`univariate`], square detection in [`sqrt`], and the
//! canonical text form in [`text`].

mod monomial;
mod mpoly;
pub mod sqrt;
pub mod text;
pub mod univariate;
mod vars;

pub use monomial::Monomial;
pub use mpoly::MPoly;
pub use sqrt::{perfect_square_test, square_up_to_scalar, ScalarSquare, SquareTest};
pub use text::parse_poly;
pub use univariate::{univariate_gcd, UPoly};
pub use vars::VarTable;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("invalid variable name `{0}`")]
    BadVariableName(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),
    #[error("expected {expected} images, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("polynomials use different variable tables")]
    TableMismatch,
    #[error("image of `{0}` has degree above one")]
    NotLinear(String),
    #[error("polynomial is not univariate in `{0}`")]
    NotUnivariate(String),
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// `h0² − 4·f0·g0`, the discriminant of `f0·t² + h0·t + g0`.
pub fn binary_quadratic_discriminant(f0: &MPoly, h0: &MPoly, g0: &MPoly) -> MPoly {
    let four = MPoly::constant(f0.vars(), crate::rat::int(4));
    &(h0 * h0) - &(&four * &(f0 * g0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::int;

    #[test]
    fn discriminant_examples() {
        let v = VarTable::of(&["x"]);
        let c = |n| MPoly::constant(&v, int(n));
        assert_eq!(binary_quadratic_discriminant(&c(1), &c(0), &c(1)), c(-4));
        assert!(binary_quadratic_discriminant(&c(1), &c(2), &c(1)).is_zero());
        let x = MPoly::var(&v, "x").unwrap();
        let d = binary_quadratic_discriminant(&x, &c(0), &-&x);
        assert_eq!(d, x.pow(2).scale(&int(4)));
    }
}
