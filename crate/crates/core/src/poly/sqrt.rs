//! Exact square roots of multivariate polynomials.
//!
//! If `p = S²` then the leading term of `p` is the square of the leading term
//! of `S`, and each further term of `S` is read off the leading term of the
//! current remainder. The candidate is always re-squared before it is
//! accepted.

use num_traits::{One, Signed};

use super::MPoly;
use crate::rat::{int, rat_sqrt, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareTest {
    pub is_square: bool,
    /// `S` with `S² = p` and positive leading coefficient.
    pub sqrt: Option<MPoly>,
}

/// `p = scalar · sqrt²` with `sqrt` monic in the monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarSquare {
    pub scalar: Rat,
    pub sqrt: MPoly,
}

/// Square root of `p` with leading coefficient one, assuming the leading
/// coefficient of `p` has been normalized to one.
fn monic_sqrt(p: &MPoly) -> Option<MPoly> {
    let vars = p.vars().clone();
    let (lm, _) = p.leading_term()?;
    let lead = lm.half()?;
    let mut s = MPoly::from_terms(&vars, [(lead.clone(), Rat::one())]);
    let mut rem = p - &(&s * &s);
    let two = int(2);
    let mut last = lead.clone();
    while let Some((rm, rc)) = rem.leading_term() {
        let tm = rm.div(&lead)?;
        if tm >= last {
            return None;
        }
        let tc = rc / &two;
        let t = MPoly::from_terms(&vars, [(tm.clone(), tc)]);
        rem -= &(&(&s.scale(&two) + &t) * &t);
        s += &t;
        last = tm;
    }
    Some(s)
}

/// Writes `p` as `c · S²` with `S` monic, when possible.
pub fn square_up_to_scalar(p: &MPoly) -> Option<ScalarSquare> {
    if p.is_zero() {
        return None;
    }
    let c = p.leading_coefficient();
    let s = monic_sqrt(&p.scale(&c.recip()))?;
    if &(&s * &s).scale(&c) != p {
        return None;
    }
    Some(ScalarSquare { scalar: c, sqrt: s })
}

/// Decides whether `p` is the square of a polynomial with rational
/// coefficients and returns the root with positive leading coefficient.
pub fn perfect_square_test(p: &MPoly) -> SquareTest {
    if p.is_zero() {
        return SquareTest {
            is_square: true,
            sqrt: Some(p.clone()),
        };
    }
    let root = square_up_to_scalar(p).and_then(|sq| {
        let r = rat_sqrt(&sq.scalar)?;
        Some(sq.sqrt.scale(&r))
    });
    match root {
        Some(s) => {
            debug_assert!(s.leading_coefficient().is_positive());
            debug_assert!(&(&s * &s) == p);
            SquareTest {
                is_square: true,
                sqrt: Some(s),
            }
        }
        None => SquareTest {
            is_square: false,
            sqrt: None,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, VarTable};
    use crate::rat::rat;

    fn p(s: &str) -> MPoly {
        parse_poly(s, &VarTable::of(&["x", "y"])).unwrap()
    }

    #[test]
    fn squares() {
        let t = perfect_square_test(&p("x^2 + 2 x y + y^2"));
        assert!(t.is_square);
        assert_eq!(t.sqrt.unwrap(), p("x + y"));
        assert!(!perfect_square_test(&p("x^2 + y^2")).is_square);
        assert!(perfect_square_test(&p("0")).is_square);
        let neg = perfect_square_test(&p("x^2 - 2 x y + y^2"));
        assert_eq!(neg.sqrt.unwrap(), p("x - y"));
        assert!(!perfect_square_test(&p("2 x^2")).is_square);
        assert!(!perfect_square_test(&p("-1 x^2")).is_square);
    }

    #[test]
    fn scalar_squares() {
        let s = square_up_to_scalar(&p("2 x^2 + 4 x + 2")).unwrap();
        assert_eq!(s.scalar, rat(2, 1));
        assert_eq!(s.sqrt, p("x + 1"));
        assert!(square_up_to_scalar(&p("x^2 + x")).is_none());
        assert!(square_up_to_scalar(&p("x^3")).is_none());
    }
}
