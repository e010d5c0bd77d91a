//! Moving a field from the chart `x0 ≠ 0` to the other two standard charts.
//!
//! With `s = x0/x2`, `w = x1/x2` one has `x = w/s`, `y = 1/s`,
//! `∂x = s ∂w` and `∂y = −s² ∂s − s w ∂w`, so
//!
//! ```text
//! ∂s² : Σ g_ij w^i s^(4−i−j)
//! ∂w² : Σ (f_ij w^i + g_ij w^(i+2) − h_ij w^(i+1)) s^(2−i−j)
//! ∂s∂w: Σ (2 g_ij w^(i+1) − h_ij w^i) s^(3−i−j)
//! ```
//!
//! The field extends over `x2 ≠ 0` exactly when no negative power of `s`
//! survives.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::field::{xy_vars, SymField};
use crate::poly::{MPoly, Monomial};
use crate::projective::{Chart, ChartPoint};
use crate::rat::{int, Rat};

type Laurent = BTreeMap<(i64, u32), Rat>;

fn push(acc: &mut Laurent, s: i64, w: u32, c: Rat) {
    if c.is_zero() {
        return;
    }
    let e = acc.entry((s, w)).or_insert_with(Rat::zero);
    *e += c;
}

fn to_poly(acc: Laurent) -> Option<MPoly> {
    let mut terms = Vec::new();
    for ((s, w), c) in acc {
        if c.is_zero() {
            continue;
        }
        if s < 0 {
            return None;
        }
        terms.push((Monomial::from_exponents(vec![s as u32, w]), c));
    }
    Some(MPoly::from_terms(xy_vars(), terms))
}

/// Laurent coefficients `(∂s², ∂w², ∂s∂w)` of the transported field.
fn laurent_u2(field: &SymField) -> [Laurent; 3] {
    let (mut a, mut b, mut c) = (Laurent::new(), Laurent::new(), Laurent::new());
    for (m, k) in field.f().terms() {
        let (i, j) = (m.exponents()[0], m.exponents()[1]);
        push(&mut b, 2 - (i + j) as i64, i, k.clone());
    }
    for (m, k) in field.g().terms() {
        let (i, j) = (m.exponents()[0], m.exponents()[1]);
        let d = (i + j) as i64;
        push(&mut a, 4 - d, i, k.clone());
        push(&mut b, 2 - d, i + 2, k.clone());
        push(&mut c, 3 - d, i + 1, k * int(2));
    }
    for (m, k) in field.h().terms() {
        let (i, j) = (m.exponents()[0], m.exponents()[1]);
        let d = (i + j) as i64;
        push(&mut b, 2 - d, i + 1, -k.clone());
        push(&mut c, 3 - d, i, -k.clone());
    }
    [a, b, c]
}

/// The field in the chart `x2 ≠ 0`, with `x, y` standing for `x0/x2, x1/x2`,
/// or `None` when it has a pole along `x2 = 0`.
pub fn transport_u2(field: &SymField) -> Option<SymField> {
    let [a, b, c] = laurent_u2(field);
    let (a, b, c) = (to_poly(a)?, to_poly(b)?, to_poly(c)?);
    SymField::new(a, b, c).ok()
}

/// The field in the chart `x1 ≠ 0`, with `x, y` standing for `x0/x1, x2/x1`.
pub fn transport_u1(field: &SymField) -> Option<SymField> {
    transport_u2(&field.swap_xy())
}

/// True when the field extends without poles to the chart `x2 ≠ 0`.
pub fn chart_transport_check(field: &SymField) -> bool {
    transport_u2(field).is_some()
}

/// Coefficients `(f, g, h)` of the fiber quadratic at a point, in the fiber
/// coordinates of the point's chart. `None` if the field has a pole there.
pub fn restrict_at(field: &SymField, p: &ChartPoint) -> Option<[Rat; 3]> {
    let (x, y) = &p.coords;
    match p.chart {
        Chart::U0 => Some(field.at(x, y)),
        Chart::U2 => transport_u2(field).map(|t| t.at(x, y)),
        Chart::U1 => transport_u1(field).map(|t| t.at(x, y)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn field(f: &str, g: &str, h: &str) -> SymField {
        let p = |s: &str| parse_poly(s, xy_vars()).unwrap();
        SymField::new(p(f), p(g), p(h)).unwrap()
    }

    #[test]
    fn transport_examples() {
        assert!(!chart_transport_check(&field("0", "0", "y^4")));
        assert!(chart_transport_check(&field("1", "0", "0")));
        // ∂x² becomes s² ∂w²
        let t = transport_u2(&field("1", "0", "0")).unwrap();
        assert_eq!(t, field("0", "x^2", "0"));
        // ∂y² = s⁴∂s² + 2s³w ∂s∂w + s²w² ∂w²
        let t = transport_u2(&field("0", "1", "0")).unwrap();
        assert_eq!(t, field("x^4", "x^2 y^2", "2 x^3 y"));
    }
}
