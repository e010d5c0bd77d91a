use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use super::field::{Slot, SymField, NUM_SLOTS};
use super::SectionError;
use crate::poly::{MPoly, VarTable};
use crate::projective::{check_general_position, from_affine, AffinePoint};
use crate::rat::{int, Rat};

/// Linear form in the 45 coefficient slots.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearFunctional {
    coeffs: Vec<Rat>,
}

impl LinearFunctional {
    pub fn from_dense(coeffs: Vec<Rat>) -> Self {
        assert_eq!(coeffs.len(), NUM_SLOTS, "45 coefficients");
        LinearFunctional { coeffs }
    }

    pub fn from_terms(terms: &[(Slot, i64)]) -> Self {
        let mut coeffs = vec![Rat::zero(); NUM_SLOTS];
        for &(s, c) in terms {
            coeffs[s.index()] += int(c);
        }
        LinearFunctional { coeffs }
    }

    pub fn dense(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Nonzero entries in slot order.
    pub fn entries(&self) -> impl Iterator<Item = (Slot, &Rat)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (Slot::from_index(k), c))
    }

    pub fn eval(&self, field: &SymField) -> Rat {
        self.eval_slots(&field.slots())
    }

    pub fn eval_slots(&self, values: &[Rat]) -> Rat {
        self.coeffs.iter().zip(values).map(|(a, b)| a * b).sum()
    }
}

impl fmt::Display for LinearFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (s, c) in self.entries() {
            let neg = c < &Rat::zero();
            let a = if neg { -c } else { c.clone() };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if a != int(1) {
                write!(f, "{}", crate::rat::format_rat_short(&a))?;
            }
            write!(f, "{s}")?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// The eighteen plane forms whose vanishing makes a degree-4 field regular
/// on the whole projective plane, in their customary order.
pub fn p2_constraints() -> Vec<LinearFunctional> {
    use Slot as S;
    let forms: [&[(Slot, i64)]; 18] = [
        &[(S::h(0, 4), 1)],
        &[(S::h(1, 3), 1), (S::g(0, 4), -2)],
        &[(S::h(2, 2), 1), (S::g(1, 3), -2)],
        &[(S::h(3, 1), 1), (S::g(2, 2), -2)],
        &[(S::h(4, 0), 1), (S::g(3, 1), -2)],
        &[(S::g(4, 0), 1)],
        &[(S::f(0, 3), 1)],
        &[(S::f(1, 2), 1), (S::h(0, 3), -1)],
        &[(S::f(2, 1), 1), (S::g(0, 3), 1), (S::h(1, 2), -1)],
        &[(S::f(3, 0), 1), (S::g(1, 2), 1), (S::h(2, 1), -1)],
        &[(S::g(2, 1), 1), (S::h(3, 0), -1)],
        &[(S::g(3, 0), 1)],
        &[(S::f(0, 4), 1)],
        &[(S::f(1, 3), 1)],
        &[(S::f(2, 2), 1), (S::g(0, 4), -1)],
        &[(S::f(3, 1), 1), (S::g(1, 3), -1)],
        &[(S::f(4, 0), 1), (S::g(2, 2), -1)],
        &[(S::g(3, 1), 1)],
    ];
    forms.iter().map(|t| LinearFunctional::from_terms(t)).collect()
}

/// The seven local conditions at a blown-up point, in order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PointForm {
    #[serde(rename = "f")]
    F,
    #[serde(rename = "g")]
    G,
    #[serde(rename = "h")]
    H,
    #[serde(rename = "g_x")]
    Gx,
    #[serde(rename = "f_y")]
    Fy,
    #[serde(rename = "g_y-h_x")]
    GyMinusHx,
    #[serde(rename = "f_x-h_y")]
    FxMinusHy,
}

impl PointForm {
    pub const ALL: [PointForm; 7] = [
        PointForm::F,
        PointForm::G,
        PointForm::H,
        PointForm::Gx,
        PointForm::Fy,
        PointForm::GyMinusHx,
        PointForm::FxMinusHy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PointForm::F => "f",
            PointForm::G => "g",
            PointForm::H => "h",
            PointForm::Gx => "g_x",
            PointForm::Fy => "f_y",
            PointForm::GyMinusHx => "g_y-h_x",
            PointForm::FxMinusHy => "f_x-h_y",
        }
    }
}

/// The seven point forms at `(a, b)` with entries in the ring of `a` and `b`.
///
/// Row `r`, column `k` is the coefficient of slot `k` in form `r`. Passing
/// constants gives the numeric rows; passing variables gives the rows over a
/// polynomial ring.
pub fn point_rows_over(a: &MPoly, b: &MPoly) -> Vec<Vec<MPoly>> {
    let vars = a.vars().clone();
    let zero = MPoly::zero(&vars);
    let max = 4;
    let apow: Vec<MPoly> = (0..=max).map(|e| a.pow(e)).collect();
    let bpow: Vec<MPoly> = (0..=max).map(|e| b.pow(e)).collect();
    // value of x^i y^j, its x-derivative and y-derivative at (a, b)
    let mono = |i: u32, j: u32| &apow[i as usize] * &bpow[j as usize];
    let dx = |i: u32, j: u32| {
        if i == 0 {
            zero.clone()
        } else {
            (&apow[i as usize - 1] * &bpow[j as usize]).scale(&int(i as i64))
        }
    };
    let dy = |i: u32, j: u32| {
        if j == 0 {
            zero.clone()
        } else {
            (&apow[i as usize] * &bpow[j as usize - 1]).scale(&int(j as i64))
        }
    };
    PointForm::ALL
        .iter()
        .map(|form| {
            Slot::all()
                .map(|s| {
                    use super::field::Component::*;
                    match (form, s.comp) {
                        (PointForm::F, F) | (PointForm::G, G) | (PointForm::H, H) => mono(s.i, s.j),
                        (PointForm::Gx, G) => dx(s.i, s.j),
                        (PointForm::Fy, F) => dy(s.i, s.j),
                        (PointForm::GyMinusHx, G) => dy(s.i, s.j),
                        (PointForm::GyMinusHx, H) => -dx(s.i, s.j),
                        (PointForm::FxMinusHy, F) => dx(s.i, s.j),
                        (PointForm::FxMinusHy, H) => -dy(s.i, s.j),
                        _ => zero.clone(),
                    }
                })
                .collect()
        })
        .collect()
}

/// The seven forms of a blown-up point `(a, b)`.
pub fn blowup_point_constraints(p: &AffinePoint) -> Vec<LinearFunctional> {
    let empty = VarTable::new::<&str>(&[]).expect("empty table");
    let a = MPoly::constant(&empty, p.0.clone());
    let b = MPoly::constant(&empty, p.1.clone());
    point_rows_over(&a, &b)
        .into_iter()
        .map(|row| {
            LinearFunctional::from_dense(
                row.into_iter()
                    .map(|c| c.constant_value().expect("constant entry"))
                    .collect(),
            )
        })
        .collect()
}

/// Where a row of a constraint system comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowOrigin {
    /// Plane form number `index` (from 1).
    Plane { index: usize },
    /// Form `form` at blown-up point number `point` (from 1).
    Point { point: usize, form: PointForm },
}

impl fmt::Display for RowOrigin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowOrigin::Plane { index } => write!(f, "plane[{index}]"),
            RowOrigin::Point { point, form } => write!(f, "p{point}:{}", form.name()),
        }
    }
}

impl Serialize for RowOrigin {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug)]
pub struct ConstraintSystem {
    pub rows: Vec<LinearFunctional>,
    pub origins: Vec<RowOrigin>,
    pub points: Vec<AffinePoint>,
}

impl ConstraintSystem {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn plane_only() -> Self {
        let rows = p2_constraints();
        let origins = (1..=rows.len()).map(|index| RowOrigin::Plane { index }).collect();
        ConstraintSystem {
            rows,
            origins,
            points: Vec::new(),
        }
    }

    pub fn matrix(&self) -> crate::linalg::Matrix {
        crate::linalg::Matrix::from_rows(self.rows.iter().map(|r| r.dense().to_vec()).collect())
    }

    /// Rows that do not vanish on `field`, with their values.
    pub fn violations(&self, field: &SymField) -> Vec<(RowOrigin, Rat)> {
        let slots = field.slots();
        self.rows
            .iter()
            .zip(&self.origins)
            .filter_map(|(r, o)| {
                let v = r.eval_slots(&slots);
                (!v.is_zero()).then_some((*o, v))
            })
            .collect()
    }

    pub fn annihilates(&self, field: &SymField) -> bool {
        self.violations(field).is_empty()
    }
}

/// Plane forms followed by the seven forms of each point, after checking the
/// points are distinct with no three collinear.
pub fn assemble_points(points: &[AffinePoint]) -> Result<ConstraintSystem, SectionError> {
    let proj: Vec<_> = points.iter().map(from_affine).collect();
    check_general_position(&proj)?;
    let mut sys = ConstraintSystem::plane_only();
    for (k, p) in points.iter().enumerate() {
        for (row, form) in blowup_point_constraints(p).into_iter().zip(PointForm::ALL) {
            sys.rows.push(row);
            sys.origins.push(RowOrigin::Point { point: k + 1, form });
        }
    }
    sys.points = points.to_vec();
    Ok(sys)
}

/// The full system of a normalized five-point configuration.
pub fn assemble_system(config: &crate::pencil::PointConfig) -> Result<ConstraintSystem, SectionError> {
    assemble_points(&config.affine_points())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::sections::field::xy_vars;

    fn field(f: &str, g: &str, h: &str) -> SymField {
        let p = |s: &str| parse_poly(s, xy_vars()).unwrap();
        SymField::new(p(f), p(g), p(h)).unwrap()
    }

    #[test]
    fn plane_form_examples() {
        let forms = p2_constraints();
        assert_eq!(forms.len(), 18);
        assert_eq!(forms[0].eval(&field("0", "0", "y^4")), int(1));
        assert!(forms.iter().all(|r| r.eval(&field("1", "0", "0")).is_zero()));
        assert_eq!(forms[14].to_string(), "f_{2,2} - g_{0,4}");
        assert!(forms[14].eval(&field("x^2 y^2", "y^4", "0")).is_zero());
        assert_eq!(forms[1].to_string(), "-2g_{0,4} + h_{1,3}");
    }

    #[test]
    fn origin_forms() {
        let rows = blowup_point_constraints(&(int(0), int(0)));
        let names: Vec<String> = rows.iter().map(|r| r.to_string()).collect();
        assert_eq!(
            names,
            [
                "f_{0,0}",
                "g_{0,0}",
                "h_{0,0}",
                "g_{1,0}",
                "f_{0,1}",
                "g_{0,1} - h_{1,0}",
                "f_{1,0} - h_{0,1}"
            ]
        );
        let at_one = blowup_point_constraints(&(int(1), int(0)));
        let got: Vec<(Slot, Rat)> = at_one[0].entries().map(|(s, c)| (s, c.clone())).collect();
        let mut want: Vec<(Slot, Rat)> = (0..=4).map(|i| (Slot::f(i, 0), int(1))).collect();
        want.sort_by_key(|(s, _)| s.index());
        assert_eq!(got, want);
    }

    #[test]
    fn assemble_counts_and_errors() {
        let pts = |v: &[(i64, i64)]| v.iter().map(|&(a, b)| (int(a), int(b))).collect::<Vec<_>>();
        let sys = assemble_points(&pts(&[(0, 0), (1, 0), (0, 1), (1, -1), (2, 3)])).unwrap();
        assert_eq!(sys.len(), 53);
        assert_eq!(sys.origins[52].to_string(), "p5:f_x-h_y");
        let dup = assemble_points(&pts(&[(0, 0), (1, 0), (0, 1), (1, -1), (0, 0)])).unwrap_err();
        assert!(dup.to_string().contains("points not distinct"));
        let col = assemble_points(&pts(&[(0, 0), (1, 0), (2, 0), (1, -1), (2, 3)])).unwrap_err();
        assert!(col.to_string().contains("general position violated"));
    }
}
