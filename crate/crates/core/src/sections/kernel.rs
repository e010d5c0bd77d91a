use serde::Serialize;

use super::constraints::{assemble_points, ConstraintSystem};
use super::field::SymField;
use super::SectionError;
use crate::linalg::{kernel, rank_mod_p, MERSENNE_61};
use crate::projective::AffinePoint;
use crate::rat::Rat;

/// The two canonical sections spanning the kernel of a five-point system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SectionBasis {
    #[serde(rename = "H")]
    pub h: SymField,
    #[serde(rename = "G")]
    pub g: SymField,
    #[serde(skip)]
    pub points: Vec<AffinePoint>,
}

impl SectionBasis {
    /// `e2·H − e1·G`, the field cutting out the pencil member of direction `e`.
    pub fn pencil_member(&self, e: &(Rat, Rat)) -> SymField {
        self.h.combine(&e.1, &self.g, &-e.0.clone())
    }
}

/// Canonical kernel basis of the system, as slot vectors.
pub fn kernel_vectors(sys: &ConstraintSystem) -> Vec<Vec<Rat>> {
    kernel(&sys.matrix())
}

pub fn kernel_dimension(sys: &ConstraintSystem) -> usize {
    kernel_vectors(sys).len()
}

/// Exact rank and the rank over the field with 2^61 − 1 elements.
pub fn rank_cross_check(sys: &ConstraintSystem) -> (usize, Option<usize>) {
    let m = sys.matrix();
    (m.rank(), rank_mod_p(&m, MERSENNE_61))
}

/// The two sections of a full system, each re-checked against every row.
pub fn kernel_basis(sys: &ConstraintSystem) -> Result<SectionBasis, SectionError> {
    let vecs = kernel_vectors(sys);
    if vecs.len() != 2 {
        return Err(SectionError::KernelDimension(vecs.len()));
    }
    let h = SymField::from_slots(&vecs[0]);
    let g = SymField::from_slots(&vecs[1]);
    for (name, fld) in [("H", &h), ("G", &g)] {
        if let Some((origin, value)) = sys.violations(fld).into_iter().next() {
            return Err(SectionError::Verification(format!("{name} fails row {origin} with value {value}")));
        }
    }
    Ok(SectionBasis {
        h,
        g,
        points: sys.points.clone(),
    })
}

/// Kernel dimension of the plane forms plus the forms of the given points.
pub fn section_space_dimension(points: &[AffinePoint]) -> Result<usize, SectionError> {
    Ok(kernel_dimension(&assemble_points(points)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat};
    use crate::sections::constraints::blowup_point_constraints;
    use crate::sections::transport::chart_transport_check;

    fn std_points(a: Rat, b: Rat) -> Vec<AffinePoint> {
        vec![(int(0), int(0)), (int(1), int(0)), (int(0), int(1)), (int(1), int(-1)), (a, b)]
    }

    #[test]
    fn plane_dimension() {
        assert_eq!(kernel_dimension(&ConstraintSystem::plane_only()), 27);
        assert_eq!(section_space_dimension(&[]).unwrap(), 27);
    }

    #[test]
    fn five_point_basis() {
        let sys = assemble_points(&std_points(rat(-1, 5), rat(9, 5))).unwrap();
        let basis = kernel_basis(&sys).unwrap();
        assert!(chart_transport_check(&basis.h) && chart_transport_check(&basis.g));
        let (exact, modp) = rank_cross_check(&sys);
        assert_eq!(exact, 43);
        assert_eq!(modp, Some(43));
        // point forms evaluated directly agree with the slot expansion
        let rows = blowup_point_constraints(&(int(2), int(3)));
        let fld = SymField::from_seed_values((0..45).map(|k| (k * 7) % 11 - 5));
        let pt = [int(2), int(3)];
        let d = |p: &crate::poly::MPoly, k| p.derivative_at(k).eval_at(&pt);
        let expect = [
            fld.f().eval_at(&pt),
            fld.g().eval_at(&pt),
            fld.h().eval_at(&pt),
            d(fld.g(), 0),
            d(fld.f(), 1),
            d(fld.g(), 1) - d(fld.h(), 0),
            d(fld.f(), 0) - d(fld.h(), 1),
        ];
        for (r, e) in rows.iter().zip(expect) {
            assert_eq!(r.eval(&fld), e);
        }
    }

    #[test]
    fn collinear_points_rejected() {
        // (0,0), (1,0), (2,0) lie on y = 0
        let bad = std_points(int(2), int(0));
        assert!(assemble_points(&bad).is_err());
    }
}
