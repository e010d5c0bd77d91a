use num_traits::{One, Zero};

use super::PencilError;
use crate::linalg::{mpoly_determinant, Matrix};
use crate::poly::{MPoly, UPoly, VarTable};
use crate::projective::ProjPoint;
use crate::rat::{rat_nth_root, Rat};

/// Pair of symmetric 5×5 matrices spanning a pencil of quadrics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricPencil {
    pub q1: Matrix,
    pub q2: Matrix,
}

/// A parameter `θ` where `θ·Q1 − Q2` is singular, with the rank there.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SingularMember {
    #[serde(with = "crate::rat::serde_rat")]
    pub theta: Rat,
    pub rank: usize,
}

impl QuadricPencil {
    pub fn new(q1: Matrix, q2: Matrix) -> Result<Self, PencilError> {
        for q in [&q1, &q2] {
            if q.rows() != 5 || q.cols() != 5 || !q.is_symmetric() {
                return Err(PencilError::NotSymmetric5);
            }
        }
        Ok(QuadricPencil { q1, q2 })
    }

    /// `det(t·Q1 − Q2)`, without normalization.
    pub fn raw_characteristic(&self) -> UPoly {
        let t = VarTable::of(&["t"]);
        let tv = MPoly::var_at(&t, 0);
        let entries: Vec<Vec<MPoly>> = (0..5)
            .map(|i| {
                (0..5)
                    .map(|j| &tv.scale(&self.q1[(i, j)]) - &MPoly::constant(&t, self.q2[(i, j)].clone()))
                    .collect()
            })
            .collect();
        UPoly::from_mpoly(&mpoly_determinant(&entries), 0).expect("univariate in t")
    }

    /// `det(t·Q1 − Q2) / det Q1`, the characteristic polynomial of the pencil
    /// after normalizing `det Q1` to one. Fails when `Q1` is singular or the
    /// roots are not simple.
    pub fn characteristic_polynomial(&self) -> Result<UPoly, PencilError> {
        let d = self.q1.determinant();
        if d.is_zero() {
            return Err(PencilError::SingularQ1);
        }
        let p = self.raw_characteristic().scale(&d.recip());
        let g = p.gcd(&p.derivative());
        if g.degree() != Some(0) {
            return Err(PencilError::NotGeneric { polynomial: p.to_string() });
        }
        Ok(p)
    }

    /// The pencil rescaled so that `det Q1 = 1`, when `det Q1` has a rational
    /// fifth root.
    pub fn det_normalized(&self) -> Option<QuadricPencil> {
        let d = self.q1.determinant();
        let r = rat_nth_root(&d, 5)?;
        if r.is_zero() {
            return None;
        }
        let s = r.recip();
        Some(QuadricPencil {
            q1: self.q1.scale(&s),
            q2: self.q2.scale(&s),
        })
    }

    /// The congruent pencil `(Sᵀ Q1 S, Sᵀ Q2 S)`.
    pub fn congruent(&self, s: &Matrix) -> QuadricPencil {
        let st = s.transpose();
        QuadricPencil {
            q1: st.mul(&self.q1).mul(s),
            q2: st.mul(&self.q2).mul(s),
        }
    }
}

/// Simple roots of the characteristic polynomial, each checked to give a
/// singular member of corank one.
pub fn singular_members(pencil: &QuadricPencil) -> Result<Vec<SingularMember>, PencilError> {
    let p = pencil.characteristic_polynomial()?;
    let roots = p.rational_roots();
    if roots.len() < 5 {
        let mut rest = p.clone();
        for r in &roots {
            rest = rest.div_rem(&UPoly::linear_root(r)).0;
        }
        let mut factors: Vec<String> = roots.iter().map(|r| UPoly::linear_root(r).to_string()).collect();
        factors.push(rest.monic().to_string());
        return Err(PencilError::IrrationalRoots { factors });
    }
    roots
        .into_iter()
        .map(|theta| {
            let m = pencil.q1.scale(&theta).sub(&pencil.q2);
            if !m.determinant().is_zero() {
                return Err(PencilError::Verification(format!("det({theta}·Q1 − Q2) ≠ 0")));
            }
            Ok(SingularMember { rank: m.rank(), theta })
        })
        .collect()
}

fn check_distinct(theta: &[Rat]) -> Result<(), PencilError> {
    if theta.len() != 5 {
        return Err(PencilError::ThetaCount(theta.len()));
    }
    for i in 0..theta.len() {
        for j in i + 1..theta.len() {
            if theta[i] == theta[j] {
                return Err(PencilError::RepeatedTheta(theta[i].to_string()));
            }
        }
    }
    Ok(())
}

/// `P(t) = Π (t − θ_i)`.
pub fn theta_polynomial(theta: &[Rat]) -> UPoly {
    theta
        .iter()
        .fold(UPoly::constant(Rat::one()), |acc, th| acc.mul(&UPoly::linear_root(th)))
}

/// The diagonal pair `Σ y_i²/P'(θ_i)` and `Σ θ_i y_i²/P'(θ_i)`.
pub fn standard_dp4_quadrics(theta: &[Rat]) -> Result<QuadricPencil, PencilError> {
    check_distinct(theta)?;
    let dp = theta_polynomial(theta).derivative();
    let w: Vec<Rat> = theta.iter().map(|t| dp.eval(t).recip()).collect();
    let wt: Vec<Rat> = w.iter().zip(theta).map(|(a, t)| a * t).collect();
    QuadricPencil::new(Matrix::diagonal(&w), Matrix::diagonal(&wt))
}

/// Images `(1 : θ : θ²)` on the conic.
pub fn veronese_points(theta: &[Rat]) -> Vec<ProjPoint> {
    theta
        .iter()
        .map(|t| [Rat::one(), t.clone(), t * t])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat};

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn characteristic_examples() {
        let p = QuadricPencil::new(Matrix::identity(5), Matrix::diagonal(&ints(&[0, 1, -1, 2, -2]))).unwrap();
        assert_eq!(p.characteristic_polynomial().unwrap(), UPoly::from_ints(&[0, 4, 0, -5, 0, 1]));
        let id = QuadricPencil::new(Matrix::identity(5), Matrix::identity(5)).unwrap();
        assert!(matches!(id.characteristic_polynomial(), Err(PencilError::NotGeneric { .. })));
    }

    #[test]
    fn standard_quadrics() {
        let th = ints(&[0, 1, -1, 2, -2]);
        let q = standard_dp4_quadrics(&th).unwrap();
        let expect = [rat(1, 4), rat(-1, 6), rat(-1, 6), rat(1, 24), rat(1, 24)];
        for (k, e) in expect.iter().enumerate() {
            assert_eq!(&q.q1[(k, k)], e);
        }
        let roots: Vec<Rat> = singular_members(&q).unwrap().into_iter().map(|m| m.theta).collect();
        assert_eq!(roots, ints(&[-2, -1, 0, 1, 2]));
        assert!(matches!(
            standard_dp4_quadrics(&ints(&[0, 1, -1, 2, 2])),
            Err(PencilError::RepeatedTheta(_))
        ));
    }

    #[test]
    fn irrational_roots_rejected() {
        // Q1 = antidiagonal J, Q2 = J·C with C the companion matrix of t^5 − 2
        let mut j = Matrix::zeros(5, 5);
        let mut jc = Matrix::zeros(5, 5);
        for i in 0..5 {
            j[(i, 4 - i)] = int(1);
        }
        for i in 0..4 {
            jc[(i, 3 - i)] = int(1);
        }
        jc[(4, 4)] = int(2);
        let p = QuadricPencil::new(j, jc).unwrap();
        assert_eq!(p.characteristic_polynomial().unwrap(), UPoly::from_ints(&[-2, 0, 0, 0, 0, 1]));
        match singular_members(&p) {
            Err(PencilError::IrrationalRoots { factors }) => assert_eq!(factors, ["t^5 - 2"]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn veronese() {
        assert_eq!(veronese_points(&[int(2)])[0], [int(1), int(2), int(4)]);
        assert_eq!(veronese_points(&[int(0)])[0], [int(1), int(0), int(0)]);
    }
}
