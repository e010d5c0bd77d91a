use num_traits::{One, Zero};
use serde::Serialize;

use super::PencilError;
use crate::linalg::Matrix;
use crate::projective::{check_general_position, normalized, same_point, AffinePoint, ProjPoint};
use crate::rat::{format_rat, int, rat, Rat};

/// Five plane points together with the projective change of coordinates that
/// puts them in the normal form
/// `(1:0:0), (1:1:0), (1:0:1), (1:α:β), (1:a:b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfig {
    pub raw_points: Vec<ProjPoint>,
    /// `order[k]` is the index in `raw_points` sent to normalized slot `k`.
    pub order: [usize; 5],
    pub transform: Matrix,
    pub alpha_beta: (Rat, Rat),
    pub ab: (Rat, Rat),
}

/// The two admissible values of `(α, β)`.
pub fn branch_main() -> (Rat, Rat) {
    (int(1), int(-1))
}

pub fn branch_alt() -> (Rat, Rat) {
    (int(1), rat(-1, 2))
}

fn frame_targets(alpha_beta: &(Rat, Rat)) -> [ProjPoint; 4] {
    let (z, o) = (Rat::zero(), Rat::one());
    [
        [o.clone(), z.clone(), z.clone()],
        [o.clone(), o.clone(), z.clone()],
        [o.clone(), z, o.clone()],
        [o, alpha_beta.0.clone(), alpha_beta.1.clone()],
    ]
}

/// The matrix sending `e_1, e_2, e_3, (1,1,1)` to multiples of `p[0..4]`.
fn frame_matrix(p: [&ProjPoint; 4]) -> Option<Matrix> {
    let cols = Matrix::from_rows((0..3).map(|i| (0..3).map(|j| p[j][i].clone()).collect()).collect());
    let lambda = cols.inverse()?.mul_vec(&p[3].to_vec());
    if lambda.iter().any(Zero::is_zero) {
        return None;
    }
    let mut m = cols;
    for j in 0..3 {
        for i in 0..3 {
            m[(i, j)] = &m[(i, j)] * &lambda[j];
        }
    }
    Some(m)
}

/// Projective map taking four points in general position to four others.
/// The result is scaled so that its first nonzero entry is one.
pub fn frame_transform(src: [&ProjPoint; 4], dst: [&ProjPoint; 4]) -> Option<Matrix> {
    let a = frame_matrix(src)?;
    let b = frame_matrix(dst)?;
    let t = b.mul(&a.inverse()?);
    let lead = (0..9).map(|k| t[(k / 3, k % 3)].clone()).find(|c| !c.is_zero())?;
    Some(t.scale(&lead.recip()))
}

fn apply(t: &Matrix, p: &ProjPoint) -> ProjPoint {
    let v = t.mul_vec(&p.to_vec());
    [v[0].clone(), v[1].clone(), v[2].clone()]
}

impl PointConfig {
    /// A configuration already in normal form with `(α, β) = (1, −1)`.
    pub fn from_ab(a: Rat, b: Rat) -> Result<Self, PencilError> {
        Self::with_branch(branch_main(), a, b)
    }

    pub fn with_branch(alpha_beta: (Rat, Rat), a: Rat, b: Rat) -> Result<Self, PencilError> {
        let mut pts = frame_targets(&alpha_beta).to_vec();
        pts.push([Rat::one(), a.clone(), b.clone()]);
        check_general_position(&pts)?;
        Ok(PointConfig {
            raw_points: pts,
            order: [0, 1, 2, 3, 4],
            transform: Matrix::identity(3),
            alpha_beta,
            ab: (a, b),
        })
    }

    pub fn normalized_points(&self) -> Vec<ProjPoint> {
        let mut pts = frame_targets(&self.alpha_beta).to_vec();
        pts.push([Rat::one(), self.ab.0.clone(), self.ab.1.clone()]);
        pts
    }

    /// Normalized points in the affine chart `x0 ≠ 0`.
    pub fn affine_points(&self) -> Vec<AffinePoint> {
        self.normalized_points()
            .iter()
            .map(|p| (p[1].clone(), p[2].clone()))
            .collect()
    }

    /// Re-applies the transform to the raw points and compares with the
    /// normal form.
    pub fn verify_transform(&self) -> bool {
        let norm = self.normalized_points();
        self.order
            .iter()
            .zip(&norm)
            .all(|(&k, target)| same_point(&apply(&self.transform, &self.raw_points[k]), target))
    }
}

/// Finds coordinates putting five points in general position into normal
/// form with `(α, β) = (1, −1)`.
///
/// The first four points go to the frame; if the fifth then lands on the line
/// `x0 = 0`, the fourth and fifth are exchanged.
pub fn normalize_config(points: &[ProjPoint]) -> Result<PointConfig, PencilError> {
    if points.len() != 5 {
        return Err(PencilError::PointCount(points.len()));
    }
    check_general_position(points)?;
    let targets = frame_targets(&branch_main());
    for order in [[0, 1, 2, 3, 4], [0, 1, 2, 4, 3]] {
        let src = [&points[order[0]], &points[order[1]], &points[order[2]], &points[order[3]]];
        let t = frame_transform(src, [&targets[0], &targets[1], &targets[2], &targets[3]])
            .ok_or_else(|| PencilError::Verification("frame transform failed".into()))?;
        let p5 = apply(&t, &points[order[4]]);
        if p5[0].is_zero() {
            continue;
        }
        let p5 = normalized(&p5);
        let cfg = PointConfig {
            raw_points: points.to_vec(),
            order,
            transform: t,
            alpha_beta: branch_main(),
            ab: (p5[1].clone(), p5[2].clone()),
        };
        if !cfg.verify_transform() {
            return Err(PencilError::Verification("transform does not reproduce normal form".into()));
        }
        return Ok(cfg);
    }
    Err(PencilError::NoRationalNormalForm)
}

#[derive(Serialize)]
struct ConfigRepr {
    raw_points: Vec<Vec<String>>,
    order: [usize; 5],
    transform: Vec<Vec<String>>,
    alpha_beta: [String; 2],
    ab: [String; 2],
    normalized_points: Vec<Vec<String>>,
}

impl Serialize for PointConfig {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let pts = |v: &[ProjPoint]| -> Vec<Vec<String>> { v.iter().map(|p| p.iter().map(format_rat).collect()).collect() };
        ConfigRepr {
            raw_points: pts(&self.raw_points),
            order: self.order,
            transform: self
                .transform
                .to_rows()
                .iter()
                .map(|r| r.iter().map(format_rat).collect())
                .collect(),
            alpha_beta: [format_rat(&self.alpha_beta.0), format_rat(&self.alpha_beta.1)],
            ab: [format_rat(&self.ab.0), format_rat(&self.ab.1)],
            normalized_points: pts(&self.normalized_points()),
        }
        .serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pencil::veronese_points;

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn normalized_input_is_fixed() {
        let cfg = PointConfig::from_ab(int(2), int(3)).unwrap();
        let again = normalize_config(&cfg.normalized_points()).unwrap();
        assert_eq!(again.transform, Matrix::identity(3));
        assert_eq!(again.ab, (int(2), int(3)));
    }

    #[test]
    fn veronese_normal_form() {
        let pts = veronese_points(&ints(&[0, 1, -1, 2, -2]));
        let cfg = normalize_config(&pts).unwrap();
        assert_eq!(cfg.ab, (rat(-1, 5), rat(9, 5)));
        assert_eq!(cfg.order, [0, 1, 2, 3, 4]);
        assert!(cfg.verify_transform());
    }

    #[test]
    fn round_trip_through_random_map() {
        let cfg = PointConfig::from_ab(rat(3, 7), rat(-2, 5)).unwrap();
        let m = Matrix::from_rows(vec![ints(&[2, 1, 0]), ints(&[-1, 3, 4]), ints(&[5, 0, 1])]);
        let moved: Vec<ProjPoint> = cfg.normalized_points().iter().map(|p| apply(&m, p)).collect();
        let back = normalize_config(&moved).unwrap();
        assert_eq!(back.ab, cfg.ab);
    }

    #[test]
    fn fifth_point_at_infinity_swaps() {
        // p5 = (0:1:2) lies on x0 = 0 in the normal frame
        let mut pts = PointConfig::from_ab(int(2), int(3)).unwrap().normalized_points();
        pts[4] = [int(0), int(1), int(2)];
        let cfg = normalize_config(&pts).unwrap();
        assert_eq!(cfg.order, [0, 1, 2, 4, 3]);
        assert!(cfg.verify_transform());
    }
}
