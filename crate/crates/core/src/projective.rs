//! Points and lines of the projective plane with rational coordinates.

use num_traits::Zero;
use thiserror::Error;

use crate::rat::Rat;

/// Homogeneous coordinates `(x0 : x1 : x2)`.
pub type ProjPoint = [Rat; 3];

/// The affine chart `x0 ≠ 0` has coordinates `(x, y) = (x1/x0, x2/x0)`.
pub type AffinePoint = (Rat, Rat);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("point {0} has all coordinates zero")]
    ZeroPoint(usize),
    #[error("points not distinct: p{} = p{}", .0 + 1, .1 + 1)]
    NotDistinct(usize, usize),
    #[error("general position violated: p{}, p{}, p{} are collinear", .0 + 1, .1 + 1, .2 + 1)]
    Collinear(usize, usize, usize),
}

pub fn det3(p: &ProjPoint, q: &ProjPoint, r: &ProjPoint) -> Rat {
    &p[0] * (&q[1] * &r[2] - &q[2] * &r[1]) - &p[1] * (&q[0] * &r[2] - &q[2] * &r[0])
        + &p[2] * (&q[0] * &r[1] - &q[1] * &r[0])
}

pub fn cross(p: &ProjPoint, q: &ProjPoint) -> ProjPoint {
    [
        &p[1] * &q[2] - &p[2] * &q[1],
        &p[2] * &q[0] - &p[0] * &q[2],
        &p[0] * &q[1] - &p[1] * &q[0],
    ]
}

pub fn is_zero_point(p: &ProjPoint) -> bool {
    p.iter().all(Zero::is_zero)
}

/// Equality as projective points.
pub fn same_point(p: &ProjPoint, q: &ProjPoint) -> bool {
    is_zero_point(&cross(p, q))
}

/// Line through two points, as a coefficient triple.
pub fn line_through(p: &ProjPoint, q: &ProjPoint) -> ProjPoint {
    cross(p, q)
}

/// Intersection point of two lines.
pub fn meet(l: &ProjPoint, m: &ProjPoint) -> ProjPoint {
    cross(l, m)
}

pub fn from_affine((x, y): &AffinePoint) -> ProjPoint {
    [Rat::from_integer(1.into()), x.clone(), y.clone()]
}

pub fn to_affine(p: &ProjPoint) -> Option<AffinePoint> {
    if p[0].is_zero() {
        None
    } else {
        Some((&p[1] / &p[0], &p[2] / &p[0]))
    }
}

/// Scales so that the first nonzero coordinate is one.
pub fn normalized(p: &ProjPoint) -> ProjPoint {
    match p.iter().find(|c| !c.is_zero()) {
        Some(c) => {
            let c = c.clone();
            [&p[0] / &c, &p[1] / &c, &p[2] / &c]
        }
        None => p.clone(),
    }
}

/// Distinctness and no three collinear.
pub fn check_general_position(points: &[ProjPoint]) -> Result<(), GeometryError> {
    for (i, p) in points.iter().enumerate() {
        if is_zero_point(p) {
            return Err(GeometryError::ZeroPoint(i));
        }
    }
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if same_point(&points[i], &points[j]) {
                return Err(GeometryError::NotDistinct(i, j));
            }
        }
    }
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            for k in j + 1..points.len() {
                if det3(&points[i], &points[j], &points[k]).is_zero() {
                    return Err(GeometryError::Collinear(i, j, k));
                }
            }
        }
    }
    Ok(())
}

/// Which standard affine chart a point is read in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Chart {
    /// `x0 ≠ 0`, coordinates `(x1/x0, x2/x0)`.
    U0,
    /// `x1 ≠ 0`, coordinates `(x0/x1, x2/x1)`.
    U1,
    /// `x2 ≠ 0`, coordinates `(x0/x2, x1/x2)`.
    U2,
}

/// A point read in one of the three standard charts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartPoint {
    pub chart: Chart,
    pub coords: AffinePoint,
}

impl ChartPoint {
    pub fn affine(x: Rat, y: Rat) -> Self {
        ChartPoint {
            chart: Chart::U0,
            coords: (x, y),
        }
    }

    /// Picks `U0` when possible, then `U2`, then `U1`.
    pub fn from_projective(p: &ProjPoint) -> Option<Self> {
        if !p[0].is_zero() {
            Some(ChartPoint {
                chart: Chart::U0,
                coords: (&p[1] / &p[0], &p[2] / &p[0]),
            })
        } else if !p[2].is_zero() {
            Some(ChartPoint {
                chart: Chart::U2,
                coords: (&p[0] / &p[2], &p[1] / &p[2]),
            })
        } else if !p[1].is_zero() {
            Some(ChartPoint {
                chart: Chart::U1,
                coords: (&p[0] / &p[1], &p[2] / &p[1]),
            })
        } else {
            None
        }
    }

    pub fn to_projective(&self) -> ProjPoint {
        let one = Rat::from_integer(1.into());
        let (a, b) = self.coords.clone();
        match self.chart {
            Chart::U0 => [one, a, b],
            Chart::U1 => [a, one, b],
            Chart::U2 => [a, b, one],
        }
    }
}
