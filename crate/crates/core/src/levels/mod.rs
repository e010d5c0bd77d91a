//! Level surfaces `H = e1, G = e2` and pencil members `e2·H − e1·G = 0`,
//! probed one cotangent fiber at a time.

mod branch;
mod directions;
mod surd;

pub use branch::{
    branch_quadrics, chart_discriminant, chord_points, ebi_cubic, line_tangency_check, random_line_control,
    restrict_to_line, span_contains, span_equal, symbolic_discriminant, vanishing_order, BranchQuadrics, CubicReport,
    LineTangency, TangencyControl,
};
pub use directions::{
    cross_ratio, dictionary, fit_mobius, node_points, normalize_direction, proportionality, reducibility_test, special_directions,
    DictionaryMatch, DictionaryReport, Node, Reducibility, SpecialDirections,
};
pub use surd::Surd;

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::pencil::PencilError;
use crate::poly::PolyError;
use crate::projective::{Chart, ChartPoint};
use crate::rat::{format_rat, serde_rat, Rat};
use crate::sections::{restrict_at, SectionBasis, SectionError};

#[derive(Debug, Error)]
pub enum LevelsError {
    #[error("direction e must not be (0, 0)")]
    ZeroDirection,
    #[error("section has a pole at the chart point")]
    NotInChart,
    #[error("base point is a blown-up point")]
    BlownUpPoint,
    #[error("unexpected deeper degeneracy: H and G vanish at node {0}")]
    DeeperDegeneracy(String),
    #[error("H and G are not proportional at node {0}")]
    NotProportional(String),
    #[error("nodes for index {0} give inconsistent directions")]
    InconsistentNodes(usize),
    #[error("special directions are not pairwise distinct")]
    RepeatedDirection,
    #[error("repeated theta value {0}")]
    RepeatedTheta(String),
    #[error("line through p{0} and p{1} is not visible in the chart")]
    LineNotVisible(usize, usize),
    #[error("index {0} out of range 1..=5")]
    BadIndex(usize),
    #[error(transparent)]
    Section(#[from] SectionError),
    #[error(transparent)]
    Pencil(#[from] PencilError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `f u² + g v² + h uv` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BinaryQuadric {
    #[serde(with = "serde_rat")]
    pub f: Rat,
    #[serde(with = "serde_rat")]
    pub g: Rat,
    #[serde(with = "serde_rat")]
    pub h: Rat,
}

impl BinaryQuadric {
    pub fn from_triple([f, g, h]: [Rat; 3]) -> Self {
        BinaryQuadric { f, g, h }
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero() && self.g.is_zero() && self.h.is_zero()
    }

    /// `h² − 4fg`.
    pub fn discriminant(&self) -> Rat {
        &self.h * &self.h - Rat::from_integer(4.into()) * &self.f * &self.g
    }

    /// `a·self + b·other`.
    pub fn combine(&self, a: &Rat, other: &BinaryQuadric, b: &Rat) -> BinaryQuadric {
        BinaryQuadric {
            f: a * &self.f + b * &other.f,
            g: a * &self.g + b * &other.g,
            h: a * &self.h + b * &other.h,
        }
    }

    /// Value at `(t, 1)` over a quadratic field.
    pub fn at_t(&self, t: &Surd) -> Surd {
        t.mul(t)
            .scale(&self.f)
            .add(&t.scale(&self.h))
            .add(&Surd::rational(self.g.clone()))
    }
}

fn check_direction(e: &(Rat, Rat)) -> Result<(), LevelsError> {
    if e.0.is_zero() && e.1.is_zero() {
        Err(LevelsError::ZeroDirection)
    } else {
        Ok(())
    }
}

/// `H(x0)` and `G(x0)` in the fiber coordinates of the chart.
pub fn restrict_pair(basis: &SectionBasis, x0: &ChartPoint) -> Result<(BinaryQuadric, BinaryQuadric), LevelsError> {
    let h = restrict_at(&basis.h, x0).ok_or(LevelsError::NotInChart)?;
    let g = restrict_at(&basis.g, x0).ok_or(LevelsError::NotInChart)?;
    Ok((BinaryQuadric::from_triple(h), BinaryQuadric::from_triple(g)))
}

/// `e2·H(x0) − e1·G(x0)`, the pencil member restricted to one fiber.
pub fn restrict_at_point(basis: &SectionBasis, e: &(Rat, Rat), x0: &ChartPoint) -> Result<BinaryQuadric, LevelsError> {
    let (h, g) = restrict_pair(basis, x0)?;
    Ok(h.combine(&e.1, &g, &-e.0.clone()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FiberStatus {
    /// Two distinct directions, each carrying a pair `±(u, v)`.
    FourPoints,
    /// One double direction carrying a pair of double points.
    TwoDouble,
    /// The pencil member vanishes on the whole fiber.
    WholeLine,
    /// Some direction is a common zero of `H(x0)` and `G(x0)`; points escape
    /// to infinity and fewer than four remain.
    OtherDegenerate,
}

/// A root `(u : v)` of the pencil member, as `(t : 1)` or `(1 : 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiberDirection {
    Finite(Surd),
    Infinite,
}

impl Serialize for FiberDirection {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            FiberDirection::Finite(t) => s.serialize_str(&format!("({t} : 1)")),
            FiberDirection::Infinite => s.serialize_str("(1 : 0)"),
        }
    }
}

/// Exact data of one direction: the points on it are `±√scale · (t, 1)`
/// (or `±√scale · (1, 0)`).
#[derive(Clone, Debug, Serialize)]
pub struct DirectionData {
    pub direction: FiberDirection,
    pub multiplicity: usize,
    /// `None` when the direction is a common zero of `H(x0)` and `G(x0)`.
    pub scale: Option<Surd>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FiberReport {
    pub chart: Chart,
    #[serde(serialize_with = "ser_pair")]
    pub base_point: (Rat, Rat),
    #[serde(serialize_with = "ser_pair")]
    pub direction_e: (Rat, Rat),
    pub status: FiberStatus,
    pub member: BinaryQuadric,
    #[serde(with = "serde_rat")]
    pub discriminant: Rat,
    pub directions: Vec<DirectionData>,
    /// Points counted with multiplicity; `None` for a whole line.
    pub finite_points: Option<usize>,
    /// Labels `d{k}+` and `d{k}-` of the two points on direction `k`.
    pub involution_pairs: Vec<[String; 2]>,
}

pub(crate) fn ser_pair<S: serde::Serializer>(p: &(Rat, Rat), s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(2))?;
    seq.serialize_element(&format_rat(&p.0))?;
    seq.serialize_element(&format_rat(&p.1))?;
    seq.end()
}

impl FiberReport {
    /// Involution pairs cover every point and none is the origin.
    pub fn involution_is_free(&self) -> bool {
        let with_points = self.directions.iter().filter(|d| d.scale.is_some()).count();
        self.involution_pairs.len() == with_points
            && self.directions.iter().all(|d| d.scale.as_ref().is_none_or(|s| !s.is_zero()))
    }
}

/// Roots of `f u² + g v² + h uv` in `P¹`, with multiplicity.
fn member_roots(q: &BinaryQuadric) -> Vec<(FiberDirection, usize)> {
    let disc = q.discriminant();
    if q.f.is_zero() {
        if q.h.is_zero() {
            return vec![(FiberDirection::Infinite, 2)];
        }
        let t = -&q.g / &q.h;
        return vec![
            (FiberDirection::Infinite, 1),
            (FiberDirection::Finite(Surd::rational(t)), 1),
        ];
    }
    let two_f = &q.f * Rat::from_integer(2.into());
    let center = -&q.h / &two_f;
    if disc.is_zero() {
        return vec![(FiberDirection::Finite(Surd::rational(center)), 2)];
    }
    let half = two_f.recip();
    [half.clone(), -half]
        .into_iter()
        .map(|b| (FiberDirection::Finite(Surd::new(center.clone(), b, disc.clone())), 1))
        .collect()
}

/// Solves `H(x0; u, v) = e1`, `G(x0; u, v) = e2` exactly.
///
/// Each root `(t : 1)` of `e2·H − e1·G` is scaled by `v² = e1 / H(t, 1)` (or
/// `e2 / G(t, 1)`), and the result is re-substituted into both equations.
pub fn fiber_count(basis: &SectionBasis, e: &(Rat, Rat), x0: &ChartPoint) -> Result<FiberReport, LevelsError> {
    check_direction(e)?;
    if x0.chart == Chart::U0 && basis.points.contains(&x0.coords) {
        return Err(LevelsError::BlownUpPoint);
    }
    let (hq, gq) = restrict_pair(basis, x0)?;
    let member = hq.combine(&e.1, &gq, &-e.0.clone());
    let base = FiberReport {
        chart: x0.chart,
        base_point: x0.coords.clone(),
        direction_e: e.clone(),
        status: FiberStatus::WholeLine,
        discriminant: member.discriminant(),
        member: member.clone(),
        directions: Vec::new(),
        finite_points: None,
        involution_pairs: Vec::new(),
    };
    if member.is_zero() {
        return Ok(base);
    }

    let mut directions = Vec::new();
    for (dir, mult) in member_roots(&member) {
        let (hv, gv) = match &dir {
            FiberDirection::Finite(t) => (hq.at_t(t), gq.at_t(t)),
            FiberDirection::Infinite => (Surd::rational(hq.f.clone()), Surd::rational(gq.f.clone())),
        };
        let scale = if let Some(r) = hv.recip() {
            Some(r.scale(&e.0))
        } else {
            gv.recip().map(|r| r.scale(&e.1))
        };
        if let Some(s) = &scale {
            assert_eq!(hv.mul(s), Surd::rational(e.0.clone()), "first equation");
            assert_eq!(gv.mul(s), Surd::rational(e.1.clone()), "second equation");
        }
        directions.push(DirectionData {
            direction: dir,
            multiplicity: mult,
            scale,
        });
    }

    let degenerate = directions.iter().any(|d| d.scale.is_none());
    let status = if degenerate {
        FiberStatus::OtherDegenerate
    } else if directions.len() == 2 {
        FiberStatus::FourPoints
    } else {
        FiberStatus::TwoDouble
    };
    let finite_points = directions
        .iter()
        .filter(|d| d.scale.is_some())
        .map(|d| 2 * d.multiplicity)
        .sum();
    let involution_pairs = directions
        .iter()
        .enumerate()
        .filter(|(_, d)| d.scale.is_some())
        .map(|(k, _)| [format!("d{k}+"), format!("d{k}-")])
        .collect();
    Ok(FiberReport {
        status,
        directions,
        finite_points: Some(finite_points),
        involution_pairs,
        ..base
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pencil::PointConfig;
    use crate::rat::{int, rat};
    use crate::sections::{assemble_system, kernel_basis};

    pub(crate) fn fixture() -> (PointConfig, SectionBasis) {
        let cfg = PointConfig::from_ab(rat(-1, 5), rat(9, 5)).unwrap();
        let basis = kernel_basis(&assemble_system(&cfg).unwrap()).unwrap();
        (cfg, basis)
    }

    #[test]
    fn restriction_is_linear_in_e() {
        let (_, basis) = fixture();
        let x0 = ChartPoint::affine(rat(3, 7), int(2));
        let (h, g) = restrict_pair(&basis, &x0).unwrap();
        assert_eq!(restrict_at_point(&basis, &(int(0), int(1)), &x0).unwrap(), h);
        let neg_g = g.combine(&int(-1), &g, &int(0));
        assert_eq!(restrict_at_point(&basis, &(int(1), int(0)), &x0).unwrap(), neg_g);
    }

    #[test]
    fn generic_fiber_has_four_points() {
        let (_, basis) = fixture();
        let r = fiber_count(&basis, &(int(2), int(-3)), &ChartPoint::affine(rat(3, 7), int(2))).unwrap();
        assert_eq!(r.status, FiberStatus::FourPoints);
        assert_eq!(r.finite_points, Some(4));
        assert!(r.involution_is_free());
        assert!(fiber_count(&basis, &(int(0), int(0)), &ChartPoint::affine(int(1), int(1))).is_err());
        assert!(matches!(
            fiber_count(&basis, &(int(1), int(0)), &ChartPoint::affine(int(0), int(0))),
            Err(LevelsError::BlownUpPoint)
        ));
    }

    #[test]
    fn member_roots_cases() {
        let q = |f, g, h| BinaryQuadric::from_triple([int(f), int(g), int(h)]);
        assert_eq!(member_roots(&q(0, 0, 1)).len(), 2);
        assert_eq!(member_roots(&q(0, 1, 0)), vec![(FiberDirection::Infinite, 2)]);
        assert_eq!(member_roots(&q(1, 1, 2)).len(), 1);
        let r = member_roots(&q(1, -2, 0));
        assert!(matches!(&r[0].0, FiberDirection::Finite(t) if !t.is_rational()));
    }
}
