//! The bracket `R = H_y G_v − H_v G_y + H_x G_u − H_u G_x`, the Hamiltonian
//! frame and the canonical pairing `ω = dx∧du + dy∧dv`.
//!
//! With the frame written as `A = (−H_u, −H_v, H_x, H_y)` and
//! `B = (G_u, G_v, −G_x, −G_y)` in the basis `∂x, ∂y, ∂u, ∂v`, one gets
//! `ω(A, B) = −R(q)`. Vanishing of one is vanishing of the other.

mod symbolic;

pub use symbolic::{symbolic_involutivity, ConsistencyCheck, SymbolicCertificate, SymbolicError};

use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::pencil::PointConfig;
use crate::poly::MPoly;
use crate::rat::{serde_rat, serde_rat_vec, Rat};
use crate::sections::{assemble_system, kernel_basis, SectionBasis, SectionError, Slot, SymField};

/// Variable order of the cotangent chart.
const X: usize = 0;
const Y: usize = 1;
const U: usize = 2;
const V: usize = 3;

/// `H_y G_v − H_v G_y + H_x G_u − H_u G_x` for polynomials on the chart.
pub fn bracket(h: &MPoly, g: &MPoly) -> MPoly {
    let d = |p: &MPoly, k| p.derivative_at(k);
    let t1 = &d(h, Y) * &d(g, V) - &d(h, V) * &d(g, Y);
    let t2 = &d(h, X) * &d(g, U) - &d(h, U) * &d(g, X);
    t1 + t2
}

/// The bracket of the fiber quadratics of two fields.
pub fn poisson_r(h: &SymField, g: &SymField) -> MPoly {
    bracket(&h.fiber_quadratic(), &g.fiber_quadratic())
}

/// Tangent vector at a chart point, components along `∂x, ∂y, ∂u, ∂v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChartVector {
    #[serde(with = "serde_rat_vec")]
    pub base: Vec<Rat>,
    #[serde(with = "serde_rat_vec")]
    pub components: Vec<Rat>,
}

impl ChartVector {
    pub fn new(base: [Rat; 4], components: [Rat; 4]) -> Self {
        ChartVector {
            base: base.to_vec(),
            components: components.to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Zero::is_zero)
    }

    /// `d_q P` applied to this vector.
    pub fn apply_differential(&self, p: &MPoly) -> Rat {
        (0..4)
            .map(|k| p.derivative_at(k).eval_at(&self.base) * &self.components[k])
            .sum()
    }
}

fn gradient(p: &MPoly, q: &[Rat; 4]) -> [Rat; 4] {
    [X, Y, U, V].map(|k| p.derivative_at(k).eval_at(q))
}

/// `A = −H_u ∂x − H_v ∂y + H_x ∂u + H_y ∂v` and
/// `B = G_u ∂x + G_v ∂y − G_x ∂u − G_y ∂v` at `q`.
pub fn hamiltonian_frame(h: &SymField, g: &SymField, q: &[Rat; 4]) -> (ChartVector, ChartVector) {
    let [hx, hy, hu, hv] = gradient(&h.fiber_quadratic(), q);
    let [gx, gy, gu, gv] = gradient(&g.fiber_quadratic(), q);
    (
        ChartVector::new(q.clone(), [-hu, -hv, hx, hy]),
        ChartVector::new(q.clone(), [gu, gv, -gx, -gy]),
    )
}

/// `ω(A, B) = A_x B_u − A_u B_x + A_y B_v − A_v B_y`.
pub fn omega_pairing(a: &ChartVector, b: &ChartVector) -> Rat {
    assert_eq!(a.base, b.base, "vectors at different points");
    let (a, b) = (&a.components, &b.components);
    &a[X] * &b[U] - &a[U] * &b[X] + &a[Y] * &b[V] - &a[V] * &b[Y]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleCheck {
    #[serde(with = "serde_rat_vec")]
    pub point: Vec<Rat>,
    #[serde(with = "serde_rat")]
    pub value: Rat,
}

/// Exact vanishing of the bracket of a section basis, with redundant
/// evaluations at sample points.
#[derive(Clone, Debug, Serialize)]
pub struct InvolutivityCertificate {
    pub basis: SectionBasis,
    #[serde(serialize_with = "serialize_poly")]
    pub r_poly: MPoly,
    pub is_zero: bool,
    pub samples: Vec<SampleCheck>,
}

pub(crate) fn serialize_poly<S: serde::Serializer>(p: &MPoly, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

impl InvolutivityCertificate {
    /// True when `R` is the zero polynomial and every sample vanishes.
    pub fn passes(&self) -> bool {
        self.is_zero && self.samples.iter().all(|s| s.value.is_zero())
    }
}

/// Rational with numerator and denominator of absolute value at most `h`.
pub fn random_rat<R: Rng>(rng: &mut R, h: i64) -> Rat {
    let n = rng.gen_range(-h..=h);
    let d = rng.gen_range(1..=h);
    Rat::new(n.into(), d.into())
}

/// At least ten chart points of height at most 100 whose `(x, y)` avoids the
/// given blown-up points.
pub fn sample_points(seed: u64, count: usize, avoid: &[(Rat, Rat)]) -> Vec<[Rat; 4]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let q = [(); 4].map(|_| random_rat(&mut rng, 100));
        if avoid.iter().any(|(a, b)| &q[0] == a && &q[1] == b) {
            continue;
        }
        out.push(q);
    }
    out
}

pub const MIN_SAMPLES: usize = 10;

/// Certificate for a given basis.
pub fn certify_basis(basis: &SectionBasis, seed: u64) -> InvolutivityCertificate {
    let r = poisson_r(&basis.h, &basis.g);
    let samples = sample_points(seed, MIN_SAMPLES, &basis.points)
        .into_iter()
        .map(|q| SampleCheck {
            value: r.eval_at(&q),
            point: q.to_vec(),
        })
        .collect();
    InvolutivityCertificate {
        basis: basis.clone(),
        is_zero: r.is_zero(),
        r_poly: r,
        samples,
    }
}

/// Computes the sections of the configuration and certifies their bracket.
pub fn involutivity_certificate(config: &PointConfig, seed: u64) -> Result<InvolutivityCertificate, SectionError> {
    let basis = kernel_basis(&assemble_system(config)?)?;
    Ok(certify_basis(&basis, seed))
}

/// The basis with `f_{0,0}` of `H` shifted by one: a negative control.
pub fn corrupt_basis(basis: &SectionBasis) -> SectionBasis {
    let mut slots = basis.h.slots();
    slots[Slot::f(0, 0).index()] += Rat::from_integer(1.into());
    SectionBasis {
        h: SymField::from_slots(&slots),
        ..basis.clone()
    }
}

/// Checks `ω(A, B) = −R(q)` and the four tangency equations at `q`.
pub fn frame_identities(h: &SymField, g: &SymField, q: &[Rat; 4]) -> bool {
    let (a, b) = hamiltonian_frame(h, g, q);
    let r = poisson_r(h, g).eval_at(q);
    let (hq, gq) = (h.fiber_quadratic(), g.fiber_quadratic());
    omega_pairing(&a, &b) == -r.clone()
        && a.apply_differential(&hq).is_zero()
        && b.apply_differential(&gq).is_zero()
        && a.apply_differential(&gq) == r
        && b.apply_differential(&hq) == r
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::rat::{int, rat};
    use crate::sections::{chart_vars, xy_vars};

    fn field(f: &str, g: &str, h: &str) -> SymField {
        let p = |s: &str| parse_poly(s, xy_vars()).unwrap();
        SymField::new(p(f), p(g), p(h)).unwrap()
    }

    #[test]
    fn bracket_examples() {
        let a = field("y", "0", "0");
        let b = field("0", "x", "0");
        assert!(poisson_r(&a, &a).is_zero());
        let expect = parse_poly("2 x u^2 v - 2 y u v^2", chart_vars()).unwrap();
        assert_eq!(poisson_r(&a, &b), expect);
    }

    #[test]
    fn frame_examples() {
        let q = [int(0), int(0), int(1), int(0)];
        let (a, _) = hamiltonian_frame(&field("1", "0", "0"), &field("0", "0", "0"), &q);
        assert_eq!(a.components, vec![int(-2), int(0), int(0), int(0)]);
        let (z, _) = hamiltonian_frame(&field("x^2", "0", "0"), &SymField::zero(), &[int(0), int(0), int(0), int(0)]);
        assert!(z.is_zero());
        let dx = ChartVector::new(q.clone(), [int(1), int(0), int(0), int(0)]);
        let du = ChartVector::new(q.clone(), [int(0), int(0), int(1), int(0)]);
        assert_eq!(omega_pairing(&dx, &du), int(1));
        assert_eq!(omega_pairing(&dx, &dx), int(0));
        let h = field("y", "x y", "1");
        let g = field("x^2", "y", "x");
        let q = [rat(1, 2), int(3), int(-1), rat(2, 3)];
        assert!(frame_identities(&h, &g, &q));
    }

    #[test]
    fn certificate_for_fixture() {
        let cfg = PointConfig::from_ab(rat(-1, 5), rat(9, 5)).unwrap();
        let cert = involutivity_certificate(&cfg, 0).unwrap();
        assert!(cert.is_zero && cert.passes());
        assert!(cert.samples.len() >= MIN_SAMPLES);
        let bad = certify_basis(&corrupt_basis(&cert.basis), 0);
        assert!(!bad.is_zero && !bad.passes());
    }
}
