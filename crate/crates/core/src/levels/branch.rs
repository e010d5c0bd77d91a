//! Discriminant curves, the diagonal branch model, the tangency cubic and the
//! line tangency test.

use num_traits::{One, Zero};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::LevelsError;
use crate::linalg::{kernel, Matrix};
use crate::pencil::{theta_polynomial, PointConfig};
use crate::poly::{binary_quadratic_discriminant, MPoly, UPoly, VarTable};
use crate::projective::{det3, from_affine, AffinePoint};
use crate::rat::{format_rat, serde_rat_vec, Rat};
use crate::sections::{xy_vars, SectionBasis};
use crate::symplectic::{random_rat, serialize_poly};

/// `Δ_e = (e2·h − e1·h')² − 4(e2·f − e1·f')(e2·g − e1·g')`, where
/// `H = (f, g, h)` and `G = (f', g', h')`.
pub fn chart_discriminant(basis: &SectionBasis, e: &(Rat, Rat)) -> Result<MPoly, LevelsError> {
    if e.0.is_zero() && e.1.is_zero() {
        return Err(LevelsError::ZeroDirection);
    }
    let m = basis.pencil_member(e);
    Ok(binary_quadratic_discriminant(m.f(), m.h(), m.g()))
}

/// The discriminant as a polynomial in `x, y, e1, e2`.
pub fn symbolic_discriminant(basis: &SectionBasis) -> MPoly {
    let t = VarTable::of(&["x", "y", "e1", "e2"]);
    let lift = |p: &MPoly| p.embed(&t).expect("x, y");
    let (e1, e2) = (MPoly::var_at(&t, 2), MPoly::var_at(&t, 3));
    let comb = |a: &MPoly, b: &MPoly| &(&e2 * &lift(a)) - &(&e1 * &lift(b));
    let f = comb(basis.h.f(), basis.g.f());
    let g = comb(basis.h.g(), basis.g.g());
    let h = comb(basis.h.h(), basis.g.h());
    binary_quadratic_discriminant(&f, &h, &g)
}

/// Order of vanishing of a polynomial in `x, y` at a point.
pub fn vanishing_order(p: &MPoly, at: &AffinePoint) -> Option<u32> {
    let t = p.vars().clone();
    let x = &MPoly::var_at(&t, 0) + &MPoly::constant(&t, at.0.clone());
    let y = &MPoly::var_at(&t, 1) + &MPoly::constant(&t, at.1.clone());
    let shifted = p.compose(&[x, y]).ok()?;
    shifted.terms().map(|(m, _)| m.degree()).min()
}

/// The three diagonal quadrics `Σ θ_i^k y_i² / Q'(θ_i)`, `k = 0, 1, 2`, with
/// `Q(t) = Π_{j ≤ 6} (t − θ_j)`, restricted to the first five coordinates.
#[derive(Clone, Debug, Serialize)]
pub struct BranchQuadrics {
    #[serde(serialize_with = "ser_rows")]
    pub diagonals: Vec<Vec<Rat>>,
}

fn ser_rows<S: serde::Serializer>(rows: &[Vec<Rat>], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(rows.iter().map(|r| r.iter().map(format_rat).collect::<Vec<_>>()))
}

pub fn branch_quadrics(theta: &[Rat], theta6: &Rat) -> Result<BranchQuadrics, LevelsError> {
    let mut all = theta.to_vec();
    all.push(theta6.clone());
    for a in 0..all.len() {
        for b in a + 1..all.len() {
            if all[a] == all[b] {
                return Err(LevelsError::RepeatedTheta(format_rat(&all[a])));
            }
        }
    }
    let dq = theta_polynomial(&all).derivative();
    let w: Vec<Rat> = theta.iter().map(|t| dq.eval(t).recip()).collect();
    let diagonals = (0..3)
        .map(|k| {
            w.iter()
                .zip(theta)
                .map(|(wi, t)| wi * num_traits::pow(t.clone(), k))
                .collect()
        })
        .collect();
    Ok(BranchQuadrics { diagonals })
}

/// Whether every row of `small` lies in the span of `big`.
pub fn span_contains(big: &[Vec<Rat>], small: &[Vec<Rat>]) -> bool {
    let r = Matrix::from_rows(big.to_vec()).rank();
    let mut both = big.to_vec();
    both.extend_from_slice(small);
    Matrix::from_rows(both).rank() == r
}

/// Whether two families of rows span the same space.
pub fn span_equal(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> bool {
    span_contains(a, b) && span_contains(b, a)
}

/// Plane cubics through `p_k` tangent to `line(p_i, p_k)` for every `k ≠ i`.
#[derive(Clone, Debug, Serialize)]
pub struct CubicReport {
    pub i: usize,
    /// Solution dimension of the eight tangency conditions.
    pub tangency_dim: usize,
    /// Solution dimension once passing through `p_i` is added.
    pub with_point_dim: usize,
    #[serde(serialize_with = "ser_polys")]
    pub tangency_basis: Vec<MPoly>,
    /// The cubic, when the nine conditions determine it.
    #[serde(serialize_with = "ser_opt")]
    pub cubic: Option<MPoly>,
}

fn ser_polys<S: serde::Serializer>(v: &[MPoly], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|p| p.to_string()))
}

fn ser_opt<S: serde::Serializer>(p: &Option<MPoly>, s: S) -> Result<S::Ok, S::Error> {
    match p {
        Some(p) => serialize_poly(p, s),
        None => s.serialize_none(),
    }
}

fn cubic_monomials() -> Vec<MPoly> {
    let t = xy_vars();
    let mut out = Vec::new();
    for d in 0..=3u32 {
        for a in (0..=d).rev() {
            out.push(MPoly::term(t, Rat::one(), &[a, d - a]));
        }
    }
    out
}

fn cubic_from(coeffs: &[Rat], monos: &[MPoly]) -> MPoly {
    let mut out = MPoly::zero(xy_vars());
    for (c, m) in coeffs.iter().zip(monos) {
        out += &m.scale(c);
    }
    out
}

pub fn ebi_cubic(config: &PointConfig, i: usize) -> Result<CubicReport, LevelsError> {
    if !(1..=5).contains(&i) {
        return Err(LevelsError::BadIndex(i));
    }
    let pts = config.affine_points();
    let monos = cubic_monomials();
    let pi = &pts[i - 1];
    let at = |p: &MPoly, q: &AffinePoint| p.eval_at(&[q.0.clone(), q.1.clone()]);
    let mut rows = Vec::new();
    for (k, pk) in pts.iter().enumerate() {
        if k + 1 == i {
            continue;
        }
        let (dx, dy) = (&pk.0 - &pi.0, &pk.1 - &pi.1);
        rows.push(monos.iter().map(|m| at(m, pk)).collect::<Vec<_>>());
        rows.push(
            monos
                .iter()
                .map(|m| at(&m.derivative_at(0), pk) * &dx + at(&m.derivative_at(1), pk) * &dy)
                .collect(),
        );
    }
    let tang = kernel(&Matrix::from_rows(rows.clone()));
    rows.push(monos.iter().map(|m| at(m, pi)).collect());
    let full = kernel(&Matrix::from_rows(rows));
    Ok(CubicReport {
        i,
        tangency_dim: tang.len(),
        with_point_dim: full.len(),
        tangency_basis: tang.iter().map(|v| cubic_from(v, &monos)).collect(),
        cubic: (full.len() == 1).then(|| cubic_from(&full[0], &monos)),
    })
}

fn s_table() -> VarTable {
    VarTable::of(&["s"])
}

/// `p(P + s(Q − P))` as a polynomial in `s`.
pub fn restrict_to_line(p: &MPoly, from: &AffinePoint, to: &AffinePoint) -> UPoly {
    let t = s_table();
    let s = MPoly::var_at(&t, 0);
    let img = |a: &Rat, b: &Rat| &MPoly::constant(&t, a.clone()) + &s.scale(&(b - a));
    let r = p
        .compose(&[img(&from.0, &to.0), img(&from.1, &to.1)])
        .expect("two images over one table");
    UPoly::from_mpoly(&r, 0).expect("univariate")
}

fn line_point(from: &AffinePoint, to: &AffinePoint, s: &Rat) -> AffinePoint {
    (&from.0 + s * (&to.0 - &from.0), &from.1 + s * (&to.1 - &from.1))
}

/// Further rational points of a cubic through known rational points, by
/// intersecting chords.
pub fn chord_points(cubic: &MPoly, seeds: &[AffinePoint], count: usize) -> Vec<AffinePoint> {
    let mut known = seeds.to_vec();
    let mut found = Vec::new();
    let mut a = 0;
    while found.len() < count && a < known.len() {
        for b in 0..a {
            let (p, q) = (known[b].clone(), known[a].clone());
            let r = restrict_to_line(cubic, &p, &q);
            if r.degree() != Some(3) {
                continue;
            }
            let lin = r.div_rem(&UPoly::from_ints(&[0, -1, 1])).0;
            let s = -&lin.coeffs()[0] / &lin.coeffs()[1];
            let pt = line_point(&p, &q, &s);
            if !known.contains(&pt) {
                known.push(pt.clone());
                found.push(pt);
                if found.len() >= count {
                    break;
                }
            }
        }
        a += 1;
    }
    found
}

/// Repeated roots of `Δ_e` restricted to `line(p_i, p_j)`, away from both
/// endpoints.
#[derive(Clone, Debug, Serialize)]
pub struct LineTangency {
    pub i: usize,
    pub j: usize,
    pub restricted: String,
    /// `gcd(r, r')` with the factors `s` and `s − 1` removed.
    pub repeated_factor: String,
    pub repeated_degree: usize,
    #[serde(with = "serde_rat_vec")]
    pub witnesses: Vec<Rat>,
    pub witnesses_on_curve: bool,
}

impl LineTangency {
    pub fn tangent(&self) -> bool {
        self.repeated_degree >= 1
    }
}

fn strip_root(mut p: UPoly, r: &Rat) -> UPoly {
    let lin = UPoly::linear_root(r);
    loop {
        if p.degree().unwrap_or(0) == 0 {
            return p;
        }
        let (q, rem) = p.div_rem(&lin);
        if !rem.is_zero() {
            return p;
        }
        p = q;
    }
}

fn repeated_part(r: &UPoly) -> UPoly {
    if r.is_zero() {
        return r.clone();
    }
    r.gcd(&r.derivative())
}

pub fn line_tangency_check(
    basis: &SectionBasis,
    config: &PointConfig,
    e: &(Rat, Rat),
    (i, j): (usize, usize),
) -> Result<LineTangency, LevelsError> {
    if !(1..=5).contains(&i) || !(1..=5).contains(&j) || i == j {
        return Err(LevelsError::LineNotVisible(i, j));
    }
    let pts = config.affine_points();
    let delta = chart_discriminant(basis, e)?;
    let (p, q) = (&pts[i - 1], &pts[j - 1]);
    let r = restrict_to_line(&delta, p, q);
    let rep = strip_root(strip_root(repeated_part(&r), &Rat::zero()), &Rat::one());
    let witnesses = rep.rational_roots();
    let witnesses_on_curve = witnesses.iter().all(|s| {
        let (x, y) = line_point(p, q, s);
        delta.eval_at(&[x, y]).is_zero()
    });
    Ok(LineTangency {
        i,
        j,
        restricted: r.to_string(),
        repeated_degree: rep.degree().unwrap_or(0),
        repeated_factor: rep.monic().to_string(),
        witnesses,
        witnesses_on_curve,
    })
}

/// Repeated-root frequency of `Δ_e` on random lines through none of the
/// points.
#[derive(Clone, Debug, Serialize)]
pub struct TangencyControl {
    pub trials: usize,
    pub with_repeated_root: usize,
}

pub fn random_line_control(
    basis: &SectionBasis,
    config: &PointConfig,
    e: &(Rat, Rat),
    trials: usize,
    seed: u64,
) -> Result<TangencyControl, LevelsError> {
    let delta = chart_discriminant(basis, e)?;
    let pts: Vec<_> = config.affine_points().iter().map(from_affine).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut with_repeated_root = 0;
    let mut done = 0;
    while done < trials {
        let p = (random_rat(&mut rng, 20), random_rat(&mut rng, 20));
        let q = (random_rat(&mut rng, 20), random_rat(&mut rng, 20));
        let (pp, qq) = (from_affine(&p), from_affine(&q));
        if p == q || pts.iter().any(|x| det3(&pp, &qq, x).is_zero()) {
            continue;
        }
        let rep = repeated_part(&restrict_to_line(&delta, &p, &q));
        if rep.degree().unwrap_or(0) >= 1 {
            with_repeated_root += 1;
        }
        done += 1;
    }
    Ok(TangencyControl {
        trials,
        with_repeated_root,
    })
}
