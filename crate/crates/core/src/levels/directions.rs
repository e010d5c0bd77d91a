//! The five special directions, read off at the nodes of reducible conics,
//! and their match with the singular members of the quadric pencil.

use num_traits::Zero;
use serde::Serialize;

use super::{chart_discriminant, restrict_pair, ser_pair, BinaryQuadric, LevelsError};
use crate::linalg::Matrix;
use crate::pencil::{others, pairings, PointConfig};
use crate::poly::{perfect_square_test, square_up_to_scalar, MPoly};
use crate::projective::{line_through, meet, ChartPoint, ProjPoint};
use crate::rat::{format_rat, serde_rat_vec, Rat};
use crate::sections::SectionBasis;
use crate::symplectic::serialize_poly;

/// Intersection of `line(p_a, p_b)` and `line(p_c, p_d)`; indices are 1-based.
#[derive(Clone, Debug, Serialize)]
pub struct Node {
    pub i: usize,
    pub pairing: [(usize, usize); 2],
    #[serde(with = "serde_rat_vec")]
    pub point: Vec<Rat>,
    pub chart: crate::projective::Chart,
    #[serde(serialize_with = "ser_pair")]
    pub coords: (Rat, Rat),
}

impl Node {
    pub fn chart_point(&self) -> ChartPoint {
        ChartPoint {
            chart: self.chart,
            coords: self.coords.clone(),
        }
    }

    pub fn label(&self) -> String {
        let [(a, b), (c, d)] = self.pairing;
        format!("l{a}{b}^l{c}{d}")
    }
}

/// The fifteen nodes, three for each index `i`.
pub fn node_points(config: &PointConfig) -> Vec<Node> {
    let pts = config.normalized_points();
    let p = |k: usize| -> &ProjPoint { &pts[k - 1] };
    let mut out = Vec::with_capacity(15);
    for i in 1..=5 {
        for pairing in pairings(others(i)) {
            let [(a, b), (c, d)] = pairing;
            let x = meet(&line_through(p(a), p(b)), &line_through(p(c), p(d)));
            let cp = ChartPoint::from_projective(&x).expect("distinct lines meet in a point");
            out.push(Node {
                i,
                pairing,
                point: x.to_vec(),
                chart: cp.chart,
                coords: cp.coords,
            });
        }
    }
    out
}

/// Projective normalization with `e1 = 1` when possible.
pub fn normalize_direction(e: &(Rat, Rat)) -> (Rat, Rat) {
    if !e.0.is_zero() {
        (Rat::from_integer(1.into()), &e.1 / &e.0)
    } else {
        (Rat::zero(), Rat::from_integer(1.into()))
    }
}

/// The direction `e` with `e2·h − e1·g = 0`, if `h` and `g` are proportional.
/// `Err` when both vanish.
pub fn proportionality(h: &BinaryQuadric, g: &BinaryQuadric) -> Result<Option<(Rat, Rat)>, ()> {
    match (h.is_zero(), g.is_zero()) {
        (true, true) => Err(()),
        (false, true) => Ok(Some((Rat::from_integer(1.into()), Rat::zero()))),
        (true, false) => Ok(Some((Rat::zero(), Rat::from_integer(1.into())))),
        (false, false) => {
            let hs = [&h.f, &h.g, &h.h];
            let gs = [&g.f, &g.g, &g.h];
            let k = (0..3).find(|&k| !gs[k].is_zero()).expect("g nonzero");
            let r = hs[k] / gs[k];
            if (0..3).all(|j| hs[j] == &(&r * gs[j])) {
                // h = r·g, so e2·r − e1 = 0
                Ok(Some(normalize_direction(&(r, Rat::from_integer(1.into())))))
            } else {
                Ok(None)
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpecialDirections {
    /// Direction for `i = 1..5`, normalized with `e1 = 1` when possible.
    #[serde(serialize_with = "ser_pairs")]
    pub directions: Vec<(Rat, Rat)>,
    pub witnesses: Vec<Vec<Node>>,
}

fn ser_pairs<S: serde::Serializer>(v: &[(Rat, Rat)], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|(a, b)| [format_rat(a), format_rat(b)]))
}

/// At each of the three nodes of index `i`, `H` and `G` are proportional; the
/// common ratio is direction `i`.
pub fn special_directions(basis: &SectionBasis, config: &PointConfig) -> Result<SpecialDirections, LevelsError> {
    let nodes = node_points(config);
    let mut directions = Vec::new();
    let mut witnesses = Vec::new();
    for i in 1..=5 {
        let mine: Vec<Node> = nodes.iter().filter(|n| n.i == i).cloned().collect();
        let mut dir: Option<(Rat, Rat)> = None;
        for n in &mine {
            let (h, g) = restrict_pair(basis, &n.chart_point())?;
            let e = proportionality(&h, &g)
                .map_err(|_| LevelsError::DeeperDegeneracy(n.label()))?
                .ok_or_else(|| LevelsError::NotProportional(n.label()))?;
            match &dir {
                Some(d) if d != &e => return Err(LevelsError::InconsistentNodes(i)),
                _ => dir = Some(e),
            }
        }
        directions.push(dir.expect("three nodes"));
        witnesses.push(mine);
    }
    for a in 0..5 {
        for b in a + 1..5 {
            if directions[a] == directions[b] {
                return Err(LevelsError::RepeatedDirection);
            }
        }
    }
    Ok(SpecialDirections { directions, witnesses })
}

#[derive(Clone, Debug, Serialize)]
pub struct Reducibility {
    #[serde(serialize_with = "ser_pair")]
    pub direction: (Rat, Rat),
    pub reducible: bool,
    /// `S` with `Δ = S²`.
    #[serde(serialize_with = "ser_opt_poly")]
    pub sqrt: Option<MPoly>,
    /// `Δ = c·S²` with `S` monic, whether or not `c` is a square.
    #[serde(serialize_with = "ser_opt_poly")]
    pub monic_sqrt: Option<MPoly>,
}

fn ser_opt_poly<S: serde::Serializer>(p: &Option<MPoly>, s: S) -> Result<S::Ok, S::Error> {
    match p {
        Some(p) => serialize_poly(p, s),
        None => s.serialize_none(),
    }
}

/// Whether the discriminant curve of the pencil member is a double curve.
pub fn reducibility_test(basis: &SectionBasis, e: &(Rat, Rat)) -> Result<Reducibility, LevelsError> {
    let delta = chart_discriminant(basis, e)?;
    let t = perfect_square_test(&delta);
    Ok(Reducibility {
        direction: e.clone(),
        reducible: t.is_square,
        sqrt: t.sqrt,
        monic_sqrt: square_up_to_scalar(&delta).map(|s| s.sqrt),
    })
}

fn bracket(a: &(Rat, Rat), b: &(Rat, Rat)) -> Rat {
    &a.0 * &b.1 - &a.1 * &b.0
}

/// Cross-ratio `[z1,z3][z2,z4] / ([z1,z4][z2,z3])` of points of `P¹`.
pub fn cross_ratio(z: [&(Rat, Rat); 4]) -> Option<Rat> {
    let den = bracket(z[0], z[3]) * bracket(z[1], z[2]);
    if den.is_zero() {
        return None;
    }
    Some(bracket(z[0], z[2]) * bracket(z[1], z[3]) / den)
}

fn frame2(z: [&(Rat, Rat); 3]) -> Option<Matrix> {
    let m = Matrix::from_rows(vec![vec![z[0].0.clone(), z[1].0.clone()], vec![z[0].1.clone(), z[1].1.clone()]]);
    let lam = m.inverse()?.mul_vec(&[z[2].0.clone(), z[2].1.clone()]);
    if lam.iter().any(Zero::is_zero) {
        return None;
    }
    Some(Matrix::from_rows(vec![
        vec![&z[0].0 * &lam[0], &z[1].0 * &lam[1]],
        vec![&z[0].1 * &lam[0], &z[1].1 * &lam[1]],
    ]))
}

/// The Möbius map sending `src[k]` to `dst[k]` for `k = 0, 1, 2`.
pub fn fit_mobius(src: [&(Rat, Rat); 3], dst: [&(Rat, Rat); 3]) -> Option<Matrix> {
    Some(frame2(dst)?.mul(&frame2(src)?.inverse()?))
}

fn apply_mobius(m: &Matrix, z: &(Rat, Rat)) -> (Rat, Rat) {
    let v = m.mul_vec(&[z.0.clone(), z.1.clone()]);
    (v[0].clone(), v[1].clone())
}

#[derive(Clone, Debug, Serialize)]
pub struct DictionaryMatch {
    /// `perm[k]` is the index of the parameter matched with direction `k`.
    pub perm: Vec<usize>,
    #[serde(with = "serde_rat_vec")]
    pub mobius: Vec<Rat>,
    /// `[φ(d), (1 : θ)]` on the two held-out pairs; zero when they agree.
    #[serde(with = "serde_rat_vec")]
    pub residuals: Vec<Rat>,
    pub cross_ratios_agree: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DictionaryReport {
    pub matches: Vec<DictionaryMatch>,
    pub consistent: bool,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Every bijection between the directions and the points `(1 : θ)` realized
/// by a Möbius map, checked exactly on the two pairs not used in the fit.
pub fn dictionary(directions: &[(Rat, Rat)], theta: &[Rat]) -> DictionaryReport {
    assert_eq!(directions.len(), 5);
    assert_eq!(theta.len(), 5);
    let targets: Vec<(Rat, Rat)> = theta.iter().map(|t| (Rat::from_integer(1.into()), t.clone())).collect();
    let mut matches = Vec::new();
    for perm in permutations(5) {
        let d = |k: usize| &directions[k];
        let w = |k: usize| &targets[perm[k]];
        let Some(m) = fit_mobius([d(0), d(1), d(2)], [w(0), w(1), w(2)]) else {
            continue;
        };
        let residuals: Vec<Rat> = (3..5).map(|k| bracket(&apply_mobius(&m, d(k)), w(k))).collect();
        if !residuals.iter().all(Zero::is_zero) {
            continue;
        }
        let cross_ratios_agree = (0..5).all(|skip| {
            let idx: Vec<usize> = (0..5).filter(|&k| k != skip).collect();
            let a = cross_ratio([d(idx[0]), d(idx[1]), d(idx[2]), d(idx[3])]);
            let b = cross_ratio([w(idx[0]), w(idx[1]), w(idx[2]), w(idx[3])]);
            a.is_some() && a == b
        });
        matches.push(DictionaryMatch {
            mobius: (0..4).map(|k| m[(k / 2, k % 2)].clone()).collect(),
            perm,
            residuals,
            cross_ratios_agree,
        });
    }
    let consistent = !matches.is_empty() && matches.iter().all(|m| m.cross_ratios_agree);
    DictionaryReport { matches, consistent }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat};

    #[test]
    fn mobius_fit_and_cross_ratio() {
        let p = |a: i64, b: i64| (int(a), int(b));
        let src = [p(1, 0), p(0, 1), p(1, 1), p(1, 2)];
        // z ↦ 2z + 1 on the affine coordinate b/a
        let dst: Vec<(Rat, Rat)> = src.iter().map(|(a, b)| (a.clone(), b * int(2) + a)).collect();
        let m = fit_mobius([&src[0], &src[1], &src[2]], [&dst[0], &dst[1], &dst[2]]).unwrap();
        assert!(bracket(&apply_mobius(&m, &src[3]), &dst[3]).is_zero());
        assert_eq!(
            cross_ratio([&src[0], &src[1], &src[2], &src[3]]),
            cross_ratio([&dst[0], &dst[1], &dst[2], &dst[3]])
        );
        assert_eq!(permutations(5).len(), 120);
    }

    #[test]
    fn dictionary_on_identity() {
        let theta = vec![int(0), int(1), int(-1), int(2), int(-2)];
        let dirs: Vec<(Rat, Rat)> = theta.iter().map(|t| (int(1), t / int(3) + rat(1, 2))).collect();
        let rep = dictionary(&dirs, &theta);
        assert!(rep.consistent);
        assert!(rep.matches.iter().any(|m| m.perm == vec![0, 1, 2, 3, 4]));
    }
}
