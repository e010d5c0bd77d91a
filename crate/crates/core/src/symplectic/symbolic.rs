//! Involutivity with the fifth point left free.
//!
//! The four fixed points and the plane forms cut out a five-dimensional space
//! `K`. The seven forms of `(a, b)` restricted to `K` give a 7×5 matrix over
//! `Q[a, b]` of generic rank 3, and Cramer's rule on a nonsingular 3×3 minor
//! yields two polynomial kernel vectors. Their bracket is then expanded over
//! `Q[x, y, u, v, a, b]`.

use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use super::serialize_poly;
use crate::linalg::{kernel, mpoly_adjugate3, mpoly_determinant, Matrix};
use crate::pencil::{PencilError, PointConfig};
use crate::poly::{MPoly, VarTable};
use crate::rat::{int, serde_rat, Rat};
use crate::sections::{
    assemble_points, assemble_system, kernel_basis, point_rows_over, SectionError, Slot, SymField, NUM_SLOTS,
};

#[derive(Debug, Error)]
pub enum SymbolicError {
    #[error(transparent)]
    Section(#[from] SectionError),
    #[error(transparent)]
    Pencil(#[from] PencilError),
    #[error("four fixed points leave a space of dimension {0}, expected 5")]
    FixedKernel(usize),
    #[error("generic rank {0}, expected 3")]
    GenericRank(usize),
    #[error("symbolic kernel vector fails row {0}")]
    Row(usize),
}

#[derive(Clone, Debug, Serialize)]
pub struct ConsistencyCheck {
    #[serde(with = "serde_rat")]
    pub a: Rat,
    #[serde(with = "serde_rat")]
    pub b: Rat,
    /// The specialized symbolic pair spans the same plane as the concrete
    /// kernel basis.
    pub agrees: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SymbolicCertificate {
    #[serde(with = "crate::rat::serde_rat_vec")]
    pub alpha_beta: Vec<Rat>,
    pub fixed_kernel_dimension: usize,
    pub generic_rank: usize,
    pub pivot_rows: Vec<usize>,
    pub pivot_cols: Vec<usize>,
    /// The pivot minor; the symbolic pair is a basis wherever it is nonzero.
    #[serde(serialize_with = "serialize_poly")]
    pub degeneracy_locus: MPoly,
    pub rows_verified: bool,
    pub r_terms: usize,
    pub is_zero: bool,
    pub consistency: Option<ConsistencyCheck>,
    #[serde(skip)]
    pub h_slots: Vec<MPoly>,
    #[serde(skip)]
    pub g_slots: Vec<MPoly>,
}

impl SymbolicCertificate {
    pub fn passes(&self) -> bool {
        self.rows_verified && self.is_zero && self.consistency.as_ref().is_none_or(|c| c.agrees)
    }
}

fn ab_vars() -> VarTable {
    VarTable::of(&["a", "b"])
}

fn full_vars() -> VarTable {
    VarTable::of(&["x", "y", "u", "v", "a", "b"])
}

/// Pivot columns of the numeric matrix, and pivot columns of its transpose.
fn pivots(m: &Matrix) -> (Vec<usize>, Vec<usize>) {
    (m.rref().1, m.transpose().rref().1)
}

/// Fiber quadratic `f u² + g v² + h uv` whose slot coefficients lie in `Q[a, b]`.
fn lift(slots: &[MPoly], target: &VarTable) -> MPoly {
    let mut out = MPoly::zero(target);
    let u = MPoly::var_at(target, 2);
    let v = MPoly::var_at(target, 3);
    let fiber = [u.pow(2), v.pow(2), &u * &v];
    for (k, c) in slots.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let s = Slot::from_index(k);
        let mono = &MPoly::var_at(target, 0).pow(s.i) * &MPoly::var_at(target, 1).pow(s.j);
        out += &(&(&c.embed(target).expect("a, b in target") * &mono) * &fiber[s.comp as usize]);
    }
    out
}

/// Runs the symbolic computation for a normal-form branch `(α, β)`.
pub fn symbolic_involutivity(alpha_beta: (Rat, Rat), seed: u64) -> Result<SymbolicCertificate, SymbolicError> {
    let zero = Rat::zero();
    let one = int(1);
    let fixed = vec![
        (zero.clone(), zero.clone()),
        (one.clone(), zero.clone()),
        (zero.clone(), one.clone()),
        alpha_beta.clone(),
    ];
    let k = kernel(&assemble_points(&fixed)?.matrix());
    if k.len() != 5 {
        return Err(SymbolicError::FixedKernel(k.len()));
    }

    let vars = ab_vars();
    let (a, b) = (MPoly::var_at(&vars, 0), MPoly::var_at(&vars, 1));
    let rows = point_rows_over(&a, &b);
    let m: Vec<Vec<MPoly>> = rows
        .iter()
        .map(|row| {
            k.iter()
                .map(|kv| {
                    let mut acc = MPoly::zero(&vars);
                    for (e, c) in row.iter().zip(kv) {
                        if !c.is_zero() && !e.is_zero() {
                            acc += &e.scale(c);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();

    // generic rank and pivots, read off at a random point
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(usize, Vec<usize>, Vec<usize>)> = None;
    for _ in 0..8 {
        let pt = [int(rng.gen_range(-50..=50)), int(rng.gen_range(-50..=50))];
        let num = Matrix::from_rows(m.iter().map(|r| r.iter().map(|e| e.eval_at(&pt)).collect()).collect());
        let (cols, rws) = pivots(&num);
        if best.as_ref().is_none_or(|b| cols.len() > b.0) {
            best = Some((cols.len(), cols, rws));
        }
    }
    let (rank, pcols, prows) = best.expect("at least one sample");
    if rank != 3 {
        return Err(SymbolicError::GenericRank(rank));
    }
    let minor: Vec<Vec<MPoly>> = prows
        .iter()
        .map(|&r| pcols.iter().map(|&c| m[r][c].clone()).collect())
        .collect();
    let det = mpoly_determinant(&minor);
    let adj = mpoly_adjugate3(&minor);
    let free: Vec<usize> = (0..5).filter(|c| !pcols.contains(c)).collect();

    let mut sols = Vec::new();
    for &f in &free {
        let mut v = vec![MPoly::zero(&vars); 5];
        for (kk, &pc) in pcols.iter().enumerate() {
            let mut acc = MPoly::zero(&vars);
            for (l, &pr) in prows.iter().enumerate() {
                acc -= &(&adj[kk][l] * &m[pr][f]);
            }
            v[pc] = acc;
        }
        v[f] = det.clone();
        sols.push(v);
    }
    for (r, row) in m.iter().enumerate() {
        for v in &sols {
            let mut acc = MPoly::zero(&vars);
            for (e, c) in row.iter().zip(v) {
                acc += &(e * c);
            }
            if !acc.is_zero() {
                return Err(SymbolicError::Row(r));
            }
        }
    }

    let to_slots = |v: &[MPoly]| -> Vec<MPoly> {
        (0..NUM_SLOTS)
            .map(|s| {
                let mut acc = MPoly::zero(&vars);
                for (c, kv) in v.iter().zip(&k) {
                    if !kv[s].is_zero() {
                        acc += &c.scale(&kv[s]);
                    }
                }
                acc
            })
            .collect()
    };
    let h_slots = to_slots(&sols[0]);
    let g_slots = to_slots(&sols[1]);

    let target = full_vars();
    let r = super::bracket(&lift(&h_slots, &target), &lift(&g_slots, &target));

    let check_ab = (int(2), int(3));
    let consistency = PointConfig::with_branch(alpha_beta.clone(), check_ab.0.clone(), check_ab.1.clone())
        .ok()
        .filter(|_| !det.eval_at(&[check_ab.0.clone(), check_ab.1.clone()]).is_zero())
        .map(|cfg| -> Result<ConsistencyCheck, SymbolicError> {
            let basis = kernel_basis(&assemble_system(&cfg)?)?;
            let pt = [check_ab.0.clone(), check_ab.1.clone()];
            let hs: Vec<Rat> = h_slots.iter().map(|p| p.eval_at(&pt)).collect();
            let gs: Vec<Rat> = g_slots.iter().map(|p| p.eval_at(&pt)).collect();
            let pair = Matrix::from_rows(vec![hs.clone(), gs.clone()]);
            let all = Matrix::from_rows(vec![hs, gs, basis.h.slots(), basis.g.slots()]);
            Ok(ConsistencyCheck {
                a: check_ab.0.clone(),
                b: check_ab.1.clone(),
                agrees: pair.rank() == 2 && all.rank() == 2,
            })
        })
        .transpose()?;

    Ok(SymbolicCertificate {
        alpha_beta: vec![alpha_beta.0, alpha_beta.1],
        fixed_kernel_dimension: k.len(),
        generic_rank: rank,
        pivot_rows: prows,
        pivot_cols: pcols,
        degeneracy_locus: det,
        rows_verified: true,
        r_terms: r.num_terms(),
        is_zero: r.is_zero(),
        consistency,
        h_slots,
        g_slots,
    })
}

impl SymbolicCertificate {
    /// The symbolic pair specialized at `(a, b)`.
    pub fn specialize(&self, a: &Rat, b: &Rat) -> (SymField, SymField) {
        let pt = [a.clone(), b.clone()];
        let ev = |s: &[MPoly]| SymField::from_slots(&s.iter().map(|p| p.eval_at(&pt)).collect::<Vec<_>>());
        (ev(&self.h_slots), ev(&self.g_slots))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pencil::{branch_alt, branch_main};

    #[test]
    fn main_branch_vanishes() {
        let cert = symbolic_involutivity(branch_main(), 1).unwrap();
        assert_eq!(cert.generic_rank, 3);
        assert!(cert.is_zero, "{} terms", cert.r_terms);
        assert!(cert.consistency.as_ref().unwrap().agrees);
        assert!(!cert.degeneracy_locus.is_zero());
    }

    #[test]
    fn alt_branch_vanishes() {
        let cert = symbolic_involutivity(branch_alt(), 1).unwrap();
        assert!(cert.passes());
    }
}
