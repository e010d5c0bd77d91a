use rand::Rng;

use crate::pencil::{normalize_config, PointConfig};
use crate::projective::from_affine;
use crate::rat::{int, Rat};
use crate::symplectic::random_rat;

/// Five random affine points of height at most 20, normalized. Draws again
/// until the points are in general position with a rational normal form.
pub fn random_config<R: Rng>(rng: &mut R) -> PointConfig {
    loop {
        let pts: Vec<_> = (0..5)
            .map(|_| from_affine(&(random_rat(rng, 20), random_rat(rng, 20))))
            .collect();
        if let Ok(cfg) = normalize_config(&pts) {
            return cfg;
        }
    }
}

/// Five distinct integers in `[-30, 30]`.
pub fn random_theta<R: Rng>(rng: &mut R) -> Vec<Rat> {
    let mut out: Vec<Rat> = Vec::new();
    while out.len() < 5 {
        let t = int(rng.gen_range(-30..=30));
        if !out.contains(&t) {
            out.push(t);
        }
    }
    out
}

/// A direction `(1, r)` avoiding the given ones.
pub fn generic_direction<R: Rng>(rng: &mut R, avoid: &[(Rat, Rat)]) -> (Rat, Rat) {
    loop {
        let e = (int(1), random_rat(rng, 20));
        if !avoid.contains(&e) {
            return e;
        }
    }
}
