//! Sections of the symmetric square of the tangent bundle, computed as the
//! kernel of the regularity conditions.

use dp4_lagrange::pencil::{normalize_config, veronese_points};
use dp4_lagrange::rat::int;
use dp4_lagrange::sections::{
    assemble_system, kernel_basis, p2_constraints, rank_cross_check, section_space_dimension, ConstraintSystem,
};

fn main() {
    for (k, form) in p2_constraints().iter().enumerate() {
        println!("plane form {:>2}: {form}", k + 1);
    }
    let plane = ConstraintSystem::plane_only();
    println!("plane-only kernel dimension: {}", 45 - plane.matrix().rank());

    let theta: Vec<_> = [0, 1, -1, 2, -2].into_iter().map(int).collect();
    let config = normalize_config(&veronese_points(&theta)).expect("distinct theta");
    let pts = config.affine_points();
    for k in 0..=5 {
        println!("{k} points blown up: dimension {}", section_space_dimension(&pts[..k]).unwrap());
    }

    let sys = assemble_system(&config).unwrap();
    let (exact, modp) = rank_cross_check(&sys);
    println!("{} rows, rank {exact} (mod p: {modp:?})", sys.len());
    let basis = kernel_basis(&sys).unwrap();
    println!("H: {}", basis.h);
    println!("G: {}", basis.g);
}
