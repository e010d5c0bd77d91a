//! Matching the special directions with the singular members of the pencil.

use dp4_lagrange::levels::{dictionary, special_directions};
use dp4_lagrange::pencil::{normalize_config, veronese_points};
use dp4_lagrange::rat::int;
use dp4_lagrange::sections::{assemble_system, kernel_basis};

fn main() {
    let theta: Vec<_> = [0, 1, -1, 2, -2].into_iter().map(int).collect();
    let config = normalize_config(&veronese_points(&theta)).unwrap();
    let basis = kernel_basis(&assemble_system(&config).unwrap()).unwrap();
    let sd = special_directions(&basis, &config).unwrap();
    let rep = dictionary(&sd.directions, &theta);
    for m in &rep.matches {
        let mob: Vec<String> = m.mobius.iter().map(|r| r.to_string()).collect();
        println!("perm {:?}, mobius [{}], cross-ratios agree: {}", m.perm, mob.join(", "), m.cross_ratios_agree);
    }
    println!("consistent: {}", rep.consistent);
}
