//! Special directions from node proportionality, cross-checked by the square
//! discriminant and the tangency cubic.

use dp4_lagrange::levels::{chord_points, ebi_cubic, reducibility_test, special_directions};
use dp4_lagrange::pencil::{normalize_config, veronese_points};
use dp4_lagrange::rat::int;
use dp4_lagrange::sections::{assemble_system, kernel_basis};

fn main() {
    let theta: Vec<_> = [0, 1, -1, 2, -2].into_iter().map(int).collect();
    let config = normalize_config(&veronese_points(&theta)).unwrap();
    let basis = kernel_basis(&assemble_system(&config).unwrap()).unwrap();
    let sd = special_directions(&basis, &config).unwrap();
    for (k, e) in sd.directions.iter().enumerate() {
        let i = k + 1;
        let nodes: Vec<String> = sd.witnesses[k].iter().map(|n| n.label()).collect();
        println!("direction {i}: ({}, {}) at {}", e.0, e.1, nodes.join(" "));
        let red = reducibility_test(&basis, e).unwrap();
        let s = red.monic_sqrt.expect("square discriminant");
        println!("  sqrt of discriminant (monic): {s}");
        let cubic = ebi_cubic(&config, i).unwrap();
        println!("  cubic solution dims: {} / {}", cubic.tangency_dim, cubic.with_point_dim);
        if let Some(c) = &cubic.cubic {
            let pts = chord_points(c, &config.affine_points(), 4);
            let ok = pts.iter().all(|p| s.eval_at(&[p.0.clone(), p.1.clone()]) == int(0));
            println!("  cubic {c}; sqrt vanishes at {} chord points: {ok}", pts.len());
        }
    }
}
