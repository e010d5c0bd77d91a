//! The discriminant curve of a generic pencil member is tangent to the lines
//! through pairs of points.

use dp4_lagrange::levels::{line_tangency_check, random_line_control};
use dp4_lagrange::pencil::PointConfig;
use dp4_lagrange::rat::{int, rat};
use dp4_lagrange::sections::{assemble_system, kernel_basis};

fn main() {
    let config = PointConfig::from_ab(rat(-1, 5), rat(9, 5)).unwrap();
    let basis = kernel_basis(&assemble_system(&config).unwrap()).unwrap();
    let e = (int(2), int(7));
    for i in 1..=5 {
        for j in i + 1..=5 {
            let t = line_tangency_check(&basis, &config, &e, (i, j)).unwrap();
            let w: Vec<String> = t.witnesses.iter().map(|r| r.to_string()).collect();
            println!("l{i}{j}: repeated factor {} at s = {}", t.repeated_factor, w.join(", "));
        }
    }
    let control = random_line_control(&basis, &config, &e, 20, 1).unwrap();
    println!("random lines with a repeated root: {} of {}", control.with_repeated_root, control.trials);
}
