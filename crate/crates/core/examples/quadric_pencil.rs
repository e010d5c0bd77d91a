//! The diagonal pencil of quadrics, its singular members and the normal form
//! of the five points.

use dp4_lagrange::linalg::Matrix;
use dp4_lagrange::pencil::{normalize_config, singular_members, standard_dp4_quadrics, veronese_points, QuadricPencil};
use dp4_lagrange::rat::int;

fn main() {
    let theta: Vec<_> = [0, 1, -1, 2, -2].into_iter().map(int).collect();
    let pencil = standard_dp4_quadrics(&theta).unwrap();
    println!("det(tQ1 - Q2)/det Q1 = {}", pencil.characteristic_polynomial().unwrap());
    for m in singular_members(&pencil).unwrap() {
        println!("  theta = {}: rank {}", m.theta, m.rank);
    }

    let config = normalize_config(&veronese_points(&theta)).unwrap();
    println!("normal form (a, b) = ({}, {}), order {:?}", config.ab.0, config.ab.1, config.order);

    // t^5 - 2 has a single rational-free factor
    let n = 5;
    let mut j = Matrix::zeros(n, n);
    let mut c = Matrix::zeros(n, n);
    for i in 0..n {
        j[(i, n - 1 - i)] = int(1);
        if i + 1 < n {
            c[(i + 1, i)] = int(1);
        }
    }
    c[(0, n - 1)] = int(2);
    let q2 = j.mul(&c);
    let irr = QuadricPencil::new(j, q2).unwrap();
    println!("t^5 - 2 pencil: {}", singular_members(&irr).unwrap_err());
}
