//! The three diagonal quadrics of the branch model against the defining pair
//! of the surface.

use dp4_lagrange::levels::{branch_quadrics, span_contains, span_equal};
use dp4_lagrange::pencil::standard_dp4_quadrics;
use dp4_lagrange::rat::int;

fn main() {
    let theta: Vec<_> = [0, 1, -1, 2, -2].into_iter().map(int).collect();
    let theta6 = int(3);
    let q = branch_quadrics(&theta, &theta6).unwrap();
    for (k, d) in q.diagonals.iter().enumerate() {
        let s: Vec<String> = d.iter().map(|r| r.to_string()).collect();
        println!("quadric {k}: diag({})", s.join(", "));
    }
    let p = standard_dp4_quadrics(&theta).unwrap();
    let pair = vec![
        (0..5).map(|k| p.q1[(k, k)].clone()).collect::<Vec<_>>(),
        (0..5).map(|k| p.q2[(k, k)].clone()).collect(),
    ];
    println!("first two span the pair: {}", span_equal(&q.diagonals[..2], &pair));
    println!("all three contain the pair: {}", span_contains(&q.diagonals, &pair));
}
