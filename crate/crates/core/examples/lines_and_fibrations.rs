//! The sixteen lines, the ten conic fibrations and the intersection numbers
//! on the tangent bundle.

use dp4_lagrange::pencil::{brute_force_lines, conic_fibrations, enumerate_lines, vmrt_classes, zeta_numerology};

fn main() {
    for l in enumerate_lines() {
        println!("{l}: {:?}", l.class());
    }
    println!("lattice search finds {} classes", brute_force_lines(3, 3).len());
    for f in conic_fibrations() {
        let fibers: Vec<String> = f.singular_fibers.iter().map(|[a, b]| format!("{a}+{b}")).collect();
        println!("pi_{},{}: {}", f.i, f.j, fibers.join(", "));
    }
    println!("{:?}", zeta_numerology(4, 8));
    for i in 1..=5 {
        println!("i = {i}: {:?}", vmrt_classes(i));
    }
}
