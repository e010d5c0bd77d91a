//! Involutivity with the fifth point `(a, b)` kept symbolic.

use dp4_lagrange::pencil::{branch_alt, branch_main};
use dp4_lagrange::symplectic::symbolic_involutivity;

fn main() {
    for (name, branch) in [("(1, -1)", branch_main()), ("(1, -1/2)", branch_alt())] {
        let cert = symbolic_involutivity(branch, 0).unwrap();
        println!("branch {name}");
        println!("  generic rank {} with pivot rows {:?}", cert.generic_rank, cert.pivot_rows);
        println!("  degeneracy locus: {}", cert.degeneracy_locus);
        println!("  R identically zero: {}", cert.is_zero);
        if let Some(c) = &cert.consistency {
            println!("  agrees with the kernel at ({}, {}): {}", c.a, c.b, c.agrees);
        }
    }
}
