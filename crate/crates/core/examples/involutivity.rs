//! The bracket of the two sections vanishes identically; a perturbed basis
//! does not pass.

use dp4_lagrange::pencil::PointConfig;
use dp4_lagrange::rat::rat;
use dp4_lagrange::symplectic::{certify_basis, corrupt_basis, frame_identities, involutivity_certificate};

fn main() {
    let config = PointConfig::from_ab(rat(-1, 5), rat(9, 5)).unwrap();
    let cert = involutivity_certificate(&config, 7).unwrap();
    println!("R = {}", cert.r_poly);
    for s in &cert.samples {
        let q: Vec<String> = s.point.iter().map(|r| r.to_string()).collect();
        println!("  R({}) = {}", q.join(", "), s.value);
    }
    let q = [rat(1, 3), rat(-2, 7), rat(5, 1), rat(1, 2)];
    println!("frame identities at a sample point: {}", frame_identities(&cert.basis.h, &cert.basis.g, &q));

    let bad = certify_basis(&corrupt_basis(&cert.basis), 7);
    println!("corrupted basis passes: {} ({} terms in R)", bad.passes(), bad.r_poly.num_terms());
}
