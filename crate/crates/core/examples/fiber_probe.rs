//! Fibers of the level map over single points of the surface.

use dp4_lagrange::levels::{fiber_count, special_directions};
use dp4_lagrange::pencil::PointConfig;
use dp4_lagrange::projective::ChartPoint;
use dp4_lagrange::rat::{int, rat};
use dp4_lagrange::sections::{assemble_system, kernel_basis};

fn main() {
    let config = PointConfig::from_ab(rat(-1, 5), rat(9, 5)).unwrap();
    let basis = kernel_basis(&assemble_system(&config).unwrap()).unwrap();

    let e = (int(3), int(-2));
    let r = fiber_count(&basis, &e, &ChartPoint::affine(rat(2, 3), int(5))).unwrap();
    println!("{}", serde_json::to_string_pretty(&r).unwrap());

    let sd = special_directions(&basis, &config).unwrap();
    let node = &sd.witnesses[0][0];
    for (k, d) in sd.directions.iter().enumerate() {
        let r = fiber_count(&basis, d, &node.chart_point()).unwrap();
        println!("node {} with direction {}: {:?}", node.label(), k + 1, r.status);
    }
}
