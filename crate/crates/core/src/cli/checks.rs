//! One named check per verified property, shared by the verbs and the
//! pipeline.

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::sampling::generic_direction;
use super::{Check, CliError};
use crate::levels::{
    branch_quadrics, dictionary, fiber_count, line_tangency_check, node_points, reducibility_test, span_contains,
    span_equal, special_directions, FiberStatus, SpecialDirections,
};
use crate::pencil::{
    brute_force_lines, conic_fibrations, enumerate_lines, singular_members, standard_dp4_quadrics, vmrt_class_sum,
    zeta_numerology, PointConfig,
};
use crate::projective::ChartPoint;
use crate::rat::{format_rat, Rat};
use crate::sections::{
    assemble_system, kernel_basis, kernel_dimension, rank_cross_check, ConstraintSystem, SectionBasis,
};
use crate::symplectic::{involutivity_certificate, random_rat, symbolic_involutivity};

/// A configuration with its sections and special directions.
pub struct Fixture {
    pub theta: Option<Vec<Rat>>,
    pub config: PointConfig,
    pub basis: SectionBasis,
    pub special: SpecialDirections,
}

impl Fixture {
    pub fn new(config: PointConfig, theta: Option<Vec<Rat>>) -> Result<Self, CliError> {
        let basis = kernel_basis(&assemble_system(&config)?)?;
        let special = special_directions(&basis, &config)?;
        Ok(Fixture {
            theta,
            config,
            basis,
            special,
        })
    }
}

pub fn check_plane_kernel() -> Check {
    let sys = ConstraintSystem::plane_only();
    let (rank, rank_p) = rank_cross_check(&sys);
    let dim = kernel_dimension(&sys);
    Check::new(
        "plane_kernel_27",
        dim == 27 && rank == 18 && rank_p == Some(18),
        format!("kernel dimension {dim}, rank {rank}, rank mod p {rank_p:?}"),
    )
}

pub fn check_kernel_dimension(configs: &[PointConfig]) -> Check {
    let mut bad = Vec::new();
    for (k, cfg) in configs.iter().enumerate() {
        let dim = assemble_system(cfg).map(|s| kernel_dimension(&s));
        if dim.as_ref().ok() != Some(&2) {
            bad.push(format!("config {k}: {dim:?}"));
        }
    }
    Check::new(
        "kernel_dimension_2",
        bad.is_empty(),
        if bad.is_empty() {
            format!("dimension 2 for all {} configurations", configs.len())
        } else {
            bad.join("; ")
        },
    )
}

pub fn check_involutivity(configs: &[PointConfig], seed: u64) -> Check {
    let mut bad = Vec::new();
    for (k, cfg) in configs.iter().enumerate() {
        match involutivity_certificate(cfg, seed) {
            Ok(c) if c.passes() => {}
            Ok(c) => bad.push(format!("config {k}: R has {} terms", c.r_poly.num_terms())),
            Err(e) => bad.push(format!("config {k}: {e}")),
        }
    }
    Check::new(
        "involutivity",
        bad.is_empty(),
        if bad.is_empty() {
            format!("R = 0 for all {} configurations", configs.len())
        } else {
            bad.join("; ")
        },
    )
}

pub fn check_symbolic(seed: u64) -> Check {
    match symbolic_involutivity(crate::pencil::branch_main(), seed) {
        Ok(c) => Check::new(
            "symbolic_involutivity",
            c.passes() && !c.degeneracy_locus.is_zero(),
            format!(
                "R over Q[a,b] has {} terms; degeneracy locus of degree {:?}",
                c.r_terms,
                c.degeneracy_locus.degree()
            ),
        ),
        Err(e) => Check::new("symbolic_involutivity", false, e.to_string()),
    }
}

pub fn check_numerology() -> Check {
    let z = zeta_numerology(4, 8);
    let vmrt = (1..=5).all(vmrt_class_sum);
    Check::new(
        "numerology",
        z.zeta_cubed == -4 && z.base_multiplicity == Some(1) && z.euler_number == 48 && vmrt,
        format!(
            "zeta^3 = {}, base multiplicity {:?}, euler number {}, VMRT sums {}",
            z.zeta_cubed, z.base_multiplicity, z.euler_number, vmrt
        ),
    )
}

pub fn check_pencil_roots(thetas: &[Vec<Rat>]) -> Check {
    let mut bad = Vec::new();
    for theta in thetas {
        let res = standard_dp4_quadrics(theta).and_then(|p| singular_members(&p));
        let ok = match &res {
            Ok(members) => {
                let mut got: Vec<Rat> = members.iter().map(|m| m.theta.clone()).collect();
                let mut want = theta.clone();
                got.sort();
                want.sort();
                got == want && members.iter().all(|m| m.rank == 4)
            }
            Err(_) => false,
        };
        if !ok {
            bad.push(theta.iter().map(format_rat).collect::<Vec<_>>().join(","));
        }
    }
    Check::new(
        "pencil_roots",
        bad.is_empty(),
        if bad.is_empty() {
            format!("roots and corank one for {} tuples", thetas.len())
        } else {
            format!("failed for {}", bad.join(" | "))
        },
    )
}

pub fn check_lines() -> Check {
    let found: BTreeSet<_> = brute_force_lines(3, 3).into_iter().collect();
    let expected: BTreeSet<_> = enumerate_lines().into_iter().map(|l| l.class()).collect();
    let all: BTreeSet<_> = enumerate_lines().into_iter().collect();
    let fibs = conic_fibrations();
    let partition = (1..=5).all(|i| {
        let lines: Vec<_> = fibs.iter().filter(|f| f.i == i).flat_map(|f| f.lines()).collect();
        let set: BTreeSet<_> = lines.iter().copied().collect();
        lines.len() == 16 && set == all
    });
    Check::new(
        "lines_and_fibrations",
        found == expected && found.len() == 16 && partition && fibs.len() == 10,
        format!(
            "{} classes from search, {} fibrations, partition {}",
            found.len(),
            fibs.len(),
            partition
        ),
    )
}

/// Generic fibers have four points with a free involution, and the pencil
/// member vanishes on a whole fiber exactly at a node paired with its own
/// direction.
pub fn check_fiber_dichotomy(fx: &Fixture, seed: u64, samples: usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut generic_bad = 0;
    let mut generic_done = 0;
    while generic_done < samples {
        let x0 = ChartPoint::affine(random_rat(&mut rng, 50), random_rat(&mut rng, 50));
        if fx.basis.points.contains(&x0.coords) {
            continue;
        }
        let e = generic_direction(&mut rng, &fx.special.directions);
        match fiber_count(&fx.basis, &e, &x0) {
            Ok(r) if r.status == FiberStatus::FourPoints && r.involution_is_free() => {}
            _ => generic_bad += 1,
        }
        generic_done += 1;
    }
    let mut grid_bad = Vec::new();
    for node in node_points(&fx.config) {
        for (k, e) in fx.special.directions.iter().enumerate() {
            let whole = fiber_count(&fx.basis, e, &node.chart_point())
                .map(|r| r.status == FiberStatus::WholeLine)
                .unwrap_or(false);
            if whole != (node.i == k + 1) {
                grid_bad.push(format!("{} with direction {}", node.label(), k + 1));
            }
        }
    }
    Check::new(
        "fiber_dichotomy",
        generic_bad == 0 && grid_bad.is_empty(),
        format!(
            "{generic_bad} of {samples} generic fibers not four_points; grid mismatches: [{}]",
            grid_bad.join(", ")
        ),
    )
}

pub fn check_special_directions(fx: &Fixture, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut sample = fx.special.directions.clone();
    while sample.len() < 15 {
        let e = generic_direction(&mut rng, &sample);
        sample.push(e);
    }
    let verdicts: Vec<bool> = sample
        .iter()
        .map(|e| reducibility_test(&fx.basis, e).map(|r| r.reducible).unwrap_or(false))
        .collect();
    let special_ok = verdicts[..5].iter().all(|&v| v);
    let count = verdicts.iter().filter(|&&v| v).count();
    let distinct: BTreeSet<_> = fx.special.directions.iter().collect();
    Check::new(
        "special_directions",
        distinct.len() == 5 && special_ok && count == 5,
        format!(
            "{} distinct directions; {count} of {} sampled directions have a square discriminant",
            distinct.len(),
            sample.len()
        ),
    )
}

pub fn check_dictionary(fx: &Fixture) -> Check {
    let Some(theta) = &fx.theta else {
        return Check::new("dictionary", false, "requires theta input");
    };
    let rep = dictionary(&fx.special.directions, theta);
    let perms: Vec<String> = rep
        .matches
        .iter()
        .map(|m| m.perm.iter().map(|k| (k + 1).to_string()).collect::<Vec<_>>().join(""))
        .collect();
    Check::new(
        "dictionary",
        rep.consistent,
        format!("{} consistent matchings: [{}]", rep.matches.len(), perms.join(", ")),
    )
}

/// The first two branch quadrics against the defining pair of the surface,
/// compared as spans.
pub fn check_branch_span(theta: &[Rat], theta6: &Rat) -> Check {
    let q = match branch_quadrics(theta, theta6) {
        Ok(q) => q,
        Err(e) => return Check::new("branch_span", false, e.to_string()),
    };
    let pencil = standard_dp4_quadrics(theta).expect("distinct theta");
    let pair = vec![
        (0..5).map(|k| pencil.q1[(k, k)].clone()).collect::<Vec<_>>(),
        (0..5).map(|k| pencil.q2[(k, k)].clone()).collect(),
    ];
    let equal = span_equal(&q.diagonals[..2], &pair);
    let in_three = span_contains(&q.diagonals, &pair);
    Check::new(
        "branch_span",
        equal,
        format!(
            "span of first two equals pair: {equal}; pair inside span of all three: {in_three}; theta6 = {}",
            format_rat(theta6)
        ),
    )
}

pub fn check_tangency(fx: &Fixture, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7a9);
    let e = generic_direction(&mut rng, &fx.special.directions);
    let mut bad = Vec::new();
    for i in 1..=5 {
        for j in i + 1..=5 {
            match line_tangency_check(&fx.basis, &fx.config, &e, (i, j)) {
                Ok(t) if t.tangent() && t.witnesses_on_curve => {}
                _ => bad.push(format!("l{i}{j}")),
            }
        }
    }
    Check::new(
        "line_tangency",
        bad.is_empty(),
        format!(
            "direction ({}, {}); lines without a repeated root: [{}]",
            format_rat(&e.0),
            format_rat(&e.1),
            bad.join(", ")
        ),
    )
}
