//! Runs the twelve acceptance criteria and prints one line per criterion.
//!
//! Each criterion recomputes its claim through a second route where one
//! exists. The process fails if any criterion other than the branch-span
//! statement fails; that statement is checked literally and reported as is.

use std::collections::BTreeSet;
use std::process::ExitCode;

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dp4_lagrange::cli::{generic_direction, random_config, random_theta};
use dp4_lagrange::levels::{
    branch_quadrics, chart_discriminant, cross_ratio, dictionary, fiber_count, line_tangency_check, node_points,
    reducibility_test, restrict_to_line, special_directions, FiberStatus,
};
use dp4_lagrange::linalg::{kernel, rank_mod_p, Matrix, MERSENNE_61};
use dp4_lagrange::pencil::{
    branch_main, brute_force_lines, conic_fibrations, enumerate_lines, normalize_config, singular_members,
    standard_dp4_quadrics, veronese_points, vmrt_classes, zeta_numerology, PointConfig,
};
use dp4_lagrange::projective::{det3, ChartPoint};
use dp4_lagrange::rat::{int, Rat};
use dp4_lagrange::sections::{
    assemble_system, kernel_basis, p2_constraints, ConstraintSystem, SectionBasis, SymField,
};
use dp4_lagrange::symplectic::{
    hamiltonian_frame, involutivity_certificate, omega_pairing, poisson_r, random_rat, sample_points,
    symbolic_involutivity,
};

const SEED: u64 = 2024;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn theta0() -> Vec<Rat> {
    [0, 1, -1, 2, -2].into_iter().map(int).collect()
}

fn fixture_config() -> PointConfig {
    normalize_config(&veronese_points(&theta0())).unwrap()
}

fn basis_of(cfg: &PointConfig) -> SectionBasis {
    kernel_basis(&assemble_system(cfg).unwrap()).unwrap()
}

fn configs() -> Vec<PointConfig> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out = vec![fixture_config()];
    out.extend((0..20).map(|_| random_config(&mut rng)));
    out
}

fn plane_kernel() -> Outcome {
    let sys = ConstraintSystem::plane_only();
    let m = sys.matrix();
    let k = kernel(&m);
    // every kernel vector must satisfy each plane form evaluated on the field
    let forms = p2_constraints();
    let sound = k.iter().all(|v| {
        let f = SymField::from_slots(v);
        forms.iter().all(|l| l.eval(&f).is_zero())
    });
    let independent = Matrix::from_rows(k.clone()).rank() == k.len();
    let modp = rank_mod_p(&m, MERSENNE_61);
    outcome(
        k.len() == 27 && sound && independent && modp == Some(18),
        format!("kernel dimension {}, rank mod p {:?}", k.len(), modp),
    )
}

fn kernel_dimension_two(cfgs: &[PointConfig]) -> Outcome {
    let mut bad = 0;
    for cfg in cfgs {
        let sys = assemble_system(cfg).unwrap();
        let m = sys.matrix();
        let dim = kernel(&m).len();
        let modp = rank_mod_p(&m, MERSENNE_61);
        // a section vanishes as a tensor at each blown-up point
        let vanish = kernel_basis(&sys).is_ok_and(|b| {
            cfg.affine_points()
                .iter()
                .all(|(x, y)| b.h.at(x, y).iter().chain(b.g.at(x, y).iter()).all(Zero::is_zero))
        });
        if dim != 2 || modp != Some(43) || !vanish {
            bad += 1;
        }
    }
    outcome(
        bad == 0,
        format!("{} configurations, {bad} without a two-dimensional kernel", cfgs.len()),
    )
}

fn involutivity(cfgs: &[PointConfig]) -> Outcome {
    let mut bad = 0;
    for (k, cfg) in cfgs.iter().enumerate() {
        let cert = involutivity_certificate(cfg, SEED + k as u64).unwrap();
        // second route: the symplectic pairing of the Hamiltonian frame
        let frame_zero = sample_points(SEED ^ k as u64, 10, &cert.basis.points).iter().all(|q| {
            let (a, b) = hamiltonian_frame(&cert.basis.h, &cert.basis.g, q);
            omega_pairing(&a, &b).is_zero()
        });
        if !cert.passes() || !frame_zero {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("{} configurations, {bad} with R not identically zero", cfgs.len()))
}

fn symbolic() -> Outcome {
    let cert = match symbolic_involutivity(branch_main(), SEED) {
        Ok(c) => c,
        Err(e) => return outcome(false, e.to_string()),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut spot = 0;
    let mut spot_ok = true;
    while spot < 5 {
        let (a, b) = (random_rat(&mut rng, 30), random_rat(&mut rng, 30));
        if cert.degeneracy_locus.eval_at(&[a.clone(), b.clone()]).is_zero() {
            continue;
        }
        let Ok(cfg) = PointConfig::from_ab(a.clone(), b.clone()) else {
            continue;
        };
        let (h, g) = cert.specialize(&a, &b);
        let concrete = basis_of(&cfg);
        let stacked = Matrix::from_rows(vec![h.slots(), g.slots(), concrete.h.slots(), concrete.g.slots()]);
        spot_ok &= poisson_r(&h, &g).is_zero() && stacked.rank() == 2;
        spot += 1;
    }
    outcome(
        cert.passes() && !cert.degeneracy_locus.is_zero() && spot_ok,
        format!(
            "R over Q[a,b] zero: {}; degeneracy locus degree {:?}; specializations agree: {spot_ok}",
            cert.is_zero,
            cert.degeneracy_locus.degree()
        ),
    )
}

fn numerology() -> Outcome {
    let (k2, c2) = (4, 8);
    let z = zeta_numerology(k2, c2);
    let zeta3 = k2 - c2;
    let vmrt = (1..=5).all(|i| {
        let (a, b) = vmrt_classes(i);
        let s: Vec<i64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        s == [2, 0, 0, 0, 0, 0, 0]
    });
    outcome(
        z.zeta_cubed == -4
            && zeta3 == -4
            && z.base_multiplicity == Some(1)
            && -4 * zeta3 == 16
            && z.euler_number == 2 * 8 + 32
            && z.euler_number == 48
            && vmrt,
        format!(
            "zeta^3 = {}, multiplicities {:?}, euler {}, class sums {vmrt}",
            z.zeta_cubed, z.base_multiplicity, z.euler_number
        ),
    )
}

fn pencil() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut bad = 0;
    for _ in 0..20 {
        let theta = random_theta(&mut rng);
        let p = standard_dp4_quadrics(&theta).unwrap();
        let ok = singular_members(&p).is_ok_and(|m| {
            let got: BTreeSet<_> = m.iter().map(|s| s.theta.clone()).collect();
            let want: BTreeSet<_> = theta.iter().cloned().collect();
            got == want && m.iter().all(|s| s.rank == 4)
        });
        // direct determinant and rank at each theta
        let direct = theta.iter().all(|t| {
            let member = p.q1.scale(t).sub(&p.q2);
            member.determinant().is_zero() && rank_mod_p(&member, MERSENNE_61) == Some(4)
        });
        if !ok || !direct {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("20 random parameter tuples, {bad} mismatches"))
}

fn lines() -> Outcome {
    let found: BTreeSet<_> = brute_force_lines(3, 3).into_iter().collect();
    let listed: BTreeSet<_> = enumerate_lines().iter().map(|l| l.class()).collect();
    let all: BTreeSet<_> = enumerate_lines().into_iter().collect();
    let fibs = conic_fibrations();
    let partition = (1..=5).all(|i| {
        let ls: Vec<_> = fibs.iter().filter(|f| f.i == i).flat_map(|f| f.lines()).collect();
        ls.len() == 16 && ls.iter().copied().collect::<BTreeSet<_>>() == all
    });
    outcome(
        found.len() == 16 && found == listed && partition,
        format!("{} classes found; fibrations partition the lines: {partition}", found.len()),
    )
}

fn fiber_dichotomy(cfg: &PointConfig, basis: &SectionBasis) -> Outcome {
    let sd = special_directions(basis, cfg).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let pts = cfg.normalized_points();
    let mut generic_bad = 0;
    let mut sampled = 0;
    while sampled < 60 {
        let x0 = ChartPoint::affine(random_rat(&mut rng, 50), random_rat(&mut rng, 50));
        // points on a line through two blown-up points are not generic
        let p = x0.to_projective();
        if (0..5).any(|i| (i + 1..5).any(|j| det3(&pts[i], &pts[j], &p).is_zero())) {
            continue;
        }
        sampled += 1;
        let e = generic_direction(&mut rng, &sd.directions);
        let r = fiber_count(basis, &e, &x0).unwrap();
        let delta = chart_discriminant(basis, &e).unwrap();
        let disc_agrees = delta.eval_at(&[x0.coords.0.clone(), x0.coords.1.clone()]) == r.discriminant;
        if r.status != FiberStatus::FourPoints || !r.involution_is_free() || !disc_agrees {
            generic_bad += 1;
        }
    }
    let mut grid_bad = 0;
    let nodes = node_points(cfg);
    for node in &nodes {
        for (k, e) in sd.directions.iter().enumerate() {
            let whole = fiber_count(basis, e, &node.chart_point()).unwrap().status == FiberStatus::WholeLine;
            if whole != (node.i == k + 1) {
                grid_bad += 1;
            }
        }
    }
    outcome(
        generic_bad == 0 && grid_bad == 0 && nodes.len() == 15,
        format!("60 generic fibers ({generic_bad} bad); {}x5 grid ({grid_bad} bad)", nodes.len()),
    )
}

fn five_directions(cfg: &PointConfig, basis: &SectionBasis) -> Outcome {
    let sd = special_directions(basis, cfg).unwrap();
    let distinct: BTreeSet<_> = sd.directions.iter().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 9);
    let mut sample = sd.directions.clone();
    while sample.len() < 15 {
        let e = generic_direction(&mut rng, &sample);
        sample.push(e);
    }
    let mut reducible = Vec::new();
    let mut sound = true;
    for e in &sample {
        let r = reducibility_test(basis, e).unwrap();
        if let Some(s) = &r.sqrt {
            sound &= &(s * s) == &chart_discriminant(basis, e).unwrap();
        }
        reducible.push(r.reducible);
    }
    let count = reducible.iter().filter(|&&r| r).count();
    outcome(
        distinct.len() == 5 && reducible[..5].iter().all(|&r| r) && count == 5 && sound,
        format!("{} distinct directions; {count} of 15 sampled have square discriminant", distinct.len()),
    )
}

fn dictionary_check(cfg: &PointConfig, basis: &SectionBasis) -> Outcome {
    let theta = theta0();
    let sd = special_directions(basis, cfg).unwrap();
    let rep = dictionary(&sd.directions, &theta);
    let zero = rep.matches.iter().all(|m| m.residuals.iter().all(Zero::is_zero));
    // independent: cross-ratios under the first reported matching
    let targets: Vec<(Rat, Rat)> = theta.iter().map(|t| (int(1), t.clone())).collect();
    let cr_ok = rep.matches.first().is_some_and(|m| {
        let d = |k: usize| &sd.directions[k];
        let w = |k: usize| &targets[m.perm[k]];
        cross_ratio([d(0), d(1), d(2), d(3)]) == cross_ratio([w(0), w(1), w(2), w(3)])
            && cross_ratio([d(1), d(2), d(3), d(4)]) == cross_ratio([w(1), w(2), w(3), w(4)])
    });
    outcome(
        rep.consistent && zero && cr_ok,
        format!("{} consistent matchings; held-out residuals zero: {zero}", rep.matches.len()),
    )
}

fn branch_span() -> Outcome {
    let theta = theta0();
    let theta6 = int(3);
    let q = branch_quadrics(&theta, &theta6).unwrap();
    let p = standard_dp4_quadrics(&theta).unwrap();
    let pair: Vec<Vec<Rat>> = vec![
        (0..5).map(|k| p.q1[(k, k)].clone()).collect(),
        (0..5).map(|k| p.q2[(k, k)].clone()).collect(),
    ];
    let rank = |rows: Vec<Vec<Rat>>| Matrix::from_rows(rows).rank();
    let r_two = rank(q.diagonals[..2].to_vec());
    let r_pair = rank(pair.clone());
    let r_stack = rank([q.diagonals[..2].to_vec(), pair.clone()].concat());
    let r_three = rank(q.diagonals.clone());
    let r_three_stack = rank([q.diagonals.clone(), pair].concat());
    outcome(
        r_two == 2 && r_pair == 2 && r_stack == 2,
        format!(
            "ranks: first two {r_two}, pair {r_pair}, stacked {r_stack}; all three {r_three}, with pair {r_three_stack}"
        ),
    )
}

fn tangency(cfg: &PointConfig, basis: &SectionBasis) -> Outcome {
    let sd = special_directions(basis, cfg).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 12);
    let e = generic_direction(&mut rng, &sd.directions);
    let delta = chart_discriminant(basis, &e).unwrap();
    let pts = cfg.affine_points();
    let mut bad = Vec::new();
    for i in 1..=5 {
        for j in i + 1..=5 {
            let t = line_tangency_check(basis, cfg, &e, (i, j)).unwrap();
            // the restricted discriminant and its derivative both vanish at
            // each witness
            let r = restrict_to_line(&delta, &pts[i - 1], &pts[j - 1]);
            let dr = r.derivative();
            let double = t.witnesses.iter().all(|s| r.eval(s).is_zero() && dr.eval(s).is_zero());
            if !t.tangent() || !t.witnesses_on_curve || !double {
                bad.push(format!("l{i}{j}"));
            }
        }
    }
    outcome(bad.is_empty(), format!("10 lines; without repeated root: {bad:?}"))
}

fn main() -> ExitCode {
    let cfgs = configs();
    let cfg = fixture_config();
    let basis = basis_of(&cfg);
    type Criterion<'a> = (usize, &'a str, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        (1, "plane-only kernel has dimension 27", Box::new(plane_kernel)),
        (2, "five-point kernel has dimension 2", Box::new(|| kernel_dimension_two(&cfgs))),
        (3, "bracket of the two sections vanishes", Box::new(|| involutivity(&cfgs))),
        (4, "symbolic bracket vanishes over Q[a,b]", Box::new(symbolic)),
        (5, "intersection numerology", Box::new(numerology)),
        (6, "pencil roots and corank", Box::new(pencil)),
        (7, "sixteen lines and fibration partitions", Box::new(lines)),
        (8, "fiber dichotomy", Box::new(|| fiber_dichotomy(&cfg, &basis))),
        (9, "five special directions", Box::new(|| five_directions(&cfg, &basis))),
        (10, "Mobius dictionary", Box::new(|| dictionary_check(&cfg, &basis))),
        (11, "branch quadrics span the surface pencil", Box::new(branch_span)),
        (12, "line tangency of the discriminant", Box::new(|| tangency(&cfg, &basis))),
    ];
    let mut unexpected = Vec::new();
    for (n, name, run) in &criteria {
        let o = run();
        println!("criterion {n:>2} [{}] {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if !o.pass && *n != 11 {
            unexpected.push(*n);
        }
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected failures: {unexpected:?}");
        ExitCode::FAILURE
    }
}
