use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::checks::*;
use super::sampling::{generic_direction, random_config, random_theta};
use super::{error_json, to_value, Check, CliError, Report, RunConfig};
use crate::levels::{
    chart_discriminant, chord_points, ebi_cubic, fiber_count, line_tangency_check, random_line_control,
    reducibility_test, vanishing_order, FiberStatus,
};
use crate::pencil::{
    conic_fibrations, enumerate_lines, singular_members, standard_dp4_quadrics, zeta_numerology, PencilError,
};
use crate::projective::ChartPoint;
use crate::rat::{format_rat, int, Rat};
use crate::sections::{
    assemble_system, kernel_basis, kernel_dimension, rank_cross_check, section_space_dimension, ConstraintSystem,
};
use crate::symplectic::{
    certify_basis, corrupt_basis, frame_identities, random_rat, symbolic_involutivity, InvolutivityCertificate,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Sections,
    Verify,
    Pencil,
    Probe,
    SpecialDirections,
    Dictionary,
    Pipeline,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Sections => "sections",
            Command::Verify => "verify",
            Command::Pencil => "pencil",
            Command::Probe => "probe",
            Command::SpecialDirections => "special-directions",
            Command::Dictionary => "dictionary",
            Command::Pipeline => "pipeline",
        }
    }
}

/// Runs a verb and returns the JSON document with the process exit code.
pub fn run(cmd: Command, cfg: &RunConfig) -> (Value, i32) {
    let res = match cmd {
        Command::Sections => cmd_sections(cfg),
        Command::Verify => cmd_verify(cfg),
        Command::Pencil => cmd_pencil(cfg),
        Command::Probe => cmd_probe(cfg),
        Command::SpecialDirections => cmd_special_directions(cfg),
        Command::Dictionary => cmd_dictionary(cfg),
        Command::Pipeline => cmd_pipeline(cfg),
    };
    match res {
        Ok(rep) => {
            let code = rep.exit_code();
            (to_value(&rep), code)
        }
        Err(e) => (error_json(cmd.name(), &e), e.exit_code()),
    }
}

fn pair(e: &(Rat, Rat)) -> Value {
    json!([format_rat(&e.0), format_rat(&e.1)])
}

fn fixture(cfg: &RunConfig) -> Result<Fixture, CliError> {
    let config = cfg.input.resolve()?;
    Fixture::new(config, cfg.input.theta().map(|t| t.to_vec()))
}

pub fn cmd_sections(cfg: &RunConfig) -> Result<Report, CliError> {
    if cfg.plane_only {
        let sys = ConstraintSystem::plane_only();
        let (rank, rank_p) = rank_cross_check(&sys);
        let dim = kernel_dimension(&sys);
        let result = json!({
            "mode": "plane_only",
            "row_count": sys.len(),
            "kernel_dimension": dim,
            "rank": rank,
            "rank_mod_p": rank_p,
        });
        let checks = vec![Check::new("plane_kernel_27", dim == 27, format!("kernel dimension {dim}"))];
        return Ok(Report::new("sections", cfg, result, checks));
    }
    let config = cfg.input.resolve()?;
    let sys = assemble_system(&config)?;
    let (rank, rank_p) = rank_cross_check(&sys);
    let dim = kernel_dimension(&sys);
    let pts = config.affine_points();
    let prefix: Vec<usize> = (0..=5)
        .map(|k| section_space_dimension(&pts[..k]))
        .collect::<Result<_, _>>()?;
    let basis = kernel_basis(&sys)?;
    let result = json!({
        "mode": "five_points",
        "config": to_value(&config),
        "row_count": sys.len(),
        "kernel_dimension": dim,
        "rank": rank,
        "rank_mod_p": rank_p,
        "prefix_dimensions": prefix,
        "basis": to_value(&basis),
    });
    let checks = vec![
        Check::new("kernel_dimension_2", dim == 2, format!("kernel dimension {dim}")),
        Check::new(
            "rank_cross_check",
            rank_p == Some(rank),
            format!("exact rank {rank}, rank mod p {rank_p:?}"),
        ),
        Check::new("basis_satisfies_rows", sys.annihilates(&basis.h) && sys.annihilates(&basis.g), ""),
    ];
    Ok(Report::new("sections", cfg, result, checks))
}

fn certificate_checks(cert: &InvolutivityCertificate) -> Vec<Check> {
    let vanish = cert.samples.iter().filter(|s| s.value.is_zero()).count();
    let frames = cert.samples.iter().take(3).all(|s| {
        let q = [s.point[0].clone(), s.point[1].clone(), s.point[2].clone(), s.point[3].clone()];
        frame_identities(&cert.basis.h, &cert.basis.g, &q)
    });
    vec![
        Check::new("r_is_zero", cert.is_zero, format!("R has {} terms", cert.r_poly.num_terms())),
        Check::new(
            "samples_vanish",
            vanish == cert.samples.len(),
            format!("{vanish} of {} samples vanish", cert.samples.len()),
        ),
        Check::new("frame_identities", frames, "omega(A,B) = -R(q) and tangency equations"),
    ]
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<Report, CliError> {
    let config = cfg.input.resolve()?;
    let basis = kernel_basis(&assemble_system(&config)?)?;
    let basis = if cfg.corrupt { corrupt_basis(&basis) } else { basis };
    let cert = certify_basis(&basis, cfg.seed);
    let mut checks = certificate_checks(&cert);
    let mut result = json!({ "certificate": to_value(&cert), "corrupted": cfg.corrupt });
    if cfg.symbolic {
        match symbolic_involutivity(crate::pencil::branch_main(), cfg.seed) {
            Ok(s) => {
                checks.push(Check::new(
                    "symbolic_r_is_zero",
                    s.is_zero && s.rows_verified,
                    format!("{} terms", s.r_terms),
                ));
                checks.push(Check::new(
                    "symbolic_consistency",
                    s.consistency.as_ref().is_some_and(|c| c.agrees),
                    "specialization at (2, 3) against the concrete kernel",
                ));
                checks.push(Check::new("degeneracy_locus_nonzero", !s.degeneracy_locus.is_zero(), ""));
                result["symbolic"] = to_value(&s);
            }
            Err(e) => checks.push(Check::new("symbolic_r_is_zero", false, e.to_string())),
        }
    }
    Ok(Report::new("verify", cfg, result, checks))
}

pub fn cmd_pencil(cfg: &RunConfig) -> Result<Report, CliError> {
    let config = cfg.input.resolve()?;
    let mut checks = vec![Check::new("transform_verified", config.verify_transform(), "")];
    let mut result = json!({ "config": to_value(&config) });
    if let Some(theta) = cfg.input.theta() {
        let pencil = standard_dp4_quadrics(theta)?;
        let members = singular_members(&pencil)?;
        result["characteristic_polynomial"] = json!(pencil.characteristic_polynomial()?.to_string());
        result["singular_members"] = to_value(&members);
        checks.push(check_pencil_roots(&[theta.to_vec()]));
    }
    result["numerology"] = to_value(&zeta_numerology(4, 8));
    result["lines"] = to_value(&enumerate_lines());
    result["fibrations"] = to_value(&conic_fibrations());
    checks.push(check_numerology());
    checks.push(check_lines());
    Ok(Report::new("pencil", cfg, result, checks))
}

pub fn cmd_probe(cfg: &RunConfig) -> Result<Report, CliError> {
    let fx = fixture(cfg)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let e = generic_direction(&mut rng, &fx.special.directions);
    let delta = chart_discriminant(&fx.basis, &e)?;
    let orders: Vec<Option<u32>> = fx.config.affine_points().iter().map(|p| vanishing_order(&delta, p)).collect();
    let mut fibers = Vec::new();
    while fibers.len() < 5 {
        let x0 = ChartPoint::affine(random_rat(&mut rng, 50), random_rat(&mut rng, 50));
        if let Ok(r) = fiber_count(&fx.basis, &e, &x0) {
            fibers.push(r);
        }
    }
    let node = &fx.special.witnesses[0][0];
    let at_node = fiber_count(&fx.basis, &fx.special.directions[0], &node.chart_point())?;
    let off_node = fiber_count(&fx.basis, &e, &node.chart_point())?;
    let mut checks = vec![
        Check::new(
            "generic_four_points",
            fibers.iter().all(|f| f.status == FiberStatus::FourPoints && f.involution_is_free()),
            "",
        ),
        Check::new(
            "discriminant_degree",
            delta.degree().unwrap_or(0) <= 8,
            format!("degree {:?}", delta.degree()),
        ),
        Check::new(
            "double_at_points",
            orders.iter().all(|o| o.is_some_and(|o| o >= 2)),
            format!("vanishing orders {orders:?}"),
        ),
        Check::new(
            "whole_line_at_node",
            at_node.status == FiberStatus::WholeLine && off_node.status != FiberStatus::WholeLine,
            format!("node {}", node.label()),
        ),
    ];
    let mut result = json!({
        "direction": pair(&e),
        "discriminant": delta.to_string(),
        "vanishing_orders": orders,
        "fibers": to_value(&fibers),
        "node_fiber": to_value(&at_node),
        "node_fiber_generic_direction": to_value(&off_node),
    });
    if cfg.tangency {
        let mut lines = Vec::new();
        for i in 1..=5 {
            for j in i + 1..=5 {
                lines.push(line_tangency_check(&fx.basis, &fx.config, &e, (i, j))?);
            }
        }
        let control = random_line_control(&fx.basis, &fx.config, &e, 10, cfg.seed)?;
        checks.push(Check::new(
            "line_tangency",
            lines.iter().all(|t| t.tangent() && t.witnesses_on_curve),
            format!("{} lines checked", lines.len()),
        ));
        result["tangency"] = to_value(&lines);
        result["tangency_control"] = to_value(&control);
    }
    Ok(Report::new("probe", cfg, result, checks))
}

pub fn cmd_special_directions(cfg: &RunConfig) -> Result<Report, CliError> {
    let fx = fixture(cfg)?;
    let mut table = Vec::new();
    let mut cubics = Vec::new();
    let mut on_cubic = true;
    let mut unique = true;
    for (k, e) in fx.special.directions.iter().enumerate() {
        let red = reducibility_test(&fx.basis, e)?;
        let cubic = ebi_cubic(&fx.config, k + 1)?;
        unique &= cubic.with_point_dim == 1;
        let agrees = match (&red.monic_sqrt, &cubic.cubic) {
            (Some(s), Some(c)) => {
                let pts = chord_points(c, &fx.config.affine_points(), 6);
                !pts.is_empty() && pts.iter().all(|p| s.eval_at(&[p.0.clone(), p.1.clone()]).is_zero())
            }
            _ => false,
        };
        on_cubic &= agrees;
        table.push(to_value(&red));
        cubics.push(json!({ "report": to_value(&cubic), "sqrt_vanishes_on_cubic": agrees }));
    }
    let checks = vec![
        check_special_directions(&fx, cfg.seed),
        check_fiber_dichotomy(&fx, cfg.seed, 10),
        Check::new("cubic_with_point_unique", unique, "nine conditions leave one cubic for every i"),
        Check::new("sqrt_vanishes_on_cubic", on_cubic, "checked at chord points of each cubic"),
    ];
    let result = json!({
        "special_directions": to_value(&fx.special),
        "reducibility": table,
        "cubics": cubics,
    });
    Ok(Report::new("special-directions", cfg, result, checks))
}

pub fn cmd_dictionary(cfg: &RunConfig) -> Result<Report, CliError> {
    let Some(theta) = cfg.input.theta() else {
        return Err(CliError::Input("dictionary requires a theta input".into()));
    };
    let fx = fixture(cfg)?;
    let rep = crate::levels::dictionary(&fx.special.directions, theta);
    let result = json!({
        "directions": fx.special.directions.iter().map(pair).collect::<Vec<_>>(),
        "dictionary": to_value(&rep),
    });
    Ok(Report::new("dictionary", cfg, result, vec![check_dictionary(&fx)]))
}

/// Every acceptance check, in order, from a theta input.
pub fn cmd_pipeline(cfg: &RunConfig) -> Result<Report, CliError> {
    let Some(theta) = cfg.input.theta() else {
        return Err(CliError::Input("pipeline requires a theta input".into()));
    };
    let pencil = standard_dp4_quadrics(theta)?;
    let members = singular_members(&pencil).map_err(|e: PencilError| CliError::from(e))?;
    let fx = fixture(cfg)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut configs = vec![fx.config.clone()];
    configs.extend((0..20).map(|_| random_config(&mut rng)));
    let mut thetas = vec![theta.to_vec()];
    thetas.extend((0..20).map(|_| random_theta(&mut rng)));
    let theta6 = theta.iter().max().cloned().unwrap_or_else(Rat::zero) + int(1);

    let mut checks = vec![
        check_plane_kernel(),
        check_kernel_dimension(&configs),
        check_involutivity(&configs, cfg.seed),
    ];
    if cfg.symbolic {
        checks.push(check_symbolic(cfg.seed));
    }
    checks.extend([
        check_numerology(),
        check_pencil_roots(&thetas),
        check_lines(),
        check_fiber_dichotomy(&fx, cfg.seed, 50),
        check_special_directions(&fx, cfg.seed),
        check_dictionary(&fx),
        check_branch_span(theta, &theta6),
        check_tangency(&fx, cfg.seed),
    ]);

    let cert = certify_basis(&fx.basis, cfg.seed);
    let reducibility: Vec<Value> = fx
        .special
        .directions
        .iter()
        .map(|e| reducibility_test(&fx.basis, e).map(|r| to_value(&r)))
        .collect::<Result<_, _>>()?;
    let result = json!({
        "sections_summary": {
            "config": to_value(&fx.config),
            "kernel_dimension": 2,
            "basis": to_value(&fx.basis),
            "random_configs": configs.len() - 1,
        },
        "involutivity_certificate": to_value(&cert),
        "pencil_summary": {
            "characteristic_polynomial": pencil.characteristic_polynomial()?.to_string(),
            "singular_members": to_value(&members),
        },
        "special_directions": to_value(&fx.special),
        "reducibility_table": reducibility,
    });
    Ok(Report::new("pipeline", cfg, result, checks))
}
