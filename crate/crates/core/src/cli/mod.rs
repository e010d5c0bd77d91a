//! Configuration files, JSON reports and the verbs of the `dp4` binary.
//!
//! Reports carry `schema_version`, echo their input, list named checks and
//! set `overall_pass` to their conjunction. Exit codes: 0 when every check
//! passes, 1 when a mathematical check fails, 2 for invalid input.

mod checks;
mod commands;
mod sampling;

pub use checks::{
    check_branch_span, check_dictionary, check_fiber_dichotomy, check_involutivity, check_kernel_dimension,
    check_lines, check_numerology, check_pencil_roots, check_plane_kernel, check_special_directions,
    check_symbolic, check_tangency, Fixture,
};
pub use commands::{
    cmd_dictionary, cmd_pencil, cmd_pipeline, cmd_probe, cmd_sections, cmd_special_directions, cmd_verify, run,
    Command,
};
pub use sampling::{generic_direction, random_config, random_theta};

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::levels::LevelsError;
use crate::pencil::{normalize_config, veronese_points, PencilError, PointConfig};
use crate::projective::ProjPoint;
use crate::rat::{format_rat, int, Rat, RatLiteral};
use crate::sections::SectionError;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("{0}")]
    Math(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Math(_) => 1,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Input(_) => "invalid_input",
            CliError::Math(_) => "check_failed",
        }
    }
}

impl From<PencilError> for CliError {
    fn from(e: PencilError) -> Self {
        match e {
            PencilError::ThetaCount(_)
            | PencilError::RepeatedTheta(_)
            | PencilError::PointCount(_)
            | PencilError::Geometry(_)
            | PencilError::NoRationalNormalForm => CliError::Input(e.to_string()),
            _ => CliError::Math(e.to_string()),
        }
    }
}

impl From<SectionError> for CliError {
    fn from(e: SectionError) -> Self {
        match e {
            SectionError::Geometry(_) => CliError::Input(e.to_string()),
            _ => CliError::Math(e.to_string()),
        }
    }
}

impl From<LevelsError> for CliError {
    fn from(e: LevelsError) -> Self {
        match e {
            LevelsError::Pencil(p) => p.into(),
            LevelsError::Section(s) => s.into(),
            LevelsError::RepeatedTheta(_) | LevelsError::BadIndex(_) => CliError::Input(e.to_string()),
            _ => CliError::Math(e.to_string()),
        }
    }
}

/// Exactly one of the three input forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputForm {
    Theta(Vec<Rat>),
    Points(Vec<ProjPoint>),
    Ab(Rat, Rat),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    theta: Option<Vec<RatLiteral>>,
    points: Option<Vec<Vec<RatLiteral>>>,
    ab: Option<Vec<RatLiteral>>,
}

fn rats(v: Vec<RatLiteral>) -> Result<Vec<Rat>, CliError> {
    v.into_iter()
        .map(|r| r.into_rat().map_err(|e| CliError::Input(e.to_string())))
        .collect()
}

impl InputForm {
    pub fn default_theta() -> Self {
        InputForm::Theta([0, 1, -1, 2, -2].into_iter().map(int).collect())
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let file: ConfigFile = serde_json::from_str(text).map_err(|e| CliError::Input(format!("parse error: {e}")))?;
        let present = [file.theta.is_some(), file.points.is_some(), file.ab.is_some()];
        if present.iter().filter(|&&p| p).count() != 1 {
            return Err(CliError::Input(
                "config must contain exactly one of \"theta\", \"points\", \"ab\"".into(),
            ));
        }
        if let Some(t) = file.theta {
            return Ok(InputForm::Theta(rats(t)?));
        }
        if let Some(ps) = file.points {
            let pts = ps
                .into_iter()
                .map(|p| {
                    let v = rats(p)?;
                    <[Rat; 3]>::try_from(v).map_err(|_| CliError::Input("points must be homogeneous triples".into()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(InputForm::Points(pts));
        }
        let ab = rats(file.ab.expect("one form present"))?;
        match <[Rat; 2]>::try_from(ab) {
            Ok([a, b]) => Ok(InputForm::Ab(a, b)),
            Err(_) => Err(CliError::Input("\"ab\" must have two entries".into())),
        }
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text =
            std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn to_json(&self) -> Value {
        let v = |r: &[Rat]| r.iter().map(format_rat).collect::<Vec<_>>();
        match self {
            InputForm::Theta(t) => json!({ "theta": v(t) }),
            InputForm::Points(ps) => json!({ "points": ps.iter().map(|p| v(p)).collect::<Vec<_>>() }),
            InputForm::Ab(a, b) => json!({ "ab": [format_rat(a), format_rat(b)] }),
        }
    }

    pub fn theta(&self) -> Option<&[Rat]> {
        match self {
            InputForm::Theta(t) => Some(t),
            _ => None,
        }
    }

    /// The normalized five-point configuration.
    pub fn resolve(&self) -> Result<PointConfig, CliError> {
        Ok(match self {
            InputForm::Theta(t) => {
                crate::pencil::standard_dp4_quadrics(t)?;
                normalize_config(&veronese_points(t))?
            }
            InputForm::Points(ps) => {
                if ps.len() != 5 {
                    return Err(PencilError::PointCount(ps.len()).into());
                }
                normalize_config(ps)?
            }
            InputForm::Ab(a, b) => PointConfig::from_ab(a.clone(), b.clone())?,
        })
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub input: InputForm,
    pub seed: u64,
    pub symbolic: bool,
    pub tangency: bool,
    pub plane_only: bool,
    /// Negative control: shift one coefficient of `H` before certifying.
    pub corrupt: bool,
    pub output_path: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            input: InputForm::default_theta(),
            seed: 0,
            symbolic: false,
            tangency: false,
            plane_only: false,
            corrupt: false,
            output_path: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub seed: u64,
    pub input: Value,
    pub result: Value,
    pub checks: Vec<Check>,
    pub overall_pass: bool,
}

impl Report {
    pub fn new(command: &'static str, run: &RunConfig, result: Value, checks: Vec<Check>) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command,
            seed: run.seed,
            input: run.input.to_json(),
            overall_pass: checks.iter().all(|c| c.pass),
            result,
            checks,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.overall_pass {
            0
        } else {
            1
        }
    }

    pub fn failed(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect()
    }
}

/// JSON object emitted when a command cannot produce a report.
pub fn error_json(command: &str, err: &CliError) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "error": { "kind": err.kind(), "message": err.to_string() },
        "overall_pass": false,
    })
}

pub(crate) fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}
