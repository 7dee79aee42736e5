//! Named verifications and their dispatch.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::free_lie::witt_dimension;
use crate::johnson_calculus::{self as jc, JohnsonError};
use crate::magnus_twist::{verify_magnus_oracle, MagnusError};
use crate::report::Report;
use crate::surface_lie::{labute_dim, verify_no_map, ConfigError, SurfaceLie, SurfaceLieError};

/// Every claim id, sorted.
pub const CLAIM_IDS: [&str; 10] = [
    "bracket-31",
    "dehn-twist-image",
    "dims-oracle",
    "magnus-oracle",
    "no-map",
    "outer-bracket",
    "phi-kills-lambda4",
    "pi-p-identity",
    "projection-scalars",
    "theta-square-lemma",
];

/// Claims whose statements need at least three handles.
pub const NEEDS_THREE_HANDLES: [&str; 2] = ["bracket-31", "outer-bracket"];

#[derive(Debug, thiserror::Error)]
pub enum ClaimError {
    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
    #[error(transparent)]
    Johnson(#[from] JohnsonError),
    #[error(transparent)]
    Magnus(#[from] MagnusError),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Surface(#[from] SurfaceLieError),
}

#[derive(Clone, Copy, Debug)]
pub struct ClaimOptions {
    /// Largest degree checked by `dims-oracle`.
    pub degree: usize,
    /// Flip the orientation of the twist curves in `magnus-oracle`.
    pub inverse_twist: bool,
}

impl Default for ClaimOptions {
    fn default() -> Self {
        ClaimOptions { degree: 6, inverse_twist: false }
    }
}

pub fn is_known(id: &str) -> bool {
    CLAIM_IDS.contains(&id)
}

pub fn run_claim(id: &str, surface: &SurfaceLie, opts: &ClaimOptions) -> Result<Report, ClaimError> {
    Ok(match id {
        "theta-square-lemma" => jc::verify_theta_square_lemma(surface)?,
        "dehn-twist-image" => jc::verify_dehn_twist_image(surface)?,
        "pi-p-identity" => jc::verify_pi_p_identity(surface)?,
        "projection-scalars" => jc::verify_projection_scalars(surface)?,
        "phi-kills-lambda4" => jc::verify_phi_kills_lambda4(surface)?,
        "outer-bracket" => jc::verify_theorem_outer_bracket(surface)?,
        "bracket-31" => jc::verify_31_bracket(surface)?,
        "magnus-oracle" => verify_magnus_oracle(surface, opts.inverse_twist)?,
        "no-map" => no_map_report(surface)?,
        "dims-oracle" => dims_report(surface, opts.degree)?,
        other => return Err(ClaimError::UnknownClaim(other.to_string())),
    })
}

fn no_map_report(surface: &SurfaceLie) -> Result<Report, ClaimError> {
    let nm = verify_no_map(surface)?;
    let mut r = Report::new("no-map", nm.g);
    r.check("image of Theta_1 has normal form (2g-2)/g Theta_12", nm.passed);
    r.check("coefficient is nonzero", !nm.coefficient.is_zero());
    r.witness("coefficient", &nm.coefficient);
    r.witness("expected", &nm.expected);
    r.witness("image", &nm.image);
    r.witness("identity_control", &nm.identity_image);
    Ok(r)
}

fn dims_report(surface: &SurfaceLie, degree: usize) -> Result<Report, ClaimError> {
    let g = surface.genus();
    let mut r = Report::new("dims-oracle", g);
    let (mut linear, mut formula) = (Vec::new(), Vec::new());
    for m in 1..=degree {
        let d = surface.dim(m) as u128;
        let l = labute_dim(g, m)?;
        let b = surface.basis(m);
        r.check(format!("dim p({m}) = Labute"), d == l);
        r.check(format!("dim L_{m} = Witt"), b.lie_dim() as u128 == witt_dimension(2 * g, m));
        linear.push(d.to_string());
        formula.push(l.to_string());
    }
    r.witness("linear_algebra", linear.join(","));
    r.witness("labute", formula.join(","));
    r.witness("max_degree", degree);
    Ok(r)
}

/// Outcome of one `(claim, g)` run.
#[derive(Debug)]
pub struct ClaimRun {
    pub claim: String,
    pub g: usize,
    pub result: Result<Report, ClaimError>,
    pub elapsed: Duration,
}

/// Runs every pair concurrently; the output is ordered by claim id, then g.
pub fn run_claims(ids: &[&str], genera: &[usize], opts: &ClaimOptions) -> Vec<ClaimRun> {
    let mut ids: Vec<&str> = ids.to_vec();
    ids.sort_unstable();
    ids.dedup();
    let mut genera = genera.to_vec();
    genera.sort_unstable();
    genera.dedup();
    let surfaces: Vec<SurfaceLie> = genera.iter().map(|&g| SurfaceLie::new(g)).collect();
    let jobs: Vec<(&str, usize)> = ids
        .iter()
        .flat_map(|&id| (0..surfaces.len()).map(move |k| (id, k)))
        .collect();
    jobs.into_par_iter()
        .map(|(id, k)| {
            let start = Instant::now();
            let result = run_claim(id, &surfaces[k], opts);
            ClaimRun { claim: id.to_string(), g: genera[k], result, elapsed: start.elapsed() }
        })
        .collect()
}
