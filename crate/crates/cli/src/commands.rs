use std::process::ExitCode;

use symplie_core::claims::{self, ClaimOptions, ClaimRun, CLAIM_IDS, NEEDS_THREE_HANDLES};
use symplie_core::free_lie::{witt_dimension, FreeLie};
use symplie_core::johnson_calculus::{DerivationAlgebra, ExteriorBasis, JohnsonError, Sym2Lambda2};
use symplie_core::sp_rep::{decompose as decompose_character, Decomposition, SpModule, SpRepError};
use symplie_core::surface_lie::{labute_dim, LieModule, PModule, SurfaceLie, SurfaceLieError};

use crate::output::{self, DecompositionJson, DimsJson, DimsRow, ReportJson};
use crate::{DecomposeArgs, DimsArgs, Format, ModuleName, VerifyArgs};

pub const DEFAULT_DEGREE_CAP: usize = 6;
pub const MAX_GENUS: usize = 8;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("SYMPLIE_DEGREE_CAP must be a positive integer, got {0:?}")]
    BadDegreeCap(String),
    #[error("{what} needs degree {needed}, beyond the degree cap {cap}")]
    DegreeTooLarge { what: String, needed: usize, cap: usize },
    #[error("degree must be at least {min} for {what}")]
    DegreeTooSmall { what: String, min: usize },
    #[error("g must lie in 2..={MAX_GENUS}, got {0}")]
    GenusOutOfRange(usize),
    #[error("unknown claim id {0:?}; known ids: {known}, all", known = CLAIM_IDS.join(", "))]
    UnknownClaim(String),
    #[error(transparent)]
    Rep(#[from] SpRepError),
    #[error(transparent)]
    Johnson(#[from] JohnsonError),
    #[error(transparent)]
    Surface(#[from] SurfaceLieError),
}

pub fn degree_cap() -> Result<usize, CliError> {
    match std::env::var("SYMPLIE_DEGREE_CAP") {
        Err(_) => Ok(DEFAULT_DEGREE_CAP),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(CliError::BadDegreeCap(s)),
        },
    }
}

fn check_genus(g: usize) -> Result<(), CliError> {
    if (2..=MAX_GENUS).contains(&g) {
        Ok(())
    } else {
        Err(CliError::GenusOutOfRange(g))
    }
}

fn check_degree(what: &str, needed: usize, cap: usize) -> Result<(), CliError> {
    if needed > cap {
        Err(CliError::DegreeTooLarge { what: what.to_string(), needed, cap })
    } else {
        Ok(())
    }
}

fn module_label(module: ModuleName, degree: usize) -> String {
    match module {
        ModuleName::Lie => format!("L_{degree}"),
        ModuleName::P => format!("p({degree})"),
        ModuleName::Der => format!("Der_{degree}"),
        ModuleName::OutDer => format!("OutDer_{degree}"),
        ModuleName::Sym2Lambda2 => "Sym^2 Lambda^2 H".to_string(),
        ModuleName::LambdaK => format!("Lambda^{degree} H"),
        ModuleName::Hom => format!("Hom(H, p({}))", degree + 1),
    }
}

pub fn decompose(a: &DecomposeArgs) -> Result<ExitCode, CliError> {
    check_genus(a.g)?;
    let cap = degree_cap()?;
    let label = module_label(a.module, a.degree);
    let positive = |min: usize| {
        if a.degree < min {
            Err(CliError::DegreeTooSmall { what: label.clone(), min })
        } else {
            Ok(())
        }
    };
    let d: Decomposition = match a.module {
        ModuleName::Lie => {
            positive(1)?;
            check_degree(&label, a.degree, cap)?;
            let f = FreeLie::new(a.g);
            decompose_character(&LieModule { free: &f, degree: a.degree }.character())?
        }
        ModuleName::P => {
            positive(1)?;
            check_degree(&label, a.degree, cap)?;
            let s = SurfaceLie::new(a.g);
            decompose_character(&PModule { surface: &s, degree: a.degree }.character())?
        }
        ModuleName::Der | ModuleName::OutDer => {
            positive(1)?;
            check_degree(&label, a.degree + 2, cap)?;
            let s = SurfaceLie::new(a.g);
            let alg = DerivationAlgebra::new(&s);
            if a.module == ModuleName::Der {
                alg.der_decomposition(a.degree)?
            } else {
                alg.outer_decomposition(a.degree)?
            }
        }
        ModuleName::Hom => {
            positive(1)?;
            check_degree(&label, a.degree + 1, cap)?;
            let s = SurfaceLie::new(a.g);
            decompose_character(&DerivationAlgebra::new(&s).hom_character(a.degree))?
        }
        ModuleName::Sym2Lambda2 => decompose_character(&Sym2Lambda2::new(a.g).character())?,
        ModuleName::LambdaK => {
            if a.degree > 2 * a.g {
                return Err(CliError::DegreeTooLarge { what: label, needed: a.degree, cap: 2 * a.g });
            }
            decompose_character(&ExteriorBasis::new(a.g, a.degree).character())?
        }
    };
    let json = DecompositionJson::new(a.g, a.module, a.degree, &label, &d);
    match a.format {
        Format::Json => output::emit(&(output::to_json(&json) + "\n")),
        Format::Text => output::emit(&json.to_text()),
    }
    Ok(ExitCode::SUCCESS)
}

pub fn verify(a: &VerifyArgs) -> Result<ExitCode, CliError> {
    let ids: Vec<&str> = if a.claim == "all" {
        CLAIM_IDS.to_vec()
    } else if claims::is_known(&a.claim) {
        vec![a.claim.as_str()]
    } else {
        return Err(CliError::UnknownClaim(a.claim.clone()));
    };
    for &g in &a.g {
        check_genus(g)?;
    }
    let cap = degree_cap()?;
    let degree = a.degree.unwrap_or(cap);
    if ids.contains(&"dims-oracle") {
        check_degree("dims-oracle", degree, cap)?;
    }
    if a.g.contains(&2) {
        eprintln!("warning: g=2 is below the g >= 3 range; only claims valid for every genus are run there");
    }
    let mut runs: Vec<ClaimRun> = Vec::new();
    let opts = ClaimOptions { degree, inverse_twist: a.inverse_twist };
    let (small, rest): (Vec<usize>, Vec<usize>) = a.g.iter().partition(|&&g| g < 3);
    runs.extend(claims::run_claims(&ids, &rest, &opts));
    let small_ids: Vec<&str> = ids.iter().copied().filter(|id| !NEEDS_THREE_HANDLES.contains(id)).collect();
    for id in ids.iter().filter(|id| NEEDS_THREE_HANDLES.contains(id)) {
        for g in &small {
            eprintln!("warning: {id} needs g >= 3; skipped at g={g}");
        }
    }
    runs.extend(claims::run_claims(&small_ids, &small, &opts));
    runs.sort_by(|x, y| (x.claim.as_str(), x.g).cmp(&(y.claim.as_str(), y.g)));

    let reports: Vec<ReportJson> = runs.iter().map(|r| ReportJson::from_run(r, a.timing)).collect();
    let all_pass = reports.iter().all(|r| r.status == "pass");
    match a.format {
        Format::Json => output::emit(&(output::to_json(&reports) + "\n")),
        Format::Text => {
            let mut text: String = reports.iter().map(ReportJson::to_text).collect();
            let passed = reports.iter().filter(|r| r.status == "pass").count();
            text.push_str(&format!("{passed}/{} passed\n", reports.len()));
            output::emit(&text);
        }
    }
    Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

pub fn dims(a: &DimsArgs) -> Result<ExitCode, CliError> {
    check_genus(a.g)?;
    let cap = degree_cap()?;
    check_degree("dims", a.max_degree, cap)?;
    let s = SurfaceLie::new(a.g);
    let alg = DerivationAlgebra::new(&s);
    let mut rows = Vec::new();
    for m in 1..=a.max_degree {
        let der = (m + 2 <= cap).then(|| alg.der_character(m).mass() as u64);
        rows.push(DimsRow {
            m,
            lie: witt_dimension(2 * a.g, m) as u64,
            p: s.dim(m) as u64,
            labute: labute_dim(a.g, m)? as u64,
            der,
        });
    }
    let json = DimsJson { g: a.g, rows };
    match a.format {
        Format::Json => output::emit(&(output::to_json(&json) + "\n")),
        Format::Text => output::emit(&json.to_text()),
    }
    Ok(ExitCode::SUCCESS)
}
