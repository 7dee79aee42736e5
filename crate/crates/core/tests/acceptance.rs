//! One line per acceptance criterion, written straight to stdout so it shows
//! up even when the harness captures test output.

mod common;

use std::collections::BTreeMap;
use std::io::Write;

use proptest::prelude::*;
use proptest::test_runner::TestRunner;
use symplie_core::claims::{run_claims, ClaimOptions, ClaimRun};
use symplie_core::free_lie::{FreeLie, LieElement};
use symplie_core::johnson_calculus::{DerivationAlgebra, HomElement, JohnsonMaps};
use symplie_core::linalg::{kernel_basis, Rational, SparseMatrix};
use symplie_core::sp_rep::{decompose, SpGenerator, SpModule};
use symplie_core::surface_lie::{labute_dim, LieModule, PElement, PModule};

type Outcome = Result<String, String>;

fn report(n: u32, title: &str, outcome: Outcome) {
    let line = match &outcome {
        Ok(detail) => format!("criterion {n} PASS  {title}: {detail}\n"),
        Err(why) => format!("criterion {n} FAIL  {title}: {why}\n"),
    };
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(line.as_bytes());
    let _ = out.flush();
    if let Err(why) = outcome {
        panic!("criterion {n} failed: {why}");
    }
}

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn table(parts: &[&[u32]]) -> BTreeMap<Vec<u32>, u64> {
    parts.iter().map(|p| (p.to_vec(), 1)).collect()
}

/// Runs the claims and requires every report to pass.
fn passing(ids: &[&str], genera: &[usize]) -> Result<Vec<ClaimRun>, String> {
    let runs = run_claims(ids, genera, &ClaimOptions::default());
    for run in &runs {
        match &run.result {
            Err(e) => return Err(format!("{} g={}: {e}", run.claim, run.g)),
            Ok(r) if !r.passed() => {
                return Err(format!("{} g={}: failed {:?}", run.claim, run.g, r.failed_checks()))
            }
            Ok(_) => {}
        }
    }
    Ok(runs)
}

fn witness<'a>(runs: &'a [ClaimRun], claim: &str, g: usize, key: &str) -> Result<&'a str, String> {
    runs.iter()
        .find(|r| r.claim == claim && r.g == g)
        .and_then(|r| r.result.as_ref().ok())
        .and_then(|r| r.witness.get(key))
        .map(String::as_str)
        .ok_or_else(|| format!("{claim} g={g} has no witness {key}"))
}

fn expect_witness(runs: &[ClaimRun], claim: &str, g: usize, key: &str, want: &str) -> Result<(), String> {
    let got = witness(runs, claim, g, key)?;
    ensure(got == want, || format!("{claim} g={g}: {key} = {got}, expected {want}"))
}

fn decomposition_tables() -> Outcome {
    let p_expected: [&[&[u32]]; 4] = [&[&[1]], &[&[1, 1]], &[&[2, 1]], &[&[3, 1], &[2, 1, 1], &[2]]];
    let der_expected: [&[&[u32]]; 3] = [&[&[1, 1, 1], &[1]], &[&[2, 2], &[1, 1]], &[&[3, 1, 1], &[3], &[2, 1]]];
    let out_expected: [&[&[u32]]; 3] = [&[&[1, 1, 1]], &[&[2, 2]], &[&[3, 1, 1], &[3]]];
    for g in [3, 4] {
        let s = common::surface(g);
        for (k, want) in p_expected.iter().enumerate() {
            let got = decompose(&PModule { surface: s, degree: k + 1 }.character()).map_err(|e| e.to_string())?;
            ensure(got.as_map() == table(want), || format!("p({}) at g={g} is {got}", k + 1))?;
        }
        let p5 = decompose(&PModule { surface: s, degree: 5 }.character()).map_err(|e| e.to_string())?;
        ensure(p5.multiplicity_of(&[3, 1, 1]) > 0, || format!("p(5) at g={g} lacks [3,1,1]"))?;
        let alg = DerivationAlgebra::new(s);
        for n in 1..=3 {
            let der = alg.der_decomposition(n).map_err(|e| e.to_string())?;
            ensure(der.as_map() == table(der_expected[n - 1]), || format!("Der_{n} at g={g} is {der}"))?;
            let out = alg.outer_decomposition(n).map_err(|e| e.to_string())?;
            ensure(out.as_map() == table(out_expected[n - 1]), || format!("OutDer_{n} at g={g} is {out}"))?;
        }
    }
    Ok("p(1..4), [3,1,1] in p(5), Der_1..3 and OutDer_1..3 match at g=3,4".into())
}

fn labute_dimensions() -> Outcome {
    let runs = passing(&["dims-oracle"], &[2, 3, 4])?;
    for g in 2..=4 {
        let formula: Vec<String> =
            (1..=6).map(|m| labute_dim(g, m).map(|d| d.to_string()).map_err(|e| e.to_string())).collect::<Result<_, _>>()?;
        expect_witness(&runs, "dims-oracle", g, "linear_algebra", &formula.join(","))?;
    }
    Ok(format!("dim p(m) = Labute for g=2,3,4 and m<=6; g=3: {}", witness(&runs, "dims-oracle", 3, "linear_algebra")?))
}

fn scalar_claims() -> Outcome {
    let ids = ["phi-kills-lambda4", "pi-p-identity", "projection-scalars", "theta-square-lemma"];
    let runs = passing(&ids, &[3, 4, 5])?;
    for g in [3i64, 4, 5] {
        let gu = g as usize;
        expect_witness(&runs, "theta-square-lemma", gu, "factor", "2")?;
        expect_witness(&runs, "projection-scalars", gu, "scalar_primitive", &(-(g + 1)).to_string())?;
        expect_witness(&runs, "projection-scalars", gu, "scalar_theta", &(-(2 * g + 1)).to_string())?;
        expect_witness(
            &runs,
            "projection-scalars",
            gu,
            "coefficient_a1b1_theta",
            &Rational::new(-3, g + 1).to_string(),
        )?;
        let rank = witness(&runs, "phi-kills-lambda4", gu, "rank_phi")?;
        let der2 = witness(&runs, "phi-kills-lambda4", gu, "dim_der2")?;
        ensure(rank == der2, || format!("g={g}: rank phi {rank} != dim Der_2 {der2}"))?;
    }
    Ok("theta-square factor 2, pi p = id, scalars -(g+1) and -(2g+1), phi kills Lambda^4 at g=3,4,5".into())
}

fn outer_bracket() -> Outcome {
    let runs = passing(&["outer-bracket"], &[3, 4])?;
    let mut seen = Vec::new();
    for g in [3i64, 4] {
        let want = Rational::new(-9, (g + 1) * (g + 1)).to_string();
        expect_witness(&runs, "outer-bracket", g as usize, "coefficient", &want)?;
        witness(&runs, "outer-bracket", g as usize, "inner_preimage")?;
        seen.push(format!("g={g}: {want}"));
    }
    Ok(format!("[tau(omega_1), tau(omega_{{g-1}})] coefficient -9/(g+1)^2 ({})", seen.join(", ")))
}

fn bracket_31() -> Outcome {
    let runs = passing(&["bracket-31"], &[3, 4])?;
    let mut seen = Vec::new();
    for g in [3i64, 4] {
        let want = Rational::new(3, g + 1).to_string();
        expect_witness(&runs, "bracket-31", g as usize, "coefficient", &want)?;
        seen.push(format!("g={g}: {want}"));
    }
    Ok(format!("bracket generates [3,1]; coefficient 3/(g+1) ({})", seen.join(", ")))
}

fn no_map() -> Outcome {
    let runs = passing(&["no-map"], &[3, 4, 5])?;
    let mut seen = Vec::new();
    for g in [3i64, 4, 5] {
        let want = Rational::new(2 * g - 2, g).to_string();
        expect_witness(&runs, "no-map", g as usize, "coefficient", &want)?;
        seen.push(format!("g={g}: {want}"));
    }
    Ok(format!("Theta_1 maps to nonzero (2g-2)/g Theta_12 ({})", seen.join(", ")))
}

fn magnus_oracle() -> Outcome {
    passing(&["dehn-twist-image", "magnus-oracle"], &[3, 4])?;
    let inverse = run_claims(&["magnus-oracle"], &[3, 4], &ClaimOptions { inverse_twist: true, ..Default::default() });
    for run in &inverse {
        let ok = run.result.as_ref().is_ok_and(|r| r.passed());
        ensure(ok, || format!("inverse orientation fails at g={}", run.g))?;
    }
    Ok("Magnus recomputation equals the closed form at g=3,4 in both orientations".into())
}

fn run_property<S: Strategy>(
    name: &str,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let mut runner = TestRunner::new(common::config(200));
    runner.run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}

fn lie_element(f: &FreeLie, degree: usize) -> impl Strategy<Value = LieElement> {
    common::sparse(f.dim(degree), 4).prop_map(move |v| LieElement::from_coords(degree, v))
}

fn p_element(g: usize, degree: usize) -> impl Strategy<Value = PElement> {
    common::sparse(common::surface(g).dim(degree), 5).prop_map(move |v| PElement::from_coords(degree, v))
}

fn generator(g: usize) -> impl Strategy<Value = SpGenerator> {
    let all = SpGenerator::all(g);
    (0..all.len()).prop_map(move |k| all[k])
}

fn der_element(n: usize) -> impl Strategy<Value = HomElement> {
    let alg = DerivationAlgebra::new(common::surface(3));
    let basis: Vec<HomElement> = alg.der_basis(n).into_iter().map(|d| d.into_hom()).collect();
    let len = basis.len();
    prop::collection::vec((0..len, -2i64..=2), 1..=3).prop_map(move |terms| {
        terms
            .into_iter()
            .fold(alg.zero(n), |acc, (k, c)| acc.add_scaled(&basis[k], &Rational::from_int(c)))
    })
}

fn property_suites() -> Outcome {
    let minus = Rational::from_int(-1);
    let f2 = FreeLie::new(2);
    let f3 = FreeLie::new(3);
    let s3 = common::surface(3);
    let alg = DerivationAlgebra::new(s3);
    let maps = JohnsonMaps::new(s3);
    let mut names = Vec::new();
    let mut run = |name: &'static str, r: Result<(), String>| {
        names.push(name);
        r
    };

    run(
        "antisymmetry in L",
        run_property("antisymmetry in L", (lie_element(&f3, 1), lie_element(&f3, 2)), |(x, y)| {
            prop_assert_eq!(f3.bracket(&x, &y), f3.bracket(&y, &x).scale(&minus));
            prop_assert!(f3.bracket(&y, &y).is_zero());
            Ok(())
        }),
    )?;
    run(
        "Jacobi in L",
        run_property(
            "Jacobi in L",
            (lie_element(&f2, 1), lie_element(&f2, 2), lie_element(&f2, 1)),
            |(x, y, z)| {
                let a = f2.bracket(&x, &f2.bracket(&y, &z));
                let b = f2.bracket(&y, &f2.bracket(&z, &x));
                let c = f2.bracket(&z, &f2.bracket(&x, &y));
                prop_assert!(a.add(&b).add(&c).is_zero());
                Ok(())
            },
        ),
    )?;
    run(
        "Jacobi in p",
        run_property("Jacobi in p", (p_element(3, 1), p_element(3, 1), p_element(3, 2)), |(x, y, z)| {
            let a = s3.bracket(&x, &s3.bracket(&y, &z));
            let b = s3.bracket(&y, &s3.bracket(&z, &x));
            let c = s3.bracket(&z, &s3.bracket(&x, &y));
            prop_assert!(a.add(&b).add(&c).is_zero());
            Ok(())
        }),
    )?;
    run(
        "Jacobi in Der",
        run_property("Jacobi in Der", (der_element(1), der_element(1), der_element(1)), |(a, b, c)| {
            let ab = alg.bracket(&a, &b);
            prop_assert!(alg.is_derivation(&ab));
            prop_assert_eq!(&ab, &alg.bracket(&b, &a).scale(&minus));
            let j = alg
                .bracket(&a, &alg.bracket(&b, &c))
                .add(&alg.bracket(&b, &alg.bracket(&c, &a)))
                .add(&alg.bracket(&c, &ab));
            prop_assert!(j.is_zero());
            Ok(())
        }),
    )?;
    run(
        "phi equivariant",
        run_property("phi equivariant", (generator(3), common::sparse(120, 4)), |(x, s)| {
            prop_assert_eq!(maps.phi(&maps.sym().act(x, &s)), alg.sp_act(x, &maps.phi(&s)));
            Ok(())
        }),
    )?;
    run(
        "phi' equivariant",
        run_property("phi' equivariant", (generator(3), common::sparse(20, 4)), |(x, t)| {
            prop_assert_eq!(maps.phi_prime(&maps.lambda3().act(x, &t)), alg.sp_act(x, &maps.phi_prime(&t)));
            Ok(())
        }),
    )?;
    run(
        "pi, p equivariant",
        run_property(
            "pi, p equivariant",
            (generator(3), common::sparse(120, 4), common::sparse(15, 4)),
            |(x, s, w)| {
                prop_assert_eq!(maps.pi(&maps.sym().act(x, &s)), maps.lambda2().act(x, &maps.pi(&s)));
                prop_assert_eq!(maps.p_split(&maps.lambda2().act(x, &w)), maps.sym().act(x, &maps.p_split(&w)));
                Ok(())
            },
        ),
    )?;
    run(
        "Weyl symmetry and mass",
        run_property("Weyl symmetry and mass", (2usize..=3, 0usize..3, 1usize..=4), |(g, kind, degree)| {
            let (c, dim) = match kind {
                0 => {
                    let free = FreeLie::new(g);
                    let m = LieModule { free: &free, degree };
                    (m.character(), m.dim())
                }
                1 => {
                    let m = PModule { surface: common::surface(g), degree };
                    (m.character(), m.dim())
                }
                _ => {
                    let c = DerivationAlgebra::new(common::surface(g)).der_character(degree.min(2));
                    let d = c.mass() as usize;
                    (c, d)
                }
            };
            prop_assert!(c.is_weyl_symmetric());
            let d = decompose(&c).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert_eq!(d.dimension(), dim as u128);
            prop_assert_eq!(c.mass() as usize, dim);
            Ok(())
        }),
    )?;
    run(
        "rank-nullity",
        run_property(
            "rank-nullity",
            (1usize..7, 1usize..9).prop_flat_map(|(r, c)| {
                prop::collection::vec(common::sparse(c, 4), r).prop_map(move |rows| SparseMatrix::from_rows(c, rows))
            }),
            |m| {
                let k = kernel_basis(&m);
                prop_assert_eq!(m.rank() + k.len(), m.ncols());
                Ok(())
            },
        ),
    )?;
    run(
        "reduce after lift",
        run_property(
            "reduce after lift",
            (2usize..=3, 1usize..=5).prop_flat_map(|(g, m)| p_element(g, m).prop_map(move |x| (g, x))),
            |(g, x)| {
                let s = common::surface(g);
                prop_assert_eq!(s.reduce(&s.lift(&x)), x);
                Ok(())
            },
        ),
    )?;
    Ok(format!("{} suites x 200 cases, fixed seed: {}", names.len(), names.join(", ")))
}

#[test]
fn criterion_1_decomposition_tables() {
    report(1, "decomposition tables", decomposition_tables());
}

#[test]
fn criterion_2_labute_dimensions() {
    report(2, "Labute dimensions", labute_dimensions());
}

#[test]
fn criterion_3_scalar_identities() {
    report(3, "scalar identities", scalar_claims());
}

#[test]
fn criterion_4_outer_bracket() {
    report(4, "outer bracket", outer_bracket());
}

#[test]
fn criterion_5_bracket_31() {
    report(5, "[3,1] bracket", bracket_31());
}

#[test]
fn criterion_6_no_map() {
    report(6, "no map", no_map());
}

#[test]
fn criterion_7_magnus_oracle() {
    report(7, "Magnus oracle", magnus_oracle());
}

#[test]
fn criterion_8_property_suites() {
    report(8, "property suites", property_suites());
}
