//! Exact checks of the scalar identities and bracket computations.

use super::derivations::{relabel_hom, reversal, DerivationAlgebra};
use super::exterior::contract;
use super::maps::JohnsonMaps;
use super::{tau_hyp_twist, JohnsonError};
use crate::linalg::{Echelon, Rational, SparseVector};
use crate::report::Report;
use crate::sp_rep::{ActionTable, Submodule, Weight};
use crate::surface_lie::{PModule, SurfaceLie};

fn require_genus(claim: &'static str, g: usize) -> Result<(), JohnsonError> {
    if g < 3 {
        Err(JohnsonError::GenusTooSmall { claim, g })
    } else {
        Ok(())
    }
}

/// `phi(theta_I^2)(x) = 2[x, theta_I]` for `x` in `H_I`, zero otherwise, over
/// every nonempty `I`.
pub fn verify_theta_square_lemma(surface: &SurfaceLie) -> Result<Report, JohnsonError> {
    let g = surface.genus();
    let maps = JohnsonMaps::new(surface);
    let mut r = Report::new("theta-square-lemma", g);
    let two = Rational::from_int(2);
    let (mut values, mut nonzero, mut subsets) = (true, true, 0);
    for mask in 1u32..(1 << g) {
        let indices: Vec<usize> = (1..=g).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        let hom = maps.phi(&maps.sym().square(&maps.theta_partial(&indices)));
        for x in 0..2 * g as u8 {
            let expected = if indices.contains(&(x as usize / 2 + 1)) {
                maps.bracket_with_theta_partial(x, &indices).scale(&two)
            } else {
                surface.zero(3)
            };
            values &= hom.column(x) == &expected;
        }
        if indices.len() < g {
            nonzero &= !hom.is_zero();
        }
        subsets += 1;
    }
    r.check("phi(theta_I^2)(x) = 2[x, theta_I] on H_I, 0 on the complement", values);
    r.check("phi(theta_I^2) is nonzero for proper I", nonzero);
    r.witness("factor", 2);
    r.witness("subsets", subsets);
    Ok(r)
}

/// `tau(omega_j)` is a derivation acting by `[x, theta''_j]` on `H_I`.
pub fn verify_dehn_twist_image(surface: &SurfaceLie) -> Result<Report, JohnsonError> {
    let g = surface.genus();
    let maps = JohnsonMaps::new(surface);
    let mut r = Report::new("dehn-twist-image", g);
    for j in 1..g {
        let d = tau_hyp_twist(surface, j, None);
        r.check(format!("tau(omega_{j}) lies in Der_2"), d.is_ok());
        let Ok(d) = d else { continue };
        let indices: Vec<usize> = (j + 1..=g).collect();
        let values = (0..2 * g as u8).all(|x| {
            let expected = if x as usize / 2 + 1 > j {
                maps.bracket_with_theta_partial(x, &indices)
            } else {
                surface.zero(3)
            };
            d.hom().column(x) == &expected
        });
        r.check(format!("tau(omega_{j})(x) = [x, theta''_{j}] on H_I, 0 on the complement"), values);
    }
    // moving the Weierstrass basepoint reverses the handles
    let last = tau_hyp_twist(surface, g - 1, None)?;
    let moved = relabel_hom(surface, &reversal(g), last.hom());
    let a1b1 = maps.lambda2().wedge(&[0, 1]);
    let target = maps.phi(&maps.sym().square(&a1b1)).scale(&Rational::new(1, 2));
    r.check("reversed tau(omega_{g-1}) = 1/2 phi((a1^b1)^2)", moved == target);
    r.witness("twists", g - 1);
    Ok(r)
}

/// `pi . p = id`, `pi . project_22 = 0` and `project_22 . p = 0` on bases.
pub fn verify_pi_p_identity(surface: &SurfaceLie) -> Result<Report, JohnsonError> {
    let g = surface.genus();
    let maps = JohnsonMaps::new(surface);
    let mut r = Report::new("pi-p-identity", g);
    let n2 = maps.lambda2().dim();
    let units2: Vec<SparseVector> = (0..n2).map(|k| SparseVector::unit(n2, k)).collect();
    r.check("pi(p(w)) = w on a basis of Lambda^2 H", units2.iter().all(|w| maps.pi(&maps.p_split(w)) == *w));
    r.check(
        "project_22(p(w)) = 0 on a basis of Lambda^2 H",
        units2.iter().all(|w| maps.project_22(&maps.p_split(w)).is_zero()),
    );
    let ns = maps.sym().dim();
    r.check(
        "pi(project_22(s)) = 0 on a basis of Sym^2 Lambda^2 H",
        (0..ns).all(|k| maps.pi(&maps.project_22(&SparseVector::unit(ns, k))).is_zero()),
    );
    r.witness("dim_lambda2", n2);
    r.witness("dim_sym2lambda2", ns);
    Ok(r)
}

/// The scalars of `pi` on `(.) theta` and the expansion of
/// `project_22((a1^b1)^2)`.
pub fn verify_projection_scalars(surface: &SurfaceLie) -> Result<Report, JohnsonError> {
    let g = surface.genus();
    let gi = g as i64;
    let maps = JohnsonMaps::new(surface);
    let l2 = maps.lambda2();
    let mut r = Report::new("projection-scalars", g);
    let theta = maps.theta();
    let gq = Rational::from_int(gi);

    let prim_scalar = Rational::from_int(-(gi + 1));
    let prim_ok = (0..l2.dim()).all(|k| {
        let e = SparseVector::unit(l2.dim(), k);
        let w = e.add_scaled(&theta, &-(&contract(l2, &e) / &gq));
        maps.pi(&maps.times_theta(&w)) == w.scale(&prim_scalar)
    });
    r.check("pi(w . theta) = -(g+1) w on V_[1,1]", prim_ok);
    r.witness("scalar_primitive", &prim_scalar);

    let theta_scalar = Rational::from_int(-(2 * gi + 1));
    let theta_ok = maps.pi(&maps.sym().square(&theta)) == theta.scale(&theta_scalar);
    r.check("pi(theta . theta) = -(2g+1) theta", theta_ok);
    r.witness("scalar_theta", &theta_scalar);

    let a1b1 = l2.wedge(&[0, 1]);
    let s = maps.sym().square(&a1b1);
    let c1 = Rational::new(-3, gi + 1);
    let c2 = Rational::new(3, (gi + 1) * (2 * gi + 1));
    let expected = s
        .add_scaled(&maps.times_theta(&a1b1), &c1)
        .add_scaled(&maps.sym().square(&theta), &c2);
    r.check("project_22((a1^b1)^2) three-term expansion", maps.project_22(&s) == expected);
    r.witness("coefficient_a1b1_theta", &c1);
    r.witness("coefficient_theta_squared", &c2);
    Ok(r)
}

/// `phi` vanishes on `Lambda^4 H` and on `theta^2`; the induced map on the
/// remaining summands is injective onto `Der_2`.
pub fn verify_phi_kills_lambda4(surface: &SurfaceLie) -> Result<Report, JohnsonError> {
    let g = surface.genus();
    let maps = JohnsonMaps::new(surface);
    let alg = DerivationAlgebra::new(surface);
    let mut r = Report::new("phi-kills-lambda4", g);
    let l4 = maps.lambda4();
    let in_kernel = (0..l4.dim()).all(|k| {
        let s = maps.lambda4_embed(&SparseVector::unit(l4.dim(), k));
        maps.phi(&s).is_zero() && maps.pi(&s).is_zero()
    });
    r.check("phi(Lambda^4 H) = 0", in_kernel);
    r.check("phi(theta^2) = 0", maps.phi(&maps.sym().square(&maps.theta())).is_zero());

    let ns = maps.sym().dim();
    let images: Vec<_> = (0..ns).map(|k| maps.phi(&SparseVector::unit(ns, k))).collect();
    r.check("phi lands in Der_2", images.iter().all(|h| alg.is_derivation(h)));
    let mut e = Echelon::new(images[0].flatten().dim());
    for h in &images {
        e.insert(h.flatten());
    }
    let der2 = alg.der_basis(2).len();
    r.check("rank of phi = dim Der_2", e.rank() == der2);
    r.check("dim ker phi = dim Lambda^4 H + 1", ns - e.rank() == l4.dim() + 1);
    r.witness("rank_phi", e.rank());
    r.witness("dim_der2", der2);
    r.witness("dim_lambda4", l4.dim());
    Ok(r)
}

/// The bracket of the `[2,2]` parts of the two extreme twist images: its
/// value on `a2`, its innerness, and the vanishing of the bracket of the full
/// images.
pub fn verify_theorem_outer_bracket(surface: &SurfaceLie) -> Result<Report, JohnsonError> {
    let g = surface.genus();
    require_genus("outer-bracket", g)?;
    let gi = g as i64;
    let f = surface.free();
    let maps = JohnsonMaps::new(surface);
    let alg = DerivationAlgebra::new(surface);
    let mut r = Report::new("outer-bracket", g);
    let (ag, bg) = ((2 * g - 2) as u8, (2 * g - 1) as u8);
    let s1 = maps.sym().square(&maps.lambda2().wedge(&[0, 1]));
    let sg = maps.sym().square(&maps.lambda2().wedge(&[ag, bg]));
    let xi = maps.phi(&maps.project_22(&s1));
    let xi_t = maps.phi(&maps.project_22(&sg));
    r.check("xi and xi~ are derivations", alg.is_derivation(&xi) && alg.is_derivation(&xi_t));

    let br = alg.bracket(&xi, &xi_t);
    let value = br.column(2);
    let coefficient = Rational::new(-9, (gi + 1) * (gi + 1));
    let inner = f.bracket(&f.left_normed(&[0, 1]), &f.left_normed(&[ag, bg]));
    let base = surface.reduce(&f.bracket(&f.letter(2), &inner));
    let expected = base.scale(&coefficient);
    r.check("(i) [xi, xi~](a2) = -9/(g+1)^2 [a2, [[a1,b1],[ag,bg]]]", value == &expected);
    r.check("(ii) [a2, [[a1,b1],[ag,bg]]] is nonzero in p(5)", !base.is_zero());
    r.witness("coefficient", &coefficient);
    r.witness("value_a2", surface.format(value));

    let z = alg.inner_preimage(&br);
    let certified = z.as_ref().is_some_and(|z| alg.ad(z) == br);
    r.check("(iii) [xi, xi~] = ad(z) for some z in p(4)", certified);
    if let Some(z) = &z {
        r.witness("inner_preimage", surface.format(z));
    }

    let w1 = maps.phi(&s1);
    let wg = maps.phi(&sg);
    r.check("(iv) [phi((a1^b1)^2), phi((ag^bg)^2)] = 0", alg.bracket(&w1, &wg).is_zero());
    Ok(r)
}

/// `[phi'(a2 ^ theta), xi](a2) = 3/(g+1) [[[a1,b1],a2],a2]`, and the
/// submodule of `p(4)` it generates contains `[3,1]`.
pub fn verify_31_bracket(surface: &SurfaceLie) -> Result<Report, JohnsonError> {
    let g = surface.genus();
    require_genus("bracket-31", g)?;
    let gi = g as i64;
    let maps = JohnsonMaps::new(surface);
    let alg = DerivationAlgebra::new(surface);
    let mut r = Report::new("bracket-31", g);
    let d1 = maps.phi_prime(&maps.wedge_theta(2));
    r.check("phi'(a2 ^ theta) lies in Der_1", alg.is_derivation(&d1));
    let xi = maps.phi(&maps.project_22(&maps.sym().square(&maps.lambda2().wedge(&[0, 1]))));
    let br = alg.bracket(&d1, &xi);
    let value = br.column(2).clone();
    let coefficient = Rational::new(3, gi + 1);
    let base = surface.left_normed(&[0, 1, 2, 2]);
    r.check("[phi'(a2^theta), xi](a2) = 3/(g+1) [[[a1,b1],a2],a2]", value == base.scale(&coefficient));
    r.check("[[[a1,b1],a2],a2] is nonzero in p(4)", !base.is_zero());
    r.witness("coefficient", &coefficient);

    let module = ActionTable::build(&PModule { surface, degree: 4 });
    let sub = Submodule::generate(&module, std::slice::from_ref(value.coords()));
    let decomposition = sub.decomposition()?;
    let w = Weight::from_partition(g, &[3, 1]).expect("g >= 2");
    let hwv = sub.highest_weight_vector(&module, &w);
    r.check("generated submodule contains [3,1]", decomposition.contains(&[3, 1]));
    r.check("highest weight vector of weight [3,1] found", hwv.is_some());
    r.witness("submodule", &decomposition);
    r.witness("submodule_dim", sub.dim());
    Ok(r)
}
