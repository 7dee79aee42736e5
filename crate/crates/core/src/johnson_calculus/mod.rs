//! Derivations of the surface Lie algebra and the maps into them built from
//! `Sym^2 Lambda^2 H` and `Lambda^3 H`.

mod derivations;
mod exterior;
mod maps;
mod verify;

pub use derivations::{
    form, relabel_hom, relabel_letter, reversal, Derivation, DerivationAlgebra, HomElement,
    HomModule,
};
pub use exterior::{contract, theta_partial_wedge, theta_wedge, ExteriorBasis, Sym2Lambda2};
pub use maps::JohnsonMaps;
pub use verify::{
    verify_31_bracket, verify_dehn_twist_image, verify_phi_kills_lambda4, verify_pi_p_identity,
    verify_projection_scalars, verify_theorem_outer_bracket, verify_theta_square_lemma,
};

use crate::linalg::Rational;
use crate::sp_rep::SpRepError;
use crate::surface_lie::SurfaceLie;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JohnsonError {
    #[error("not a derivation: the image of theta is {0}")]
    NotADerivation(String),
    #[error("p({0}) has a nonzero central element")]
    NontrivialCenter(usize),
    #[error("twist index {j} outside 1..={max}", max = .g - 1)]
    TwistOutOfRange { j: usize, g: usize },
    #[error("{claim} needs g >= 3, got {g}")]
    GenusTooSmall { claim: &'static str, g: usize },
    #[error(transparent)]
    Rep(#[from] SpRepError),
}

/// `tau(omega_j) = 1/2 phi((theta''_j)^2)` with `theta''_j = sum_{i > j} a_i ^ b_i`,
/// optionally transported along a handle relabeling.
pub fn tau_hyp_twist(
    surface: &SurfaceLie,
    j: usize,
    relabel: Option<&[usize]>,
) -> Result<Derivation, JohnsonError> {
    let g = surface.genus();
    if j == 0 || j >= g {
        return Err(JohnsonError::TwistOutOfRange { j, g });
    }
    let maps = JohnsonMaps::new(surface);
    let indices: Vec<usize> = (j + 1..=g).collect();
    let t = maps.theta_partial(&indices);
    let mut hom = maps.phi(&maps.sym().square(&t)).scale(&Rational::new(1, 2));
    if let Some(sigma) = relabel {
        hom = relabel_hom(surface, sigma, &hom);
    }
    DerivationAlgebra::new(surface).to_derivation(hom)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twist_values() {
        let s = SurfaceLie::new(3);
        let m = JohnsonMaps::new(&s);
        let d = tau_hyp_twist(&s, 1, None).unwrap();
        assert!(d.hom().column(0).is_zero());
        assert_eq!(d.hom().column(4), &m.bracket_with_theta_partial(4, &[2, 3]));
        assert!(matches!(tau_hyp_twist(&s, 3, None), Err(JohnsonError::TwistOutOfRange { .. })));
    }
}
