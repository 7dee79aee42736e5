//! Separating Dehn twists acting on the free group, and their images in
//! `Hom(H, p(3))` recomputed through the Magnus expansion.
//!
//! Generator `gamma_{2i-1}` corresponds to `a_i` and `gamma_{2i}` to `b_i`,
//! so `gamma_m` is letter `m - 1`.

mod series;
mod word;

use rayon::prelude::*;

pub use series::{lcs_class, magnus, MagnusSeries};
pub use word::{FreeGroupWord, TwistAutomorphism};

use crate::free_lie::FreeLieError;
use crate::johnson_calculus::{tau_hyp_twist, Derivation, DerivationAlgebra, HomElement, JohnsonError};
use crate::linalg::Rational;
use crate::report::Report;
use crate::surface_lie::SurfaceLie;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MagnusError {
    #[error("word is not in the class-{class} term: its degree-{degree} part is nonzero")]
    NotInLCS { class: usize, degree: usize },
    #[error("generator gamma_{generator}: {source}")]
    Generator { generator: usize, source: Box<MagnusError> },
    #[error("series has constant term different from 1")]
    NotGroupLike,
    #[error("twist index {j} outside 1..={max}", max = .g - 1)]
    TwistOutOfRange { j: usize, g: usize },
    #[error(transparent)]
    FreeLie(#[from] FreeLieError),
    #[error(transparent)]
    Johnson(#[from] JohnsonError),
}

/// `prod_{k <= j} [gamma_{2k-1}, gamma_{2k}]`.
pub fn boundary_word(j: usize) -> FreeGroupWord {
    (1..=j).fold(FreeGroupWord::identity(), |acc, k| {
        acc.mul(&FreeGroupWord::commutator(
            &FreeGroupWord::generator(2 * k - 1),
            &FreeGroupWord::generator(2 * k),
        ))
    })
}

/// The twist about the curve cutting off the first `j` handles: identity on
/// `gamma_i` for `i <= 2j`, conjugation by the boundary word otherwise. With
/// `inverse` the conjugation is by the inverse word.
pub fn dehn_twist(g: usize, j: usize, inverse: bool) -> Result<TwistAutomorphism, MagnusError> {
    if j == 0 || j >= g {
        return Err(MagnusError::TwistOutOfRange { j, g });
    }
    let mut c = boundary_word(j);
    if inverse {
        c = c.inverse();
    }
    let images = (1..=2 * g)
        .map(|i| {
            let x = FreeGroupWord::generator(i);
            if i <= 2 * j {
                x
            } else {
                x.conjugate(&c)
            }
        })
        .collect();
    Ok(TwistAutomorphism { g, j, images })
}

/// Per-generator data gathered while recomputing a twist image.
#[derive(Clone, Debug)]
pub struct TwistClasses {
    pub derivation: Derivation,
    /// `true` when every degree-2 part of `omega(gamma_i) gamma_i^-1`
    /// vanishes in `p(2)`.
    pub degree_two_trivial: bool,
}

/// Recomputes `tau(omega_j)` from the twist automorphism: the class of
/// `omega_j(gamma_i) gamma_i^-1` in degree 3, reduced to `p(3)`, is the value
/// on the `i`-th generator.
pub fn tau_hyp_from_twist(
    surface: &SurfaceLie,
    j: usize,
    inverse: bool,
) -> Result<TwistClasses, MagnusError> {
    let g = surface.genus();
    let f = surface.free();
    let twist = dehn_twist(g, j, inverse)?;
    let per_generator: Vec<Result<(bool, _), MagnusError>> = (1..=2 * g)
        .into_par_iter()
        .map(|i| {
            let w = twist.image(i).mul(&FreeGroupWord::generator(i).inverse());
            let wrap = |e: MagnusError| MagnusError::Generator { generator: i, source: Box::new(e) };
            let log = magnus(&w, f.rank(), 3).log().map_err(wrap)?;
            let low = log.part(1).is_zero() && {
                let t = crate::free_lie::TensorElement::from_coords(2, log.part(2).clone());
                let d2 = f.dynkin_projection(&t).map_err(|e| wrap(e.into()))?;
                surface.reduce(&d2).is_zero()
            };
            let class = lcs_class(f, &w, 3).map_err(wrap)?;
            Ok((low, surface.reduce(&class)))
        })
        .collect();
    let mut columns = Vec::with_capacity(2 * g);
    let mut degree_two_trivial = true;
    for r in per_generator {
        let (low, col) = r?;
        degree_two_trivial &= low;
        columns.push(col);
    }
    let derivation = DerivationAlgebra::new(surface).to_derivation(HomElement::new(3, columns))?;
    Ok(TwistClasses { derivation, degree_two_trivial })
}

/// Compares the Magnus recomputation with the closed form for every `j`,
/// and checks that the twists about the two extreme curves commute.
pub fn verify_magnus_oracle(surface: &SurfaceLie, inverse: bool) -> Result<Report, MagnusError> {
    let g = surface.genus();
    let mut r = Report::new("magnus-oracle", g);
    let sign = Rational::from_int(if inverse { -1 } else { 1 });
    for j in 1..g {
        let twist = dehn_twist(g, j, inverse)?;
        let identity: Vec<Vec<i64>> =
            (0..2 * g).map(|i| (0..2 * g).map(|k| i64::from(i == k)).collect()).collect();
        r.check(format!("omega_{j} acts trivially on homology"), twist.abelianization() == identity);
        let classes = tau_hyp_from_twist(surface, j, inverse)?;
        r.check(format!("degree-2 classes of omega_{j} vanish in p(2)"), classes.degree_two_trivial);
        let closed = tau_hyp_twist(surface, j, None)?.into_hom().scale(&sign);
        r.check(format!("Magnus image of omega_{j} = closed form"), classes.derivation.hom() == &closed);
    }
    let first = dehn_twist(g, 1, inverse)?;
    let last = dehn_twist(g, g - 1, inverse)?;
    r.check(
        format!("omega_1 omega_{} = omega_{} omega_1 on every generator", g - 1, g - 1),
        first.compose(&last) == last.compose(&first),
    );
    r.witness("twists", g - 1);
    r.witness("orientation", if inverse { "inverse" } else { "standard" });
    r.note("agreement is asserted for the images in Hom(H, p(3)); automorphisms differing by an inner automorphism have the same image");
    Ok(r)
}
