//! Derivations of `p`, stored by their values on the generators.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::free_lie::{pairing, LieElement, TensorElement};
use crate::linalg::{Echelon, Rational, SparseVector};
use crate::sp_rep::{decompose, Character, Decomposition, SpGenerator, SpModule, SpRepError, Weight};
use crate::surface_lie::{PElement, SurfaceLie};

use super::JohnsonError;

/// A linear map `H -> p(n+1)`, one column per letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomElement {
    target_degree: usize,
    columns: Vec<PElement>,
}

impl HomElement {
    pub fn new(target_degree: usize, columns: Vec<PElement>) -> Self {
        assert!(columns.iter().all(|c| c.degree() == target_degree));
        HomElement { target_degree, columns }
    }

    /// The derivation degree `n`, one less than the target degree.
    pub fn degree(&self) -> usize {
        self.target_degree - 1
    }

    pub fn target_degree(&self) -> usize {
        self.target_degree
    }

    pub fn column(&self, letter: u8) -> &PElement {
        &self.columns[letter as usize]
    }

    pub fn columns(&self) -> &[PElement] {
        &self.columns
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &HomElement) -> HomElement {
        self.add_scaled(other, &Rational::one())
    }

    pub fn sub(&self, other: &HomElement) -> HomElement {
        self.add_scaled(other, &Rational::from_int(-1))
    }

    pub fn add_scaled(&self, other: &HomElement, c: &Rational) -> HomElement {
        assert_eq!(self.target_degree, other.target_degree, "degree mismatch");
        HomElement {
            target_degree: self.target_degree,
            columns: self.columns.iter().zip(&other.columns).map(|(x, y)| x.add_scaled(y, c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> HomElement {
        HomElement {
            target_degree: self.target_degree,
            columns: self.columns.iter().map(|x| x.scale(c)).collect(),
        }
    }

    /// Coordinates in the basis `E_{l,k}` of `Hom(H, p(n+1))`, flattened as
    /// `l * dim p(n+1) + k`.
    pub fn flatten(&self) -> SparseVector {
        let d = self.columns.first().map(|c| c.coords().dim()).unwrap_or(0);
        let entries = self.columns.iter().enumerate().flat_map(|(l, c)| {
            c.coords().iter().map(move |(k, x)| (l * d + k, x.clone())).collect::<Vec<_>>()
        });
        SparseVector::from_entries(d * self.columns.len(), entries)
    }
}

/// A homogeneous derivation of `p`: a `HomElement` that kills `theta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    hom: HomElement,
}

impl Derivation {
    pub fn hom(&self) -> &HomElement {
        &self.hom
    }

    pub fn into_hom(self) -> HomElement {
        self.hom
    }

    pub fn degree(&self) -> usize {
        self.hom.degree()
    }
}

/// Derivation calculus over a fixed surface Lie algebra.
pub struct DerivationAlgebra<'a> {
    surface: &'a SurfaceLie,
}

impl<'a> DerivationAlgebra<'a> {
    pub fn new(surface: &'a SurfaceLie) -> Self {
        DerivationAlgebra { surface }
    }

    pub fn surface(&self) -> &SurfaceLie {
        self.surface
    }

    fn rank(&self) -> usize {
        self.surface.free().rank()
    }

    pub fn zero(&self, n: usize) -> HomElement {
        HomElement::new(n + 1, (0..self.rank()).map(|_| self.surface.zero(n + 1)).collect())
    }

    /// `E_{l,k}`: sends letter `l` to basis vector `k` of `p(n+1)`.
    pub fn elementary(&self, n: usize, letter: usize, k: usize) -> HomElement {
        let mut columns: Vec<PElement> = (0..self.rank()).map(|_| self.surface.zero(n + 1)).collect();
        columns[letter] = self.surface.basis_element(n + 1, k);
        HomElement::new(n + 1, columns)
    }

    pub fn unflatten(&self, n: usize, v: &SparseVector) -> HomElement {
        let d = self.surface.dim(n + 1);
        let mut cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.rank()];
        for (i, c) in v.iter() {
            cols[i / d].push((i % d, c.clone()));
        }
        HomElement::new(
            n + 1,
            cols.into_iter()
                .map(|e| PElement::from_coords(n + 1, SparseVector::from_entries(d, e)))
                .collect(),
        )
    }

    /// `p_n(phi)`: the image of `phi(theta) = sum_i [phi(a_i), b_i] + [a_i, phi(b_i)]`
    /// in `p(n+2)`.
    pub fn p_map(&self, phi: &HomElement) -> PElement {
        let mut acc = self.surface.zero(phi.target_degree + 1);
        for i in 0..self.surface.genus() {
            let (a, b) = ((2 * i) as u8, (2 * i + 1) as u8);
            acc = acc.add(&self.surface.bracket(phi.column(a), &self.surface.letter(b)));
            acc = acc.add(&self.surface.bracket(&self.surface.letter(a), phi.column(b)));
        }
        acc
    }

    /// `p_n(E_{l,k})`: `[e_k, b_i]` for `l = a_i` and `[a_i, e_k]` for `l = b_i`.
    fn p_map_elementary(&self, n: usize, letter: usize, k: usize) -> PElement {
        let e = self.surface.basis_element(n + 1, k);
        let dual = self.surface.letter((letter ^ 1) as u8);
        if letter.is_multiple_of(2) {
            self.surface.bracket(&e, &dual)
        } else {
            self.surface.bracket(&dual, &e)
        }
    }

    pub fn is_derivation(&self, phi: &HomElement) -> bool {
        self.p_map(phi).is_zero()
    }

    pub fn to_derivation(&self, phi: HomElement) -> Result<Derivation, JohnsonError> {
        if self.is_derivation(&phi) {
            Ok(Derivation { hom: phi })
        } else {
            Err(JohnsonError::NotADerivation(self.surface.format(&self.p_map(&phi))))
        }
    }

    fn column_tensors(&self, phi: &HomElement) -> Vec<TensorElement> {
        let f = self.surface.free();
        phi.columns.iter().map(|c| f.to_tensor(&self.surface.lift(c))).collect()
    }

    /// Value of the derivation determined by `phi` on an element of `p`,
    /// through the Leibniz rule on a lifted representative.
    pub fn apply(&self, phi: &HomElement, x: &PElement) -> PElement {
        let f = self.surface.free();
        let t = f.to_tensor(&self.surface.lift(x));
        let out = f.apply_letter_derivation(&t, &self.column_tensors(phi), phi.target_degree);
        let lie = f.from_tensor(&out).expect("derivations preserve Lie elements");
        self.surface.reduce(&lie)
    }

    pub fn apply_lie(&self, phi: &HomElement, x: &LieElement) -> PElement {
        self.apply(phi, &self.surface.reduce(x))
    }

    /// `[D1, D2](h) = D1(D2 h) - D2(D1 h)`.
    pub fn bracket(&self, d1: &HomElement, d2: &HomElement) -> HomElement {
        let n = d1.degree() + d2.degree();
        let columns = (0..self.rank())
            .into_par_iter()
            .map(|l| {
                let x = self.apply(d1, d2.column(l as u8));
                let y = self.apply(d2, d1.column(l as u8));
                x.sub(&y)
            })
            .collect();
        HomElement::new(n + 1, columns)
    }

    /// The inner derivation `h -> [z, h]`.
    pub fn ad(&self, z: &PElement) -> HomElement {
        let columns = (0..self.rank() as u8)
            .map(|l| self.surface.bracket(z, &self.surface.letter(l)))
            .collect();
        HomElement::new(z.degree() + 1, columns)
    }

    /// Finds `z` in `p(n)` with `ad(z) = phi`, when one exists.
    pub fn inner_preimage(&self, phi: &HomElement) -> Option<PElement> {
        let n = phi.degree();
        let target = phi.flatten();
        if target.is_zero() {
            return Some(self.surface.zero(n));
        }
        let d = self.surface.dim(n + 1);
        let weights: std::collections::BTreeSet<Weight> =
            target.iter().map(|(i, _)| self.elementary_weight(n, i / d, i % d)).collect();
        let blocks = self.surface.weight_blocks(n);
        let mut e = Echelon::with_tracking(target.dim());
        let mut order = Vec::new();
        for indices in weights.iter().filter_map(|w| blocks.get(w)) {
            for &k in indices {
                e.insert(self.ad(&self.surface.basis_element(n, k)).flatten());
                order.push(k);
            }
        }
        let c = e.solve(&target)?;
        let entries = c.iter().map(|(i, x)| (order[i], x.clone()));
        Some(PElement::from_coords(n, SparseVector::from_entries(self.surface.dim(n), entries)))
    }

    /// `(x . phi)(h) = x . phi(h) - phi(x . h)`.
    pub fn sp_act(&self, x: SpGenerator, phi: &HomElement) -> HomElement {
        let g = self.surface.genus();
        let columns = (0..self.rank() as u8)
            .map(|h| {
                let mut col = self.surface.sp_act(x, phi.column(h));
                if let Some((m, c)) = x.on_letter(g, h) {
                    col = col.add_scaled(phi.column(m), &Rational::from_int(-c));
                }
                col
            })
            .collect();
        HomElement::new(phi.target_degree, columns)
    }

    /// Weight of `E_{l,k}`.
    fn elementary_weight(&self, n: usize, letter: usize, k: usize) -> Weight {
        let b = self.surface.basis(n + 1);
        b.weight(k).sub(&crate::free_lie::letter_weight(self.surface.genus(), letter as u8))
    }

    /// Basis of `Hom(H, p(n+1))` grouped by weight.
    fn hom_weight_blocks(&self, n: usize) -> BTreeMap<Weight, Vec<(usize, usize)>> {
        let d = self.surface.dim(n + 1);
        let mut out: BTreeMap<Weight, Vec<(usize, usize)>> = BTreeMap::new();
        for l in 0..self.rank() {
            for k in 0..d {
                out.entry(self.elementary_weight(n, l, k)).or_default().push((l, k));
            }
        }
        out
    }

    /// Kernel of `p_n`, computed one weight space at a time.
    fn der_blocks(&self, n: usize) -> Vec<(Weight, Vec<SparseVector>)> {
        let d = self.surface.dim(n + 1);
        let blocks: Vec<(Weight, Vec<(usize, usize)>)> = self.hom_weight_blocks(n).into_iter().collect();
        blocks
            .into_par_iter()
            .map(|(w, elems)| {
                let m = elems.len();
                // matrix of p_n on the block, stored by rows of the target
                let mut rows: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
                for (col, &(l, k)) in elems.iter().enumerate() {
                    let img = self.p_map_elementary(n, l, k);
                    for (r, x) in img.coords().iter() {
                        rows.entry(r).or_default().push((col, x.clone()));
                    }
                }
                let mut e = Echelon::new(m);
                for (_, entries) in rows {
                    e.insert(SparseVector::from_entries(m, entries));
                }
                let kernel = crate::linalg::kernel_from_echelon(&e)
                    .into_iter()
                    .map(|v| {
                        let entries = v.iter().map(|(c, x)| {
                            let (l, k) = elems[c];
                            (l * d + k, x.clone())
                        });
                        SparseVector::from_entries(self.rank() * d, entries)
                    })
                    .collect();
                (w, kernel)
            })
            .collect()
    }

    /// A basis of `Der_n p`.
    pub fn der_basis(&self, n: usize) -> Vec<Derivation> {
        self.der_blocks(n)
            .into_iter()
            .flat_map(|(_, vs)| vs)
            .map(|v| Derivation { hom: self.unflatten(n, &v) })
            .collect()
    }

    pub fn der_character(&self, n: usize) -> Character {
        let mut c = Character::new(self.surface.genus());
        for (w, vs) in self.der_blocks(n) {
            c.add_weight(w, vs.len() as i64);
        }
        c
    }

    pub fn der_decomposition(&self, n: usize) -> Result<Decomposition, SpRepError> {
        decompose(&self.der_character(n))
    }

    pub fn hom_character(&self, n: usize) -> Character {
        let mut c = Character::new(self.surface.genus());
        for (w, e) in self.hom_weight_blocks(n) {
            c.add_weight(w, e.len() as i64);
        }
        c
    }

    /// Character of `Out Der_n = Der_n / ad(p(n))`, after checking that `ad`
    /// is injective in degree `n`.
    pub fn outer_character(&self, n: usize) -> Result<Character, JohnsonError> {
        if !self.surface.ad_injective(n) {
            return Err(JohnsonError::NontrivialCenter(n));
        }
        let p = crate::surface_lie::PModule { surface: self.surface, degree: n };
        Ok(self.der_character(n).sub(&p.character()))
    }

    pub fn outer_decomposition(&self, n: usize) -> Result<Decomposition, JohnsonError> {
        Ok(decompose(&self.outer_character(n)?)?)
    }
}

/// `Hom(H, p(n+1))` as an `sp(2g)`-module, basis `E_{l,k}` flattened.
pub struct HomModule<'a> {
    pub algebra: &'a DerivationAlgebra<'a>,
    pub degree: usize,
}

impl SpModule for HomModule<'_> {
    fn genus(&self) -> usize {
        self.algebra.surface.genus()
    }
    fn dim(&self) -> usize {
        self.algebra.rank() * self.algebra.surface.dim(self.degree + 1)
    }
    fn basis_weight(&self, index: usize) -> Weight {
        let d = self.algebra.surface.dim(self.degree + 1);
        self.algebra.elementary_weight(self.degree, index / d, index % d)
    }
    fn act_basis(&self, x: SpGenerator, index: usize) -> SparseVector {
        let d = self.algebra.surface.dim(self.degree + 1);
        let e = self.algebra.elementary(self.degree, index / d, index % d);
        self.algebra.sp_act(x, &e).flatten()
    }
}

/// Applies a permutation of the handle indices (`sigma[i-1]` is the image of
/// `i`) to a letter; it preserves the symplectic form.
pub fn relabel_letter(sigma: &[usize], letter: u8) -> u8 {
    let i = letter as usize / 2;
    (2 * (sigma[i] - 1) + letter as usize % 2) as u8
}

/// Transports a derivation along a handle relabeling:
/// `(sigma . D)(h) = sigma(D(sigma^{-1} h))`.
pub fn relabel_hom(surface: &SurfaceLie, sigma: &[usize], phi: &HomElement) -> HomElement {
    let f = surface.free();
    let n = f.rank();
    let code_map = |c: usize, len: usize| -> usize {
        let letters = crate::free_lie::decode(n, c, len);
        let mapped: Vec<u8> = letters.iter().map(|&l| relabel_letter(sigma, l)).collect();
        crate::free_lie::encode(n, &mapped)
    };
    let mut columns: Vec<Option<PElement>> = vec![None; n];
    for h in 0..n as u8 {
        let target = relabel_letter(sigma, h);
        let t = f.to_tensor(&surface.lift(phi.column(h)));
        let deg = t.degree();
        let mapped = t.coords().remap(t.coords().dim(), |c| code_map(c, deg));
        let lie = f
            .from_tensor(&TensorElement::from_coords(deg, mapped))
            .expect("relabeling preserves Lie elements");
        columns[target as usize] = Some(surface.reduce(&lie));
    }
    HomElement::new(phi.target_degree(), columns.into_iter().map(Option::unwrap).collect())
}

/// The handle reversal `i -> g + 1 - i`.
pub fn reversal(g: usize) -> Vec<usize> {
    (1..=g).rev().collect()
}

/// `theta(x, y)` on letters, as a scalar.
pub fn form(x: u8, y: u8) -> Rational {
    Rational::from_int(pairing(x, y))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inner_derivations_are_derivations() {
        let s = SurfaceLie::new(3);
        let d = DerivationAlgebra::new(&s);
        for k in [0, 5, 11] {
            let z = s.basis_element(2, k);
            let ad = d.ad(&z);
            assert!(d.is_derivation(&ad));
            assert_eq!(d.inner_preimage(&ad), Some(z));
        }
    }

    #[test]
    fn der_one_dimension() {
        let s = SurfaceLie::new(3);
        let d = DerivationAlgebra::new(&s);
        // Der_1 = [1,1,1] + [1]: 14 + 6
        assert_eq!(d.der_basis(1).len(), 20);
    }

    #[test]
    fn relabeling_round_trip() {
        let s = SurfaceLie::new(3);
        let d = DerivationAlgebra::new(&s);
        let z = s.left_normed(&[0, 1, 2]);
        let ad = d.ad(&z);
        let sigma = reversal(3);
        let back = relabel_hom(&s, &sigma, &relabel_hom(&s, &sigma, &ad));
        assert_eq!(back, ad);
        assert!(d.is_derivation(&relabel_hom(&s, &sigma, &ad)));
    }
}
