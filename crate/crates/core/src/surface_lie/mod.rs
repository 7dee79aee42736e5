//! The surface Lie algebra `p = L(H)/<theta>` in degrees below the cap.
//!
//! The ideal in degree `m` is spanned by `[h, y]` for letters `h` and a basis
//! `y` of the ideal in degree `m - 1`, starting from `theta` in degree 2. It is
//! echelonized one torus weight at a time; the non-pivot Lyndon indices give
//! the quotient basis.

mod config;

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use crate::free_lie::{FreeLie, GeneratorIndex, LieElement, MAX_SUPPORTED_DEGREE};
use crate::linalg::{Echelon, Rational, SparseVector};
use crate::sp_rep::{SpGenerator, SpModule, Weight};

pub use config::{verify_no_map, ConfigAlgebra, ConfigDeg2Element, ConfigError, NoMapReport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurfaceLieError {
    #[error("Labute sum for g={g}, m={m} is not divisible by m")]
    NonIntegralLabute { g: usize, m: usize },
    #[error("degree {degree} exceeds the cap {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },
}

/// Quotient data for one degree.
#[derive(Debug)]
pub struct PBasis {
    g: usize,
    degree: usize,
    lie_dim: usize,
    // independent elements of I(m), each a bracket of a letter with an
    // earlier generator; they seed the next degree
    ideal_generators: Vec<LieElement>,
    ideal_rows: Vec<SparseVector>,
    pivot_row: Vec<Option<u32>>,
    quotient: Vec<usize>,
    position: Vec<Option<u32>>,
    weights: Vec<Weight>,
}

impl PBasis {
    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.quotient.len()
    }

    pub fn lie_dim(&self) -> usize {
        self.lie_dim
    }

    pub fn ideal_dim(&self) -> usize {
        self.ideal_rows.len()
    }

    /// Echelonized basis of the ideal, in Lyndon coordinates.
    pub fn ideal_rows(&self) -> &[SparseVector] {
        &self.ideal_rows
    }

    pub fn ideal_generators(&self) -> &[LieElement] {
        &self.ideal_generators
    }

    /// Lyndon indices representing the quotient basis.
    pub fn quotient_indices(&self) -> &[usize] {
        &self.quotient
    }

    pub fn weight(&self, index: usize) -> &Weight {
        &self.weights[index]
    }

    fn reduce_coords(&self, v: &SparseVector) -> SparseVector {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, c) in v.iter() {
            match self.pivot_row[i] {
                Some(r) => {
                    // rows are fully reduced, so only non-pivot columns remain
                    for (j, x) in self.ideal_rows[r as usize].iter().skip(1) {
                        *acc.entry(j).or_default() -= &(c * x);
                    }
                }
                None => *acc.entry(i).or_default() += c,
            }
        }
        let entries = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.position[i].expect("non-pivot column") as usize, c));
        SparseVector::from_entries(self.dim(), entries)
    }
}

/// A homogeneous element of `p(m)` in quotient coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PElement {
    degree: usize,
    coords: SparseVector,
}

impl PElement {
    pub fn from_coords(degree: usize, coords: SparseVector) -> Self {
        PElement { degree, coords }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coords(&self) -> &SparseVector {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    pub fn add(&self, other: &PElement) -> PElement {
        assert_eq!(self.degree, other.degree, "adding elements of different degrees");
        PElement { degree: self.degree, coords: self.coords.add(&other.coords) }
    }

    pub fn sub(&self, other: &PElement) -> PElement {
        assert_eq!(self.degree, other.degree, "subtracting elements of different degrees");
        PElement { degree: self.degree, coords: self.coords.sub(&other.coords) }
    }

    pub fn scale(&self, c: &Rational) -> PElement {
        PElement { degree: self.degree, coords: self.coords.scale(c) }
    }

    pub fn add_scaled(&self, other: &PElement, c: &Rational) -> PElement {
        assert_eq!(self.degree, other.degree, "adding elements of different degrees");
        PElement { degree: self.degree, coords: self.coords.add_scaled(&other.coords, c) }
    }

    pub fn neg(&self) -> PElement {
        PElement { degree: self.degree, coords: self.coords.neg() }
    }
}

/// The surface Lie algebra of genus `g`, with memoized quotient bases.
#[derive(Debug)]
pub struct SurfaceLie {
    free: FreeLie,
    bases: Vec<OnceLock<Arc<PBasis>>>,
}

impl SurfaceLie {
    pub fn new(g: usize) -> Self {
        SurfaceLie {
            free: FreeLie::new(g),
            bases: (0..=MAX_SUPPORTED_DEGREE).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn genus(&self) -> usize {
        self.free.genus()
    }

    pub fn free(&self) -> &FreeLie {
        &self.free
    }

    pub fn basis(&self, degree: usize) -> Arc<PBasis> {
        assert!((1..=MAX_SUPPORTED_DEGREE).contains(&degree), "degree {degree} out of range");
        self.bases[degree].get_or_init(|| Arc::new(self.build(degree))).clone()
    }

    pub fn dim(&self, degree: usize) -> usize {
        self.basis(degree).dim()
    }

    fn build(&self, degree: usize) -> PBasis {
        let g = self.genus();
        let lb = self.free.basis(degree);
        let candidates: Vec<LieElement> = match degree {
            1 => Vec::new(),
            2 => vec![self.free.theta()],
            _ => {
                let prev = self.basis(degree - 1);
                let letters: Vec<u8> = (0..self.free.rank() as u8).collect();
                prev.ideal_generators
                    .par_iter()
                    .flat_map_iter(|y| {
                        letters.iter().map(move |&h| self.free.bracket(&self.free.letter(h), y))
                    })
                    .collect()
            }
        };

        // every candidate is a weight vector
        let mut blocks: BTreeMap<Weight, Vec<LieElement>> = BTreeMap::new();
        for c in candidates {
            if let Some((i, _)) = c.coords().leading() {
                blocks.entry(lb.weight(i).clone()).or_default().push(c);
            }
        }
        let blocks: Vec<Vec<LieElement>> = blocks.into_values().collect();
        let solved: Vec<(Vec<LieElement>, Vec<SparseVector>)> = blocks
            .into_par_iter()
            .map(|block| {
                let mut e = Echelon::new(lb.len());
                let mut kept = Vec::new();
                for c in block {
                    if e.insert(c.coords().clone()) {
                        kept.push(c);
                    }
                }
                (kept, e.rref_rows())
            })
            .collect();

        let mut ideal_generators = Vec::new();
        let mut ideal_rows = Vec::new();
        for (kept, rows) in solved {
            ideal_generators.extend(kept);
            ideal_rows.extend(rows);
        }
        ideal_rows.sort_by_key(|r| r.leading().map(|(i, _)| i));
        let mut pivot_row = vec![None; lb.len()];
        for (k, r) in ideal_rows.iter().enumerate() {
            pivot_row[r.leading().unwrap().0] = Some(k as u32);
        }
        let quotient: Vec<usize> = (0..lb.len()).filter(|&i| pivot_row[i].is_none()).collect();
        let mut position = vec![None; lb.len()];
        for (k, &i) in quotient.iter().enumerate() {
            position[i] = Some(k as u32);
        }
        let weights = quotient.iter().map(|&i| lb.weight(i).clone()).collect();
        PBasis {
            g,
            degree,
            lie_dim: lb.len(),
            ideal_generators,
            ideal_rows,
            pivot_row,
            quotient,
            position,
            weights,
        }
    }

    /// Spanning set of the ideal `<theta>` in degree `m`, echelonized.
    pub fn ideal_component(&self, degree: usize) -> Vec<LieElement> {
        self.basis(degree)
            .ideal_rows
            .iter()
            .map(|r| LieElement::from_coords(degree, r.clone()))
            .collect()
    }

    pub fn reduce(&self, x: &LieElement) -> PElement {
        let b = self.basis(x.degree());
        PElement { degree: x.degree(), coords: b.reduce_coords(x.coords()) }
    }

    pub fn lift(&self, x: &PElement) -> LieElement {
        let b = self.basis(x.degree);
        let lie_dim = b.lie_dim;
        let coords = x.coords.remap(lie_dim, |k| b.quotient[k]);
        LieElement::from_coords(x.degree, coords)
    }

    pub fn zero(&self, degree: usize) -> PElement {
        PElement { degree, coords: SparseVector::zero(self.dim(degree)) }
    }

    pub fn basis_element(&self, degree: usize, index: usize) -> PElement {
        PElement { degree, coords: SparseVector::unit(self.dim(degree), index) }
    }

    pub fn generator(&self, x: GeneratorIndex) -> PElement {
        self.reduce(&self.free.generator(x))
    }

    pub fn letter(&self, l: u8) -> PElement {
        self.reduce(&self.free.letter(l))
    }

    pub fn bracket(&self, x: &PElement, y: &PElement) -> PElement {
        self.reduce(&self.free.bracket(&self.lift(x), &self.lift(y)))
    }

    pub fn sp_act(&self, x: SpGenerator, y: &PElement) -> PElement {
        self.reduce(&self.free.sp_act(x, &self.lift(y)))
    }

    /// Left-normed bracket of letters, `[[..[x1, x2], ..], xk]`, in `p`.
    pub fn left_normed(&self, letters: &[u8]) -> PElement {
        self.reduce(&self.free.left_normed(letters))
    }

    pub fn format(&self, x: &PElement) -> String {
        self.free.format(&self.lift(x))
    }

    /// `true` when `z -> ([z, h])_h` is injective on `p(m)`, i.e. no nonzero
    /// element of degree `m` is central.
    pub fn ad_injective(&self, degree: usize) -> bool {
        let target = self.basis(degree + 1);
        let n = self.free.rank();
        let blocks = self.weight_blocks(degree);
        blocks.into_par_iter().all(|(_, indices)| {
            let mut e = Echelon::new(n * target.dim());
            for &k in &indices {
                let z = self.basis_element(degree, k);
                let mut entries = Vec::new();
                for h in 0..n as u8 {
                    let col = self.bracket(&z, &self.letter(h));
                    entries.extend(col.coords.iter().map(|(j, c)| (h as usize * target.dim() + j, c.clone())));
                }
                e.insert(SparseVector::from_entries(n * target.dim(), entries));
            }
            e.rank() == indices.len()
        })
    }

    /// Quotient basis indices grouped by weight.
    pub fn weight_blocks(&self, degree: usize) -> BTreeMap<Weight, Vec<usize>> {
        let b = self.basis(degree);
        let mut out: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
        for k in 0..b.dim() {
            out.entry(b.weights[k].clone()).or_default().push(k);
        }
        out
    }
}

/// `p(m)` as an `sp(2g)`-module.
pub struct PModule<'a> {
    pub surface: &'a SurfaceLie,
    pub degree: usize,
}

impl SpModule for PModule<'_> {
    fn genus(&self) -> usize {
        self.surface.genus()
    }
    fn dim(&self) -> usize {
        self.surface.dim(self.degree)
    }
    fn basis_weight(&self, index: usize) -> Weight {
        self.surface.basis(self.degree).weight(index).clone()
    }
    fn act_basis(&self, x: SpGenerator, index: usize) -> SparseVector {
        let v = self.surface.basis_element(self.degree, index);
        self.surface.sp_act(x, &v).coords
    }
}

/// `L_m(H)` as an `sp(2g)`-module.
pub struct LieModule<'a> {
    pub free: &'a FreeLie,
    pub degree: usize,
}

impl SpModule for LieModule<'_> {
    fn genus(&self) -> usize {
        self.free.genus()
    }
    fn dim(&self) -> usize {
        self.free.dim(self.degree)
    }
    fn basis_weight(&self, index: usize) -> Weight {
        self.free.basis(self.degree).weight(index).clone()
    }
    fn act_basis(&self, x: SpGenerator, index: usize) -> SparseVector {
        let v = self.free.basis_element(self.degree, index);
        self.free.sp_act(x, &v).coords().clone()
    }
}

/// Dimension of `p(m)` from the one-relator formula
/// `m d_m = sum_{d | m} mu(m/d) W(d)`, where `W(0) = 2`, `W(1) = 2g` and
/// `W(k) = 2g W(k-1) - W(k-2)`.
pub fn labute_dim(g: usize, m: usize) -> Result<u128, SurfaceLieError> {
    assert!(m >= 1);
    let two_g = 2 * g as i128;
    let mut w: Vec<i128> = vec![2, two_g];
    for k in 2..=m {
        w.push(two_g * w[k - 1] - w[k - 2]);
    }
    let mut total: i128 = 0;
    for d in 1..=m {
        if m.is_multiple_of(d) {
            total += crate::free_lie::mobius(m / d) as i128 * w[d];
        }
    }
    if total % m as i128 != 0 || total < 0 {
        return Err(SurfaceLieError::NonIntegralLabute { g, m });
    }
    Ok((total / m as i128) as u128)
}
