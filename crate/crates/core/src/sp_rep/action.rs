use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{decompose, Character, Decomposition, SpRepError, Weight};
use crate::linalg::{Echelon, Rational, SparseVector};

/// Chevalley generators of `sp(2g)`, indices in `1..=g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpGenerator {
    E(usize),
    F(usize),
    H(usize),
}

impl SpGenerator {
    pub fn all(g: usize) -> Vec<SpGenerator> {
        let mut v = Vec::with_capacity(3 * g);
        for i in 1..=g {
            v.push(SpGenerator::E(i));
            v.push(SpGenerator::F(i));
            v.push(SpGenerator::H(i));
        }
        v
    }

    pub fn raising(g: usize) -> Vec<SpGenerator> {
        (1..=g).map(SpGenerator::E).collect()
    }

    pub fn root_vectors(g: usize) -> Vec<SpGenerator> {
        (1..=g).flat_map(|i| [SpGenerator::E(i), SpGenerator::F(i)]).collect()
    }

    /// Weight by which the generator shifts weight vectors.
    pub fn weight(self, g: usize) -> Weight {
        let mut w = vec![0i32; g];
        match self {
            SpGenerator::E(i) if i < g => {
                w[i - 1] = 1;
                w[i] = -1;
            }
            SpGenerator::E(_) => w[g - 1] = 2,
            SpGenerator::F(i) if i < g => {
                w[i - 1] = -1;
                w[i] = 1;
            }
            SpGenerator::F(_) => w[g - 1] = -2,
            SpGenerator::H(_) => {}
        }
        Weight(w)
    }

    /// Eigenvalue of `h_i` on a weight vector: the pairing with the coroot.
    pub fn coroot_pairing(i: usize, g: usize, w: &Weight) -> i64 {
        if i < g {
            (w.0[i - 1] - w.0[i]) as i64
        } else {
            w.0[g - 1] as i64
        }
    }

    /// Action on the letters of `H`: `(letter, coefficient)` of the image.
    pub fn on_letter(self, g: usize, letter: u8) -> Option<(u8, i64)> {
        let idx = letter as usize / 2 + 1;
        let is_a = letter.is_multiple_of(2);
        let a = |i: usize| (2 * (i - 1)) as u8;
        let b = |i: usize| (2 * (i - 1) + 1) as u8;
        match self {
            SpGenerator::E(i) if i < g => match (is_a, idx) {
                (true, k) if k == i + 1 => Some((a(i), 1)),
                (false, k) if k == i => Some((b(i + 1), -1)),
                _ => None,
            },
            SpGenerator::E(_) => (!is_a && idx == g).then_some((a(g), 1)),
            SpGenerator::F(i) if i < g => match (is_a, idx) {
                (true, k) if k == i => Some((a(i + 1), 1)),
                (false, k) if k == i + 1 => Some((b(i), -1)),
                _ => None,
            },
            SpGenerator::F(_) => (is_a && idx == g).then_some((b(g), 1)),
            SpGenerator::H(i) => {
                let w = crate::free_lie::letter_weight(g, letter);
                let c = SpGenerator::coroot_pairing(i, g, &w);
                (c != 0).then_some((letter, c))
            }
        }
    }
}

impl std::fmt::Display for SpGenerator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpGenerator::E(i) => write!(f, "e{i}"),
            SpGenerator::F(i) => write!(f, "f{i}"),
            SpGenerator::H(i) => write!(f, "h{i}"),
        }
    }
}

/// A finite-dimensional `sp(2g)`-module with a basis of torus weight vectors.
pub trait SpModule: Sync {
    fn genus(&self) -> usize;
    fn dim(&self) -> usize;
    fn basis_weight(&self, index: usize) -> Weight;
    /// Image of basis vector `index` under a root vector or Cartan generator.
    fn act_basis(&self, x: SpGenerator, index: usize) -> SparseVector;

    fn character(&self) -> Character {
        Character::from_weights(self.genus(), (0..self.dim()).map(|i| self.basis_weight(i)))
    }

    fn act(&self, x: SpGenerator, v: &SparseVector) -> SparseVector {
        assert_eq!(v.dim(), self.dim(), "vector does not belong to this module");
        if let SpGenerator::H(i) = x {
            let g = self.genus();
            let entries = v.iter().map(|(k, c)| {
                let h = SpGenerator::coroot_pairing(i, g, &self.basis_weight(k));
                (k, c * &Rational::from_int(h))
            });
            return SparseVector::from_entries(self.dim(), entries);
        }
        let mut acc = SparseVector::zero(self.dim());
        for (k, c) in v.iter() {
            acc = acc.add_scaled(&self.act_basis(x, k), c);
        }
        acc
    }
}

/// Images of every basis vector under each root vector, for modules whose
/// `act_basis` is expensive.
pub struct ActionTable {
    g: usize,
    weights: Vec<Weight>,
    images: BTreeMap<SpGenerator, Vec<SparseVector>>,
}

impl ActionTable {
    pub fn build<M: SpModule + ?Sized>(module: &M) -> Self {
        let g = module.genus();
        let weights = (0..module.dim()).map(|i| module.basis_weight(i)).collect();
        let images = SpGenerator::root_vectors(g)
            .into_iter()
            .map(|x| {
                let col: Vec<SparseVector> =
                    (0..module.dim()).into_par_iter().map(|i| module.act_basis(x, i)).collect();
                (x, col)
            })
            .collect();
        ActionTable { g, weights, images }
    }
}

impl SpModule for ActionTable {
    fn genus(&self) -> usize {
        self.g
    }
    fn dim(&self) -> usize {
        self.weights.len()
    }
    fn basis_weight(&self, index: usize) -> Weight {
        self.weights[index].clone()
    }
    fn act_basis(&self, x: SpGenerator, index: usize) -> SparseVector {
        match x {
            SpGenerator::H(i) => {
                let h = SpGenerator::coroot_pairing(i, self.g, &self.weights[index]);
                SparseVector::from_entries(
                    self.dim(),
                    [(index, Rational::from_int(h))],
                )
            }
            _ => self.images[&x][index].clone(),
        }
    }
}

/// Splits a vector into its torus weight components.
pub fn weight_components<M: SpModule + ?Sized>(
    module: &M,
    v: &SparseVector,
) -> BTreeMap<Weight, SparseVector> {
    let mut parts: BTreeMap<Weight, Vec<(usize, Rational)>> = BTreeMap::new();
    for (k, c) in v.iter() {
        parts.entry(module.basis_weight(k)).or_default().push((k, c.clone()));
    }
    parts.into_iter().map(|(w, e)| (w, SparseVector::from_entries(v.dim(), e))).collect()
}

/// The submodule generated by a set of vectors, as echelon bases of its
/// weight spaces.
pub struct Submodule {
    g: usize,
    spaces: BTreeMap<Weight, Echelon>,
}

impl Submodule {
    pub fn generate<M: SpModule + ?Sized>(module: &M, seeds: &[SparseVector]) -> Self {
        let g = module.genus();
        let gens = SpGenerator::root_vectors(g);
        let mut spaces: BTreeMap<Weight, Echelon> = BTreeMap::new();
        let mut queue: Vec<SparseVector> = seeds.to_vec();
        while let Some(v) = queue.pop() {
            for (w, part) in weight_components(module, &v) {
                let space = spaces.entry(w).or_insert_with(|| Echelon::new(module.dim()));
                let residual = space.normal_form(&part);
                if residual.is_zero() {
                    continue;
                }
                space.insert(residual.clone());
                for &x in &gens {
                    let image = module.act(x, &residual);
                    if !image.is_zero() {
                        queue.push(image);
                    }
                }
            }
        }
        Submodule { g, spaces }
    }

    pub fn dim(&self) -> usize {
        self.spaces.values().map(|e| e.rank()).sum()
    }

    pub fn character(&self) -> Character {
        let mut c = Character::new(self.g);
        for (w, e) in &self.spaces {
            c.add_weight(w.clone(), e.rank() as i64);
        }
        c
    }

    pub fn decomposition(&self) -> Result<Decomposition, SpRepError> {
        decompose(&self.character())
    }

    pub fn weight_space(&self, w: &Weight) -> Vec<SparseVector> {
        self.spaces.get(w).map(|e| e.rref_rows()).unwrap_or_default()
    }

    /// A nonzero vector of weight `w` in the submodule killed by every raising
    /// operator, if one exists.
    pub fn highest_weight_vector<M: SpModule + ?Sized>(
        &self,
        module: &M,
        w: &Weight,
    ) -> Option<SparseVector> {
        let basis = self.weight_space(w);
        if basis.is_empty() {
            return None;
        }
        // solve sum_k c_k e_i(v_k) = 0 for all i simultaneously
        let images: Vec<Vec<SparseVector>> = basis
            .iter()
            .map(|v| SpGenerator::raising(self.g).into_iter().map(|x| module.act(x, v)).collect())
            .collect();
        let n = basis.len();
        let d = module.dim();
        let mut rows: BTreeMap<(usize, usize), Vec<(usize, Rational)>> = BTreeMap::new();
        for (k, imgs) in images.iter().enumerate() {
            for (i, img) in imgs.iter().enumerate() {
                for (j, c) in img.iter() {
                    rows.entry((i, j)).or_default().push((k, c.clone()));
                }
            }
        }
        let mut e = Echelon::new(n);
        for (_, entries) in rows {
            e.insert(SparseVector::from_entries(n, entries));
        }
        let kernel = crate::linalg::kernel_from_echelon(&e);
        let c = kernel.first()?;
        let mut v = SparseVector::zero(d);
        for (k, x) in c.iter() {
            v = v.add_scaled(&basis[k], x);
        }
        Some(v)
    }
}

/// Decomposition of the submodule generated by `v`.
pub fn submodule_decomposition<M: SpModule + ?Sized>(
    module: &M,
    v: &SparseVector,
) -> Result<Decomposition, SpRepError> {
    Submodule::generate(module, std::slice::from_ref(v)).decomposition()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The standard module `H`.
    struct Standard(usize);

    impl SpModule for Standard {
        fn genus(&self) -> usize {
            self.0
        }
        fn dim(&self) -> usize {
            2 * self.0
        }
        fn basis_weight(&self, index: usize) -> Weight {
            crate::free_lie::letter_weight(self.0, index as u8)
        }
        fn act_basis(&self, x: SpGenerator, index: usize) -> SparseVector {
            let entries = x
                .on_letter(self.0, index as u8)
                .map(|(l, c)| (l as usize, Rational::from_int(c)));
            SparseVector::from_entries(self.dim(), entries)
        }
    }

    fn commutator(m: &Standard, x: SpGenerator, y: SpGenerator, v: &SparseVector) -> SparseVector {
        m.act(x, &m.act(y, v)).sub(&m.act(y, &m.act(x, v)))
    }

    #[test]
    fn chevalley_relations_on_standard_module() {
        for g in 2..=4 {
            let m = Standard(g);
            for k in 0..m.dim() {
                let v = SparseVector::unit(m.dim(), k);
                for i in 1..=g {
                    let ef = commutator(&m, SpGenerator::E(i), SpGenerator::F(i), &v);
                    assert_eq!(ef, m.act(SpGenerator::H(i), &v), "g={g} i={i} k={k}");
                    for j in 1..=g {
                        if i != j {
                            let c = commutator(&m, SpGenerator::E(i), SpGenerator::F(j), &v);
                            assert!(c.is_zero());
                        }
                        let he = commutator(&m, SpGenerator::H(i), SpGenerator::E(j), &v);
                        let shift = SpGenerator::coroot_pairing(i, g, &SpGenerator::E(j).weight(g));
                        let expected = m.act(SpGenerator::E(j), &v).scale(&Rational::from_int(shift));
                        assert_eq!(he, expected);
                    }
                }
            }
        }
    }

    #[test]
    fn weight_conventions() {
        let m = Standard(3);
        let a1 = SparseVector::unit(6, 0);
        assert_eq!(m.act(SpGenerator::H(1), &a1), a1);
        assert_eq!(
            submodule_decomposition(&m, &a1).unwrap().to_string(),
            "[1]"
        );
    }

    #[test]
    fn highest_weight_of_standard_module() {
        let m = Standard(3);
        let sub = Submodule::generate(&m, &[SparseVector::unit(6, 5)]);
        assert_eq!(sub.dim(), 6);
        let hw = sub.highest_weight_vector(&m, &Weight(vec![1, 0, 0])).unwrap();
        assert_eq!(hw.entries()[0].0, 0);
        assert!(sub.highest_weight_vector(&m, &Weight(vec![0, 1, 0])).is_none());
    }
}
