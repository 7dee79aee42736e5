//! Exterior powers of `H` and `Sym^2 Lambda^2 H` in letter coordinates.

use std::collections::HashMap;

use crate::free_lie::{pairing, word_weight};
use crate::linalg::{Rational, SparseVector};
use crate::sp_rep::{SpGenerator, SpModule, Weight};

/// Basis of `Lambda^k H`: increasing `k`-subsets of letters, in
/// lexicographic order.
#[derive(Clone, Debug)]
pub struct ExteriorBasis {
    g: usize,
    k: usize,
    subsets: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
}

impl ExteriorBasis {
    pub fn new(g: usize, k: usize) -> Self {
        let n = 2 * g;
        let mut subsets = Vec::new();
        let mut cur = Vec::with_capacity(k);
        fn rec(start: u8, n: u8, k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for l in start..n {
                cur.push(l);
                rec(l + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(0, n as u8, k, &mut cur, &mut subsets);
        let index = subsets.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        ExteriorBasis { g, k, subsets, index }
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.subsets.len()
    }

    pub fn letters(&self, index: usize) -> &[u8] {
        &self.subsets[index]
    }

    /// Index and sign of `x1 ^ x2 ^ ... ^ xk`, or `None` when a letter repeats.
    pub fn wedge_index(&self, letters: &[u8]) -> Option<(usize, i64)> {
        assert_eq!(letters.len(), self.k);
        let mut v = letters.to_vec();
        let mut sign = 1i64;
        // insertion sort, counting transpositions
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] > v[j] {
                v.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((self.index[&v], sign))
    }

    pub fn wedge(&self, letters: &[u8]) -> SparseVector {
        match self.wedge_index(letters) {
            Some((i, s)) => SparseVector::from_entries(self.dim(), [(i, Rational::from_int(s))]),
            None => SparseVector::zero(self.dim()),
        }
    }

    /// Wedge product of vectors given in letter coordinates.
    pub fn wedge_vectors(&self, vectors: &[SparseVector]) -> SparseVector {
        assert_eq!(vectors.len(), self.k);
        let mut acc: Vec<(Vec<u8>, Rational)> = vec![(Vec::new(), Rational::one())];
        for v in vectors {
            let mut next = Vec::new();
            for (word, c) in &acc {
                for (l, d) in v.iter() {
                    let mut w = word.clone();
                    w.push(l as u8);
                    next.push((w, c * d));
                }
            }
            acc = next;
        }
        let mut out = SparseVector::zero(self.dim());
        for (w, c) in acc {
            if let Some((i, s)) = self.wedge_index(&w) {
                out = out.add_scaled(&SparseVector::unit(self.dim(), i), &(c * Rational::from_int(s)));
            }
        }
        out
    }

    /// Action of a Chevalley generator on basis element `index`, as a
    /// derivation of the exterior algebra.
    pub fn act_basis(&self, x: SpGenerator, index: usize) -> SparseVector {
        let letters = &self.subsets[index];
        let mut entries = Vec::new();
        for p in 0..letters.len() {
            if let Some((m, c)) = x.on_letter(self.g, letters[p]) {
                let mut w = letters.clone();
                w[p] = m;
                if let Some((i, s)) = self.wedge_index(&w) {
                    entries.push((i, Rational::from_int(c * s)));
                }
            }
        }
        SparseVector::from_entries(self.dim(), entries)
    }

    pub fn weight(&self, index: usize) -> Weight {
        word_weight(self.g, &self.subsets[index])
    }
}

impl SpModule for ExteriorBasis {
    fn genus(&self) -> usize {
        self.g
    }
    fn dim(&self) -> usize {
        self.subsets.len()
    }
    fn basis_weight(&self, index: usize) -> Weight {
        self.weight(index)
    }
    fn act_basis(&self, x: SpGenerator, index: usize) -> SparseVector {
        ExteriorBasis::act_basis(self, x, index)
    }
}

/// `Sym^2 Lambda^2 H` with basis the products `P Q` of `Lambda^2` basis
/// vectors, `P <= Q`.
#[derive(Clone, Debug)]
pub struct Sym2Lambda2 {
    lambda2: ExteriorBasis,
    pairs: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
}

impl Sym2Lambda2 {
    pub fn new(g: usize) -> Self {
        let lambda2 = ExteriorBasis::new(g, 2);
        let n = lambda2.dim();
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|p| (p..n).map(move |q| (p, q))).collect();
        let index = pairs.iter().enumerate().map(|(i, &pq)| (pq, i)).collect();
        Sym2Lambda2 { lambda2, pairs, index }
    }

    pub fn lambda2(&self) -> &ExteriorBasis {
        &self.lambda2
    }

    pub fn dim(&self) -> usize {
        self.pairs.len()
    }

    pub fn pair(&self, index: usize) -> (usize, usize) {
        self.pairs[index]
    }

    pub fn pair_index(&self, p: usize, q: usize) -> usize {
        self.index[&(p.min(q), p.max(q))]
    }

    /// The symmetric product of two `Lambda^2` vectors.
    pub fn product(&self, x: &SparseVector, y: &SparseVector) -> SparseVector {
        let mut entries = Vec::new();
        for (p, c) in x.iter() {
            for (q, d) in y.iter() {
                entries.push((self.pair_index(p, q), c * d));
            }
        }
        SparseVector::from_entries(self.dim(), entries)
    }

    pub fn square(&self, x: &SparseVector) -> SparseVector {
        self.product(x, x)
    }

    /// `(u1 ^ v1)(u2 ^ v2)` for letters.
    pub fn monomial(&self, u1: u8, v1: u8, u2: u8, v2: u8) -> SparseVector {
        self.product(&self.lambda2.wedge(&[u1, v1]), &self.lambda2.wedge(&[u2, v2]))
    }

    /// Letters `(u1, v1, u2, v2)` of basis element `index`.
    pub fn letters(&self, index: usize) -> [u8; 4] {
        let (p, q) = self.pairs[index];
        let a = self.lambda2.letters(p);
        let b = self.lambda2.letters(q);
        [a[0], a[1], b[0], b[1]]
    }
}

impl SpModule for Sym2Lambda2 {
    fn genus(&self) -> usize {
        self.lambda2.genus()
    }
    fn dim(&self) -> usize {
        self.pairs.len()
    }
    fn basis_weight(&self, index: usize) -> Weight {
        let (p, q) = self.pairs[index];
        self.lambda2.weight(p).add(&self.lambda2.weight(q))
    }
    fn act_basis(&self, x: SpGenerator, index: usize) -> SparseVector {
        let (p, q) = self.pairs[index];
        let up = SparseVector::unit(self.lambda2.dim(), p);
        let uq = SparseVector::unit(self.lambda2.dim(), q);
        let xp = self.lambda2.act_basis(x, p);
        let xq = self.lambda2.act_basis(x, q);
        self.product(&xp, &uq).add(&self.product(&up, &xq))
    }
}

/// `theta = sum_i a_i ^ b_i` in `Lambda^2 H`.
pub fn theta_wedge(l2: &ExteriorBasis) -> SparseVector {
    theta_partial_wedge(l2, &(1..=l2.genus()).collect::<Vec<_>>())
}

pub fn theta_partial_wedge(l2: &ExteriorBasis, indices: &[usize]) -> SparseVector {
    let entries = indices.iter().map(|&i| {
        let (k, s) = l2.wedge_index(&[(2 * (i - 1)) as u8, (2 * (i - 1) + 1) as u8]).unwrap();
        (k, Rational::from_int(s))
    });
    SparseVector::from_entries(l2.dim(), entries)
}

/// The contraction `u ^ v -> theta(u, v)`.
pub fn contract(l2: &ExteriorBasis, w: &SparseVector) -> Rational {
    w.iter()
        .map(|(k, c)| {
            let l = l2.letters(k);
            c * &Rational::from_int(pairing(l[0], l[1]))
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(ExteriorBasis::new(3, 2).dim(), 15);
        assert_eq!(ExteriorBasis::new(3, 4).dim(), 15);
        assert_eq!(Sym2Lambda2::new(3).dim(), 120);
    }

    #[test]
    fn wedge_signs() {
        let l3 = ExteriorBasis::new(2, 3);
        let (i, s) = l3.wedge_index(&[2, 0, 1]).unwrap();
        assert_eq!((l3.letters(i), s), (&[0u8, 1, 2][..], 1));
        let (_, s) = l3.wedge_index(&[1, 0, 2]).unwrap();
        assert_eq!(s, -1);
        assert!(l3.wedge_index(&[0, 0, 1]).is_none());
    }

    #[test]
    fn theta_is_invariant_in_lambda2() {
        let l2 = ExteriorBasis::new(3, 2);
        let t = theta_wedge(&l2);
        for x in SpGenerator::all(3) {
            assert!(l2.act(x, &t).is_zero(), "{x}");
        }
        assert_eq!(contract(&l2, &t), Rational::from_int(3));
    }
}
