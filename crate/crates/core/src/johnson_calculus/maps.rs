//! The equivariant maps between `Sym^2 Lambda^2 H`, `Lambda^k H` and
//! `Hom(H, p)`.

use super::derivations::HomElement;
use super::exterior::{contract, theta_partial_wedge, theta_wedge, ExteriorBasis, Sym2Lambda2};
use crate::free_lie::{pairing, LieElement};
use crate::linalg::{Rational, SparseVector};
use crate::surface_lie::{PElement, SurfaceLie};

/// Bundles the bases used by the maps for a fixed genus.
pub struct JohnsonMaps<'a> {
    surface: &'a SurfaceLie,
    lambda2: ExteriorBasis,
    lambda3: ExteriorBasis,
    lambda4: ExteriorBasis,
    sym: Sym2Lambda2,
}

impl<'a> JohnsonMaps<'a> {
    pub fn new(surface: &'a SurfaceLie) -> Self {
        let g = surface.genus();
        JohnsonMaps {
            surface,
            lambda2: ExteriorBasis::new(g, 2),
            lambda3: ExteriorBasis::new(g, 3),
            lambda4: ExteriorBasis::new(g, 4),
            sym: Sym2Lambda2::new(g),
        }
    }

    pub fn surface(&self) -> &SurfaceLie {
        self.surface
    }

    pub fn genus(&self) -> usize {
        self.surface.genus()
    }

    pub fn lambda2(&self) -> &ExteriorBasis {
        &self.lambda2
    }

    pub fn lambda3(&self) -> &ExteriorBasis {
        &self.lambda3
    }

    pub fn lambda4(&self) -> &ExteriorBasis {
        &self.lambda4
    }

    pub fn sym(&self) -> &Sym2Lambda2 {
        &self.sym
    }

    pub fn theta(&self) -> SparseVector {
        theta_wedge(&self.lambda2)
    }

    pub fn theta_partial(&self, indices: &[usize]) -> SparseVector {
        theta_partial_wedge(&self.lambda2, indices)
    }

    fn rank(&self) -> usize {
        2 * self.genus()
    }

    fn right_normed(&self, letters: &[u8]) -> LieElement {
        self.surface.free().right_normed(letters)
    }

    fn theta_form(x: u8, y: u8) -> Rational {
        Rational::from_int(pairing(x, y))
    }

    /// `phi` on the monomial `(u1 ^ v1)(u2 ^ v2)`, as free-Lie columns.
    fn phi_monomial(&self, [u1, v1, u2, v2]: [u8; 4]) -> Vec<LieElement> {
        let f = self.surface.free();
        let t1 = self.right_normed(&[v1, u2, v2]);
        let t2 = self.right_normed(&[u1, u2, v2]);
        let t3 = self.right_normed(&[v2, u1, v1]);
        let t4 = self.right_normed(&[u2, u1, v1]);
        (0..self.rank() as u8)
            .map(|x| {
                let mut acc = f.zero(3);
                for (l, t, s) in [(u1, &t1, 1), (v1, &t2, -1), (u2, &t3, 1), (v2, &t4, -1)] {
                    let c = pairing(l, x) * s;
                    if c != 0 {
                        acc = acc.add_scaled(t, &Rational::from_int(c));
                    }
                }
                acc
            })
            .collect()
    }

    /// `phi: Sym^2 Lambda^2 H -> Hom(H, p(3))`.
    pub fn phi(&self, s: &SparseVector) -> HomElement {
        let f = self.surface.free();
        let mut cols: Vec<LieElement> = (0..self.rank()).map(|_| f.zero(3)).collect();
        for (k, c) in s.iter() {
            for (col, t) in cols.iter_mut().zip(self.phi_monomial(self.sym.letters(k))) {
                *col = col.add_scaled(&t, c);
            }
        }
        HomElement::new(3, cols.iter().map(|c| self.surface.reduce(c)).collect())
    }

    /// `phi': Lambda^3 H -> Hom(H, p(2))`,
    /// `x ^ y ^ z -> (u -> theta(x,u)[y,z] + theta(y,u)[z,x] + theta(z,u)[x,y])`.
    pub fn phi_prime(&self, t: &SparseVector) -> HomElement {
        let f = self.surface.free();
        let mut cols: Vec<LieElement> = (0..self.rank()).map(|_| f.zero(2)).collect();
        for (k, c) in t.iter() {
            let l = self.lambda3.letters(k);
            let (x, y, z) = (l[0], l[1], l[2]);
            for (u, col) in cols.iter_mut().enumerate() {
                let u = u as u8;
                for (p, q, r) in [(x, y, z), (y, z, x), (z, x, y)] {
                    let e = pairing(p, u);
                    if e != 0 {
                        *col = col.add_scaled(&f.left_normed(&[q, r]), &(c * &Rational::from_int(e)));
                    }
                }
            }
        }
        HomElement::new(2, cols.iter().map(|c| self.surface.reduce(c)).collect())
    }

    /// `pi: Sym^2 Lambda^2 H -> Lambda^2 H`.
    pub fn pi(&self, s: &SparseVector) -> SparseVector {
        let half = Rational::new(1, 2);
        let mut out = SparseVector::zero(self.lambda2.dim());
        for (k, c) in s.iter() {
            let [u1, v1, u2, v2] = self.sym.letters(k);
            let terms = [
                (Self::theta_form(u1, v1), [v2, u2]),
                (Self::theta_form(v2, u2), [u1, v1]),
                (&half * &Self::theta_form(u1, v2), [v1, u2]),
                (&half * &Self::theta_form(v1, u2), [u1, v2]),
                (&half * &Self::theta_form(u1, u2), [v2, v1]),
                (&half * &Self::theta_form(v2, v1), [u1, u2]),
            ];
            for (e, w) in terms {
                if !e.is_zero() {
                    out = out.add_scaled(&self.lambda2.wedge(&w), &(c * &e));
                }
            }
        }
        out
    }

    /// Multiplication by `theta`, `Lambda^2 H -> Sym^2 Lambda^2 H`.
    pub fn times_theta(&self, w: &SparseVector) -> SparseVector {
        self.sym.product(w, &self.theta())
    }

    /// The splitting `p: Lambda^2 H -> Sym^2 Lambda^2 H` of `pi`.
    pub fn p_split(&self, w: &SparseVector) -> SparseVector {
        let g = self.genus() as i64;
        let t = self.theta();
        let c = contract(&self.lambda2, w);
        let prim = w.add_scaled(&t, &-(&c / &Rational::from_int(g)));
        let a = self.sym.square(&t).scale(&-(&c / &Rational::from_int(g * (2 * g + 1))));
        a.add_scaled(&self.times_theta(&prim), &Rational::new(-1, g + 1))
    }

    /// Component of `s` in `ker pi = Lambda^4 H + V_[2,2]`.
    pub fn project_22(&self, s: &SparseVector) -> SparseVector {
        s.sub(&self.p_split(&self.pi(s)))
    }

    /// `Lambda^4 H -> Sym^2 Lambda^2 H`,
    /// `v1^v2^v3^v4 -> (v1^v2)(v3^v4) + (v1^v3)(v4^v2) + (v1^v4)(v2^v3)`.
    pub fn lambda4_embed(&self, t: &SparseVector) -> SparseVector {
        let mut out = SparseVector::zero(self.sym.dim());
        for (k, c) in t.iter() {
            let l = self.lambda4.letters(k);
            let (v1, v2, v3, v4) = (l[0], l[1], l[2], l[3]);
            let m = self
                .sym
                .monomial(v1, v2, v3, v4)
                .add(&self.sym.monomial(v1, v3, v4, v2))
                .add(&self.sym.monomial(v1, v4, v2, v3));
            out = out.add_scaled(&m, c);
        }
        out
    }

    /// `x ^ theta` in `Lambda^3 H` for a letter `x`.
    pub fn wedge_theta(&self, x: u8) -> SparseVector {
        let mut out = SparseVector::zero(self.lambda3.dim());
        for i in 0..self.genus() {
            out = out.add(&self.lambda3.wedge(&[x, (2 * i) as u8, (2 * i + 1) as u8]));
        }
        out
    }

    /// `[x, theta_I]` in `p(3)` for a letter `x`.
    pub fn bracket_with_theta_partial(&self, x: u8, indices: &[usize]) -> PElement {
        let f = self.surface.free();
        self.surface.reduce(&f.bracket(&f.letter(x), &f.theta_partial(indices)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_is_symmetric_in_factors() {
        let s = SurfaceLie::new(3);
        let m = JohnsonMaps::new(&s);
        let letters: Vec<u8> = (0..6).collect();
        for &u1 in &letters {
            for &v1 in &letters {
                for &u2 in &letters {
                    for &v2 in &letters {
                        let x = m.pi(&m.sym().monomial(u1, v1, u2, v2));
                        let y = m.pi(&m.sym().monomial(u2, v2, u1, v1));
                        assert_eq!(x, y);
                    }
                }
            }
        }
    }

    #[test]
    fn phi_prime_examples() {
        let s = SurfaceLie::new(3);
        let m = JohnsonMaps::new(&s);
        let d = m.phi_prime(&m.lambda3().wedge(&[0, 1, 2]));
        assert_eq!(d.column(3), &s.left_normed(&[0, 1]));
        let d = m.phi_prime(&m.lambda3().wedge(&[0, 2, 4]));
        assert_eq!(d.column(5), &s.left_normed(&[0, 2]));
    }

    #[test]
    fn pi_after_p_is_identity() {
        let s = SurfaceLie::new(3);
        let m = JohnsonMaps::new(&s);
        for k in 0..m.lambda2().dim() {
            let w = SparseVector::unit(m.lambda2().dim(), k);
            assert_eq!(m.pi(&m.p_split(&w)), w);
        }
    }
}
