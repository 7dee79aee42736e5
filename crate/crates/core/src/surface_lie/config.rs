//! Degree-2 truncation of the Lie algebra of `n` points on a surface.
//!
//! Generators `u^(i)` for `u` in `H` and a point `i`. Brackets between distinct
//! points are multiples of the pair classes `Theta_ij`; brackets at one point
//! split into the `p(2)` part plus a multiple of `Theta_i`, which is rewritten
//! as `-(1/g) sum_{j != i} Theta_ij`.

use std::collections::BTreeMap;
use std::fmt;

use super::{PElement, SurfaceLie};
use crate::free_lie::pairing;
use crate::linalg::{Rational, SparseVector};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("point index {index} outside 1..={n}")]
    PointOutOfRange { index: usize, n: usize },
    #[error("normal form {found} differs from the expected {expected}")]
    Mismatch { expected: String, found: String },
}

/// An element of the degree-2 piece in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigDeg2Element {
    pub n: usize,
    /// Coefficients of `Theta_ij`, keyed by `(i, j)` with `i < j`.
    pub theta_pairs: BTreeMap<(usize, usize), Rational>,
    /// The `p(2)` component at each point.
    pub local: Vec<PElement>,
    /// Formal coefficients of symbols from the untouched summand.
    pub outer: BTreeMap<String, Rational>,
}

impl ConfigDeg2Element {
    pub fn theta_coefficient(&self, i: usize, j: usize) -> Rational {
        let key = (i.min(j), i.max(j));
        self.theta_pairs.get(&key).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.theta_pairs.is_empty()
            && self.local.iter().all(|p| p.is_zero())
            && self.outer.is_empty()
    }

    pub fn add(&self, other: &ConfigDeg2Element) -> ConfigDeg2Element {
        self.add_scaled(other, &Rational::one())
    }

    pub fn add_scaled(&self, other: &ConfigDeg2Element, c: &Rational) -> ConfigDeg2Element {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (k, v) in &other.theta_pairs {
            add_to(&mut out.theta_pairs, *k, &(v * c));
        }
        for (k, v) in &other.outer {
            add_to(&mut out.outer, k.clone(), &(v * c));
        }
        for (p, q) in out.local.iter_mut().zip(&other.local) {
            *p = p.add_scaled(q, c);
        }
        out
    }
}

fn add_to<K: Ord>(map: &mut BTreeMap<K, Rational>, key: K, c: &Rational) {
    let e = map.entry(key).or_default();
    *e += c;
    if e.is_zero() {
        map.retain(|_, v| !v.is_zero());
    }
}

impl fmt::Display for ConfigDeg2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<String> = self
            .theta_pairs
            .iter()
            .map(|((i, j), c)| format!("{c}*Theta_{i}{j}"))
            .collect();
        for (i, p) in self.local.iter().enumerate() {
            if !p.is_zero() {
                terms.push(format!("local_{}({:?})", i + 1, p.coords()));
            }
        }
        terms.extend(self.outer.iter().map(|(s, c)| format!("{c}*{s}")));
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// The degree-2 bracket structure for `n` points.
pub struct ConfigAlgebra<'a> {
    surface: &'a SurfaceLie,
    n: usize,
}

impl<'a> ConfigAlgebra<'a> {
    pub fn new(surface: &'a SurfaceLie, n: usize) -> Self {
        ConfigAlgebra { surface, n }
    }

    pub fn points(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> ConfigDeg2Element {
        ConfigDeg2Element {
            n: self.n,
            theta_pairs: BTreeMap::new(),
            local: (0..self.n).map(|_| self.surface.zero(2)).collect(),
            outer: BTreeMap::new(),
        }
    }

    fn check(&self, i: usize) -> Result<(), ConfigError> {
        if (1..=self.n).contains(&i) {
            Ok(())
        } else {
            Err(ConfigError::PointOutOfRange { index: i, n: self.n })
        }
    }

    /// `Theta_i` in normal form.
    pub fn theta_point(&self, i: usize) -> Result<ConfigDeg2Element, ConfigError> {
        self.check(i)?;
        let g = self.surface.genus() as i64;
        let mut out = self.zero();
        for j in (1..=self.n).filter(|&j| j != i) {
            add_to(&mut out.theta_pairs, (i.min(j), i.max(j)), &Rational::new(-1, g));
        }
        Ok(out)
    }

    /// `[u^(i), v^(j)]` for vectors `u`, `v` of `H` in letter coordinates.
    pub fn bracket(
        &self,
        i: usize,
        u: &SparseVector,
        j: usize,
        v: &SparseVector,
    ) -> Result<ConfigDeg2Element, ConfigError> {
        self.check(i)?;
        self.check(j)?;
        let g = self.surface.genus() as i64;
        let mut form = Rational::zero();
        for (x, c) in u.iter() {
            for (y, d) in v.iter() {
                form += &(c * d * Rational::from_int(pairing(x as u8, y as u8)));
            }
        }
        let scalar = form * Rational::new(1, g);
        if i != j {
            let mut out = self.zero();
            add_to(&mut out.theta_pairs, (i.min(j), i.max(j)), &scalar);
            return Ok(out);
        }
        // u ^ v = (u ^ v - (theta(u,v)/g) theta) + (theta(u,v)/g) theta
        let f = self.surface.free();
        let lu = crate::free_lie::LieElement::from_coords(1, u.clone());
        let lv = crate::free_lie::LieElement::from_coords(1, v.clone());
        let mut out = self.theta_point(i)?.scale_all(&scalar);
        out.local[i - 1] = self.surface.reduce(&f.bracket(&lu, &lv));
        Ok(out)
    }

    /// `[x^(i), y^(j)]` for letters `x`, `y`.
    pub fn bracket_letters(
        &self,
        i: usize,
        x: u8,
        j: usize,
        y: u8,
    ) -> Result<ConfigDeg2Element, ConfigError> {
        let n = self.surface.free().rank();
        self.bracket(i, &SparseVector::unit(n, x as usize), j, &SparseVector::unit(n, y as usize))
    }
}

impl ConfigDeg2Element {
    fn scale_all(mut self, c: &Rational) -> ConfigDeg2Element {
        for v in self.theta_pairs.values_mut() {
            *v = &*v * c;
        }
        for v in self.outer.values_mut() {
            *v = &*v * c;
        }
        self.theta_pairs.retain(|_, v| !v.is_zero());
        self.outer.retain(|_, v| !v.is_zero());
        for p in &mut self.local {
            *p = p.scale(c);
        }
        self
    }
}

/// Outcome of applying `u^(1) -> u^(1) + u^(2)` to `Theta_1`.
#[derive(Clone, Debug)]
pub struct NoMapReport {
    pub g: usize,
    pub image: ConfigDeg2Element,
    pub coefficient: Rational,
    pub expected: Rational,
    pub identity_image: ConfigDeg2Element,
    pub passed: bool,
}

/// Applies the diagonal map on generators to `Theta_1 = sum_k [a_k, b_k]` and
/// compares with `(2g-2)/g Theta_12`. The identity map is checked as a
/// control: it yields `-(1/g) Theta_12`.
pub fn verify_no_map(surface: &SurfaceLie) -> Result<NoMapReport, ConfigError> {
    let g = surface.genus();
    let alg = ConfigAlgebra::new(surface, 2);
    let mut image = alg.zero();
    let mut identity_image = alg.zero();
    for k in 0..g {
        let (a, b) = ((2 * k) as u8, (2 * k + 1) as u8);
        for i in 1..=2 {
            for j in 1..=2 {
                image = image.add(&alg.bracket_letters(i, a, j, b)?);
            }
        }
        identity_image = identity_image.add(&alg.bracket_letters(1, a, 1, b)?);
    }
    let expected = Rational::new(2 * g as i64 - 2, g as i64);
    let coefficient = image.theta_coefficient(1, 2);
    let only_pair = image.theta_pairs.len() == 1
        && image.local.iter().all(|p| p.is_zero())
        && image.outer.is_empty();
    let control = identity_image.theta_coefficient(1, 2) == Rational::new(-1, g as i64)
        && identity_image.theta_pairs.len() == 1
        && identity_image.local.iter().all(|p| p.is_zero());
    let passed = only_pair && coefficient == expected && !coefficient.is_zero() && control;
    Ok(NoMapReport { g, image, coefficient, expected, identity_image, passed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_brackets() {
        let s = SurfaceLie::new(3);
        let alg = ConfigAlgebra::new(&s, 2);
        assert!(alg.bracket_letters(1, 0, 2, 3).unwrap().is_zero());
        let ab = alg.bracket_letters(1, 0, 2, 1).unwrap();
        assert_eq!(ab.theta_coefficient(1, 2), Rational::new(1, 3));
        assert!(matches!(
            alg.bracket_letters(3, 0, 1, 1),
            Err(ConfigError::PointOutOfRange { .. })
        ));
    }

    #[test]
    fn theta_point_relation() {
        let s = SurfaceLie::new(3);
        let alg = ConfigAlgebra::new(&s, 2);
        let mut sum = alg.zero();
        for k in 0..3u8 {
            sum = sum.add(&alg.bracket_letters(1, 2 * k, 1, 2 * k + 1).unwrap());
        }
        assert_eq!(sum, alg.theta_point(1).unwrap());
        assert_eq!(sum.theta_coefficient(1, 2), Rational::new(-1, 3));
    }

    #[test]
    fn no_map_coefficients() {
        for (g, num, den) in [(3, 4, 3), (4, 3, 2)] {
            let s = SurfaceLie::new(g);
            let r = verify_no_map(&s).unwrap();
            assert!(r.passed);
            assert_eq!(r.coefficient, Rational::new(num, den));
        }
    }
}
