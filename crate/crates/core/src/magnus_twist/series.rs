//! Truncated noncommutative power series in `X_1 .. X_n`.

use std::collections::BTreeMap;

use super::word::FreeGroupWord;
use crate::free_lie::{pow, FreeLie, LieElement, TensorElement};
use crate::linalg::{Rational, SparseVector};

use super::MagnusError;

/// Homogeneous parts of degrees `0..=N`; words of length `k` are encoded as
/// base-`n` numerals, as in the tensor algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MagnusSeries {
    rank: usize,
    parts: Vec<SparseVector>,
}

impl MagnusSeries {
    pub fn zero(rank: usize, degree: usize) -> Self {
        MagnusSeries {
            rank,
            parts: (0..=degree).map(|k| SparseVector::zero(pow(rank, k))).collect(),
        }
    }

    pub fn one(rank: usize, degree: usize) -> Self {
        let mut s = MagnusSeries::zero(rank, degree);
        s.parts[0] = SparseVector::unit(1, 0);
        s
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> usize {
        self.parts.len() - 1
    }

    pub fn part(&self, k: usize) -> &SparseVector {
        &self.parts[k]
    }

    pub fn coefficient(&self, letters: &[u8]) -> Rational {
        let code = crate::free_lie::encode(self.rank, letters);
        self.parts[letters.len()].get(code)
    }

    /// `1 + X_i` for `gamma_i`, `sum_k (-X_i)^k` for its inverse.
    pub fn syllable(rank: usize, degree: usize, generator: usize, exponent: i8) -> Self {
        let l = generator - 1;
        let mut s = MagnusSeries::zero(rank, degree);
        for k in 0..=degree {
            if exponent == 1 && k > 1 {
                break;
            }
            let code: usize = (0..k).fold(0, |acc, _| acc * rank + l);
            let sign = if exponent == -1 && k % 2 == 1 { -1 } else { 1 };
            s.parts[k] = SparseVector::from_entries(pow(rank, k), [(code, Rational::from_int(sign))]);
        }
        s
    }

    pub fn add_scaled(&self, other: &MagnusSeries, c: &Rational) -> MagnusSeries {
        MagnusSeries {
            rank: self.rank,
            parts: self.parts.iter().zip(&other.parts).map(|(x, y)| x.add_scaled(y, c)).collect(),
        }
    }

    /// Product truncated at the common degree.
    pub fn mul(&self, other: &MagnusSeries) -> MagnusSeries {
        assert_eq!(self.rank, other.rank);
        let n = self.degree().min(other.degree());
        let mut parts = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
            for p in 0..=k {
                let q = k - p;
                let shift = pow(self.rank, q);
                for (u, x) in self.parts[p].iter() {
                    for (v, y) in other.parts[q].iter() {
                        *acc.entry(u * shift + v).or_default() += x * y;
                    }
                }
            }
            parts.push(SparseVector::from_entries(pow(self.rank, k), acc));
        }
        MagnusSeries { rank: self.rank, parts }
    }

    /// `log(1 + T) = sum_k (-1)^(k+1) T^k / k`, exact because `T` has no
    /// constant term.
    pub fn log(&self) -> Result<MagnusSeries, MagnusError> {
        if self.parts[0].get(0) != Rational::one() {
            return Err(MagnusError::NotGroupLike);
        }
        let n = self.degree();
        let t = self.add_scaled(&MagnusSeries::one(self.rank, n), &Rational::from_int(-1));
        let mut power = t.clone();
        let mut out = MagnusSeries::zero(self.rank, n);
        for k in 1..=n {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            out = out.add_scaled(&power, &Rational::new(sign, k as i64));
            power = power.mul(&t);
        }
        Ok(out)
    }
}

/// The Magnus expansion truncated at degree `degree`.
pub fn magnus(w: &FreeGroupWord, rank: usize, degree: usize) -> MagnusSeries {
    assert!(degree >= 1);
    assert!(w.max_generator() <= rank, "word uses generators beyond the rank");
    w.syllables().iter().fold(MagnusSeries::one(rank, degree), |acc, &(i, e)| {
        acc.mul(&MagnusSeries::syllable(rank, degree, i, e))
    })
}

/// The class of `w` in `L_k / L_{k+1}`, as a Lie element of degree `k` in
/// Lyndon coordinates.
pub fn lcs_class(free: &FreeLie, w: &FreeGroupWord, k: usize) -> Result<LieElement, MagnusError> {
    let s = magnus(w, free.rank(), k);
    if let Some(d) = (1..k).find(|&d| !s.part(d).is_zero()) {
        return Err(MagnusError::NotInLCS { class: k, degree: d });
    }
    let log = s.log()?;
    let t = TensorElement::from_coords(k, log.part(k).clone());
    Ok(free.dynkin_projection(&t)?)
}
