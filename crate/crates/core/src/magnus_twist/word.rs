//! Freely reduced words in the generators `gamma_1 .. gamma_{2g}`.

use std::fmt;

/// A freely reduced word; each syllable is a 1-based generator index and an
/// exponent `+1` or `-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FreeGroupWord {
    letters: Vec<(usize, i8)>,
}

impl FreeGroupWord {
    pub fn identity() -> Self {
        FreeGroupWord::default()
    }

    pub fn generator(i: usize) -> Self {
        assert!(i >= 1, "generators are numbered from 1");
        FreeGroupWord { letters: vec![(i, 1)] }
    }

    /// Builds a word from syllables, reducing it.
    pub fn from_syllables<I: IntoIterator<Item = (usize, i8)>>(syllables: I) -> Self {
        let mut w = FreeGroupWord::identity();
        for (i, e) in syllables {
            assert!(i >= 1 && (e == 1 || e == -1), "bad syllable ({i}, {e})");
            w.push(i, e);
        }
        w
    }

    fn push(&mut self, i: usize, e: i8) {
        if self.letters.last() == Some(&(i, -e)) {
            self.letters.pop();
        } else {
            self.letters.push((i, e));
        }
    }

    pub fn syllables(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &FreeGroupWord) -> FreeGroupWord {
        let mut out = self.clone();
        for &(i, e) in &other.letters {
            out.push(i, e);
        }
        out
    }

    pub fn inverse(&self) -> FreeGroupWord {
        FreeGroupWord { letters: self.letters.iter().rev().map(|&(i, e)| (i, -e)).collect() }
    }

    /// `[x, y] = x y x^-1 y^-1`.
    pub fn commutator(x: &FreeGroupWord, y: &FreeGroupWord) -> FreeGroupWord {
        x.mul(y).mul(&x.inverse()).mul(&y.inverse())
    }

    /// `c x c^-1`.
    pub fn conjugate(&self, c: &FreeGroupWord) -> FreeGroupWord {
        c.mul(self).mul(&c.inverse())
    }

    /// Exponent sum of each generator `1..=rank`.
    pub fn abelianization(&self, rank: usize) -> Vec<i64> {
        let mut v = vec![0; rank];
        for &(i, e) in &self.letters {
            v[i - 1] += e as i64;
        }
        v
    }

    pub fn max_generator(&self) -> usize {
        self.letters.iter().map(|&(i, _)| i).max().unwrap_or(0)
    }
}

impl fmt::Display for FreeGroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(i, e)| if e == 1 { format!("g{i}") } else { format!("g{i}^-1") })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// An endomorphism of the free group given by the images of its generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistAutomorphism {
    pub g: usize,
    pub j: usize,
    pub images: Vec<FreeGroupWord>,
}

impl TwistAutomorphism {
    pub fn image(&self, i: usize) -> &FreeGroupWord {
        &self.images[i - 1]
    }

    pub fn apply(&self, w: &FreeGroupWord) -> FreeGroupWord {
        let mut out = FreeGroupWord::identity();
        for &(i, e) in w.syllables() {
            let img = &self.images[i - 1];
            out = if e == 1 { out.mul(img) } else { out.mul(&img.inverse()) };
        }
        out
    }

    /// `self . other`, applying `other` first.
    pub fn compose(&self, other: &TwistAutomorphism) -> Vec<FreeGroupWord> {
        other.images.iter().map(|w| self.apply(w)).collect()
    }

    /// Integer matrix of the induced map on the abelianization, by columns.
    pub fn abelianization(&self) -> Vec<Vec<i64>> {
        let n = self.images.len();
        self.images.iter().map(|w| w.abelianization(n)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_reduction() {
        let g1 = FreeGroupWord::generator(1);
        assert!(g1.mul(&g1.inverse()).is_identity());
        let w = FreeGroupWord::from_syllables([(1, 1), (2, 1), (2, -1), (3, 1)]);
        assert_eq!(w.syllables(), &[(1, 1), (3, 1)]);
        let c = FreeGroupWord::commutator(&g1, &FreeGroupWord::generator(2));
        assert_eq!(c.len(), 4);
        assert_eq!(c.abelianization(2), vec![0, 0]);
        assert_eq!(c.inverse().to_string(), "g2 g1 g2^-1 g1^-1");
    }
}
