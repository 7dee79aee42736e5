//! Words over the symplectic alphabet `a1 < b1 < a2 < b2 < ... < ag < bg`.
//!
//! A word of length `m` is encoded as its base-`2g` numeral, first letter most
//! significant, so numeric order on codes of equal length is lexicographic
//! order on words.

use std::fmt;

use crate::sp_rep::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorKind {
    A,
    B,
}

/// A symplectic basis vector `a_i` or `b_i` of `H`, with `index` in `1..=g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorIndex {
    pub kind: GeneratorKind,
    pub index: usize,
}

impl GeneratorIndex {
    pub fn a(index: usize) -> Self {
        assert!(index >= 1, "generator indices start at 1");
        GeneratorIndex { kind: GeneratorKind::A, index }
    }

    pub fn b(index: usize) -> Self {
        assert!(index >= 1, "generator indices start at 1");
        GeneratorIndex { kind: GeneratorKind::B, index }
    }

    /// Position in the global order `a1 < b1 < a2 < ...`, starting at 0.
    pub fn letter(self) -> u8 {
        let offset = match self.kind {
            GeneratorKind::A => 0,
            GeneratorKind::B => 1,
        };
        (2 * (self.index - 1) + offset) as u8
    }

    pub fn from_letter(letter: u8) -> Self {
        let index = letter as usize / 2 + 1;
        if letter.is_multiple_of(2) {
            GeneratorIndex::a(index)
        } else {
            GeneratorIndex::b(index)
        }
    }

    /// The symplectic partner: `a_i <-> b_i`.
    pub fn dual(self) -> Self {
        match self.kind {
            GeneratorKind::A => GeneratorIndex::b(self.index),
            GeneratorKind::B => GeneratorIndex::a(self.index),
        }
    }
}

impl PartialOrd for GeneratorIndex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GeneratorIndex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.letter().cmp(&other.letter())
    }
}

impl fmt::Display for GeneratorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GeneratorKind::A => write!(f, "a{}", self.index),
            GeneratorKind::B => write!(f, "b{}", self.index),
        }
    }
}

/// The intersection form on letters: `theta(a_i, b_i) = 1 = -theta(b_i, a_i)`.
pub fn pairing(x: u8, y: u8) -> i64 {
    if x / 2 != y / 2 || x == y {
        0
    } else if x.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Torus weight of a letter: `a_i` has weight `+e_i`, `b_i` has `-e_i`.
pub fn letter_weight(g: usize, letter: u8) -> Weight {
    let mut w = vec![0i32; g];
    w[letter as usize / 2] = if letter.is_multiple_of(2) { 1 } else { -1 };
    Weight(w)
}

pub fn word_weight(g: usize, letters: &[u8]) -> Weight {
    let mut w = vec![0i32; g];
    for &l in letters {
        w[l as usize / 2] += if l % 2 == 0 { 1 } else { -1 };
    }
    Weight(w)
}

pub fn encode(base: usize, letters: &[u8]) -> usize {
    letters.iter().fold(0usize, |acc, &l| acc * base + l as usize)
}

pub fn decode(base: usize, mut code: usize, len: usize) -> Vec<u8> {
    let mut out = vec![0u8; len];
    for slot in out.iter_mut().rev() {
        *slot = (code % base) as u8;
        code /= base;
    }
    out
}

pub fn pow(base: usize, exp: usize) -> usize {
    (0..exp).fold(1usize, |acc, _| acc.checked_mul(base).expect("tensor degree too large"))
}

/// Strictly smaller than every proper rotation.
pub fn is_lyndon(w: &[u8]) -> bool {
    let n = w.len();
    if n == 0 {
        return false;
    }
    (1..n).all(|k| {
        let rot = w[k..].iter().chain(w[..k].iter());
        w.iter().lt(rot)
    })
}

/// All Lyndon words of exactly `len` letters over `0..alphabet`, in
/// lexicographic order (Duval's generation algorithm).
pub fn lyndon_words(alphabet: usize, len: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    if alphabet == 0 || len == 0 {
        return out;
    }
    let top = (alphabet - 1) as u8;
    let mut w: Vec<u8> = vec![0];
    loop {
        if w.len() == len {
            out.push(w.clone());
        }
        let m = w.len();
        while w.len() < len {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out
}

/// Splits a Lyndon word of length at least 2 as `uv` where `v` is its longest
/// proper Lyndon suffix; both factors are Lyndon.
pub fn standard_factorization(w: &[u8]) -> (&[u8], &[u8]) {
    assert!(w.len() >= 2, "standard factorization needs length >= 2");
    for k in 1..w.len() {
        if is_lyndon(&w[k..]) {
            return (&w[..k], &w[k..]);
        }
    }
    unreachable!("a single letter is always a Lyndon suffix")
}

pub fn format_word(letters: &[u8]) -> String {
    letters
        .iter()
        .map(|&l| GeneratorIndex::from_letter(l).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
