use std::collections::BTreeMap;
use std::fmt;

/// A torus weight in the epsilon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i32>);

impl Weight {
    pub fn zero(g: usize) -> Self {
        Weight(vec![0; g])
    }

    /// Pads a partition with zeros to length `g`.
    pub fn from_partition(g: usize, parts: &[u32]) -> Option<Self> {
        if parts.len() > g {
            return None;
        }
        let mut v: Vec<i32> = parts.iter().map(|&p| p as i32).collect();
        v.resize(g, 0);
        Some(Weight(v))
    }

    pub fn genus(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1]) && self.0.last().is_none_or(|&x| x >= 0)
    }

    /// The unique dominant weight in the Weyl orbit.
    pub fn dominant(&self) -> Weight {
        let mut v: Vec<i32> = self.0.iter().map(|x| x.abs()).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Weight(v)
    }

    /// Nonzero parts, for display as a partition.
    pub fn partition(&self) -> Vec<u32> {
        self.0.iter().filter(|&&x| x != 0).map(|&x| x as u32).collect()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn dot(&self, other: &Weight) -> i64 {
        self.0.iter().zip(&other.0).map(|(&a, &b)| a as i64 * b as i64).sum()
    }

    /// All distinct images under signed permutations.
    pub fn orbit(&self) -> Vec<Weight> {
        let d = self.dominant();
        let mut out = Vec::new();
        let mut perms = distinct_permutations(&d.0);
        for p in perms.drain(..) {
            let nonzero: Vec<usize> = (0..p.len()).filter(|&i| p[i] != 0).collect();
            for mask in 0u32..(1 << nonzero.len()) {
                let mut v = p.clone();
                for (bit, &i) in nonzero.iter().enumerate() {
                    if mask & (1 << bit) != 0 {
                        v[i] = -v[i];
                    }
                }
                out.push(Weight(v));
            }
        }
        out.sort();
        out
    }
}

fn distinct_permutations(v: &[i32]) -> Vec<Vec<i32>> {
    let mut sorted = v.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    // next_permutation over the multiset
    loop {
        let n = sorted.len();
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| sorted[i] < sorted[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| sorted[j] > sorted[i]).unwrap();
        sorted.swap(i, j);
        sorted[i + 1..].reverse();
        out.push(sorted.clone());
    }
    out
}

impl fmt::Display for Weight {
    /// Dominant weights print as partitions, e.g. `[2,1,1]`; others as the
    /// full coordinate vector.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = if self.is_dominant() {
            self.partition().iter().map(|p| p.to_string()).collect()
        } else {
            self.0.iter().map(|p| p.to_string()).collect()
        };
        write!(f, "[{}]", parts.join(","))
    }
}

/// A formal character: multiplicities of torus weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    g: usize,
    mult: BTreeMap<Weight, i64>,
}

impl Character {
    pub fn new(g: usize) -> Self {
        Character { g, mult: BTreeMap::new() }
    }

    pub fn from_weights<I: IntoIterator<Item = Weight>>(g: usize, weights: I) -> Self {
        let mut c = Character::new(g);
        for w in weights {
            c.add_weight(w, 1);
        }
        c
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn add_weight(&mut self, w: Weight, m: i64) {
        assert_eq!(w.genus(), self.g, "weight of the wrong rank");
        if m == 0 {
            return;
        }
        let e = self.mult.entry(w.clone()).or_insert(0);
        *e += m;
        if *e == 0 {
            self.mult.remove(&w);
        }
    }

    pub fn multiplicity(&self, w: &Weight) -> i64 {
        self.mult.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.mult.iter().map(|(w, &m)| (w, m))
    }

    pub fn is_zero(&self) -> bool {
        self.mult.is_empty()
    }

    /// Sum of all multiplicities, i.e. the dimension when this is a module
    /// character.
    pub fn mass(&self) -> i64 {
        self.mult.values().sum()
    }

    pub fn add(&self, other: &Character) -> Character {
        let mut c = self.clone();
        for (w, m) in other.iter() {
            c.add_weight(w.clone(), m);
        }
        c
    }

    pub fn sub(&self, other: &Character) -> Character {
        let mut c = self.clone();
        for (w, m) in other.iter() {
            c.add_weight(w.clone(), -m);
        }
        c
    }

    /// Invariance under the Weyl group of `C_g` (signed permutations).
    pub fn is_weyl_symmetric(&self) -> bool {
        self.mult.iter().all(|(w, &m)| w.orbit().iter().all(|v| self.multiplicity(v) == m))
    }

    pub fn dominant_part(&self) -> BTreeMap<Weight, i64> {
        self.mult.iter().filter(|(w, _)| w.is_dominant()).map(|(w, &m)| (w.clone(), m)).collect()
    }
}

/// One irreducible constituent `V_lambda` with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub highest_weight: Weight,
    pub multiplicity: u64,
    /// Optional Tate twist `m` for the label `V_lambda(-m)`.
    pub twist: Option<i32>,
}

/// A multiset of irreducibles, in peeling order (decreasing lexicographic
/// highest weight).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub g: usize,
    pub summands: Vec<Summand>,
}

impl Decomposition {
    pub fn multiplicity_of(&self, parts: &[u32]) -> u64 {
        let Some(w) = Weight::from_partition(self.g, parts) else { return 0 };
        self.summands.iter().filter(|s| s.highest_weight == w).map(|s| s.multiplicity).sum()
    }

    pub fn contains(&self, parts: &[u32]) -> bool {
        self.multiplicity_of(parts) > 0
    }

    /// Multiset of partitions, for comparisons independent of order.
    pub fn as_map(&self) -> BTreeMap<Vec<u32>, u64> {
        let mut m = BTreeMap::new();
        for s in &self.summands {
            *m.entry(s.highest_weight.partition()).or_insert(0) += s.multiplicity;
        }
        m
    }

    /// Total dimension, `sum mult * dim V_lambda`.
    pub fn dimension(&self) -> u128 {
        self.summands
            .iter()
            .map(|s| {
                s.multiplicity as u128
                    * super::weyl_dim(self.g, &s.highest_weight.partition()).unwrap()
            })
            .sum()
    }

    pub fn with_twist(mut self, twist: i32) -> Self {
        for s in &mut self.summands {
            s.twist = Some(twist);
        }
        self
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .summands
            .iter()
            .map(|s| {
                let mut t = String::new();
                if s.multiplicity > 1 {
                    t.push_str(&format!("{}*", s.multiplicity));
                }
                t.push_str(&s.highest_weight.to_string());
                if let Some(m) = s.twist {
                    t.push_str(&format!("(-{m})"));
                }
                t
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}
