use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use super::{Character, Decomposition, SpRepError, Summand, Weight};
use crate::linalg::Rational;

fn rho(g: usize) -> Vec<i64> {
    (1..=g as i64).rev().collect()
}

/// Positive roots of `C_g`: `e_i - e_j`, `e_i + e_j` (i < j) and `2 e_i`.
fn positive_roots(g: usize) -> Vec<Vec<i32>> {
    let mut roots = Vec::new();
    for i in 0..g {
        for j in i + 1..g {
            let mut r = vec![0; g];
            r[i] = 1;
            r[j] = -1;
            roots.push(r.clone());
            r[j] = 1;
            roots.push(r);
        }
        let mut r = vec![0; g];
        r[i] = 2;
        roots.push(r);
    }
    roots
}

/// Weyl's dimension formula for the irreducible `Sp(2g)`-module with highest
/// weight the partition `lambda`.
pub fn weyl_dim(g: usize, lambda: &[u32]) -> Result<u128, SpRepError> {
    let l = Weight::from_partition(g, lambda)
        .ok_or(SpRepError::TooManyParts { parts: lambda.len(), g })?;
    if !l.is_dominant() {
        return Err(SpRepError::NotAPartition(lambda.to_vec()));
    }
    let r = rho(g);
    let shifted: Vec<i64> = l.0.iter().zip(&r).map(|(&a, &b)| a as i64 + b).collect();
    let mut dim = Rational::one();
    for alpha in positive_roots(g) {
        let num: i64 = alpha.iter().zip(&shifted).map(|(&a, &b)| a as i64 * b).sum();
        let den: i64 = alpha.iter().zip(&r).map(|(&a, &b)| a as i64 * b).sum();
        dim *= &Rational::new(num, den);
    }
    assert!(dim.is_integer(), "Weyl dimension must be integral");
    Ok(dim.to_i64().expect("dimension fits in i64") as u128)
}

/// Dominant `mu <= lambda` in the dominance order of `C_g`: all partial sums
/// of `lambda - mu` are nonnegative and the total is even.
fn dominant_weights_below(lambda: &Weight) -> Vec<Weight> {
    let g = lambda.genus();
    let top = lambda.0.first().copied().unwrap_or(0);
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(g);
    fn rec(lambda: &[i32], max: i32, sum_diff: i32, cur: &mut Vec<i32>, out: &mut Vec<Weight>) {
        let k = cur.len();
        if k == lambda.len() {
            if sum_diff % 2 == 0 {
                out.push(Weight(cur.clone()));
            }
            return;
        }
        for x in (0..=max).rev() {
            let s = sum_diff + lambda[k] - x;
            if s < 0 {
                continue;
            }
            cur.push(x);
            rec(lambda, x, s, cur, out);
            cur.pop();
        }
    }
    rec(&lambda.0, top, 0, &mut current, &mut out);
    out
}

type DominantMults = Arc<BTreeMap<Weight, i64>>;

fn cache() -> &'static Mutex<HashMap<Weight, DominantMults>> {
    static CACHE: OnceLock<Mutex<HashMap<Weight, DominantMults>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Multiplicities of the dominant weights of `V_lambda` by Freudenthal's
/// recursion.
pub fn dominant_multiplicities(lambda: &Weight) -> DominantMults {
    assert!(lambda.is_dominant(), "highest weight must be dominant");
    if let Some(m) = cache().lock().unwrap().get(lambda) {
        return m.clone();
    }
    let computed = Arc::new(freudenthal(lambda));
    cache().lock().unwrap().insert(lambda.clone(), computed.clone());
    computed
}

fn freudenthal(lambda: &Weight) -> BTreeMap<Weight, i64> {
    let g = lambda.genus();
    let r = Weight(rho(g).iter().map(|&x| x as i32).collect());
    let roots: Vec<Weight> = positive_roots(g).into_iter().map(Weight).collect();
    let mut dominant = dominant_weights_below(lambda);
    dominant.sort_by_key(|mu| std::cmp::Reverse(mu.dot(&r)));
    let lr = lambda.add(&r);
    let top = lr.dot(&lr);
    let mut mult: BTreeMap<Weight, i64> = BTreeMap::new();
    for mu in dominant {
        if &mu == lambda {
            mult.insert(mu, 1);
            continue;
        }
        let mut sum: i64 = 0;
        for alpha in &roots {
            let mut nu = mu.add(alpha);
            while let Some(&m) = mult.get(&nu.dominant()) {
                sum += m * nu.dot(alpha);
                nu = nu.add(alpha);
            }
        }
        let mr = mu.add(&r);
        let den = top - mr.dot(&mr);
        assert!(den > 0 && (2 * sum) % den == 0, "Freudenthal recursion is not integral");
        mult.insert(mu, 2 * sum / den);
    }
    mult.retain(|_, m| *m != 0);
    mult
}

/// The full character of `V_lambda`.
pub fn irreducible_character(g: usize, lambda: &[u32]) -> Result<Character, SpRepError> {
    let l = Weight::from_partition(g, lambda)
        .ok_or(SpRepError::TooManyParts { parts: lambda.len(), g })?;
    if !l.is_dominant() {
        return Err(SpRepError::NotAPartition(lambda.to_vec()));
    }
    let mut c = Character::new(g);
    for (mu, &m) in dominant_multiplicities(&l).iter() {
        for w in mu.orbit() {
            c.add_weight(w, m);
        }
    }
    Ok(c)
}

/// Peels irreducibles off a module character, largest dominant weight first
/// in lexicographic order.
pub fn decompose(chi: &Character) -> Result<Decomposition, SpRepError> {
    if !chi.is_weyl_symmetric() {
        return Err(SpRepError::NotACharacter("character is not Weyl-symmetric".into()));
    }
    let g = chi.genus();
    let mut rest = chi.dominant_part();
    let mut summands = Vec::new();
    while let Some((lambda, c)) = rest.iter().next_back().map(|(w, &c)| (w.clone(), c)) {
        if c < 0 {
            return Err(SpRepError::NotACharacter(format!(
                "negative multiplicity {c} at weight {lambda}"
            )));
        }
        for (mu, &m) in dominant_multiplicities(&lambda).iter() {
            let e = rest.entry(mu.clone()).or_insert(0);
            *e -= c * m;
            if *e == 0 {
                rest.remove(mu);
            }
        }
        summands.push(Summand { highest_weight: lambda, multiplicity: c as u64, twist: None });
    }
    Ok(Decomposition { g, summands })
}
