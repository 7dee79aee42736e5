use std::collections::BTreeMap;
use std::fmt;

use super::rational::Rational;
use super::LinalgError;

/// A vector over a finite indexed basis, stored as sorted nonzero entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparseVector {
    dim: usize,
    entries: Vec<(usize, Rational)>,
}

impl SparseVector {
    pub fn zero(dim: usize) -> Self {
        SparseVector { dim, entries: Vec::new() }
    }

    pub fn unit(dim: usize, index: usize) -> Self {
        assert!(index < dim, "index {index} out of range for dimension {dim}");
        SparseVector { dim, entries: vec![(index, Rational::one())] }
    }

    /// Builds a vector from arbitrary `(index, value)` pairs; repeated indices
    /// are summed and zeros dropped.
    pub fn from_entries<I>(dim: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, Rational)>,
    {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, x) in entries {
            assert!(i < dim, "index {i} out of range for dimension {dim}");
            if x.is_zero() {
                continue;
            }
            *acc.entry(i).or_default() += x;
        }
        Self::from_btree(dim, acc)
    }

    pub(crate) fn from_btree(dim: usize, acc: BTreeMap<usize, Rational>) -> Self {
        SparseVector {
            dim,
            entries: acc.into_iter().filter(|(_, x)| !x.is_zero()).collect(),
        }
    }

    /// Entries must already be strictly increasing in index and nonzero.
    pub(crate) fn from_sorted_unchecked(dim: usize, entries: Vec<(usize, Rational)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(i, x)| *i < dim && !x.is_zero()));
        SparseVector { dim, entries }
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        SparseVector {
            dim: values.len(),
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: usize) -> Rational {
        match self.entries.binary_search_by_key(&index, |(i, _)| *i) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = (usize, &Rational)> + '_ {
        self.entries.iter().map(|(i, x)| (*i, x))
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Rational)> {
        self.entries
    }

    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.first().map(|(i, x)| (*i, x))
    }

    pub fn to_dense(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, x) in &self.entries {
            out[*i] = x.clone();
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return SparseVector::zero(self.dim);
        }
        SparseVector {
            dim: self.dim,
            entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect(),
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &SparseVector, c: &Rational) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * c));
                        b.next();
                    } else {
                        let s = x + &(y * c);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVector { dim: self.dim, entries: out }
    }

    pub fn add(&self, other: &SparseVector) -> Self {
        self.add_scaled(other, &Rational::one())
    }

    pub fn sub(&self, other: &SparseVector) -> Self {
        self.add_scaled(other, &-Rational::one())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn dot(&self, other: &SparseVector) -> Rational {
        let mut acc = Rational::zero();
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() && b < other.entries.len() {
            let (i, x) = &self.entries[a];
            let (j, y) = &other.entries[b];
            if i < j {
                a += 1;
            } else if j < i {
                b += 1;
            } else {
                acc += x * y;
                a += 1;
                b += 1;
            }
        }
        acc
    }

    /// Reindexes into a space of dimension `dim`, mapping index `i` to `f(i)`.
    pub fn remap<F: Fn(usize) -> usize>(&self, dim: usize, f: F) -> Self {
        SparseVector::from_entries(dim, self.entries.iter().map(|(i, x)| (f(*i), x.clone())))
    }
}

impl fmt::Debug for SparseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseVector(dim={}, {{", self.dim)?;
        for (k, (i, x)) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}: {x}")?;
        }
        write!(f, "}})")
    }
}

/// A sparse matrix stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    cols: usize,
    rows: Vec<SparseVector>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix { cols, rows: vec![SparseVector::zero(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { cols: n, rows: (0..n).map(|i| SparseVector::unit(n, i)).collect() }
    }

    pub fn from_rows(cols: usize, rows: Vec<SparseVector>) -> Self {
        assert!(rows.iter().all(|r| r.dim() == cols), "row dimension mismatch");
        SparseMatrix { cols, rows }
    }

    /// Builds the matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[SparseVector]) -> Self {
        let mut acc: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); rows];
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.dim(), rows, "column dimension mismatch");
            for (i, x) in c.iter() {
                acc[i].push((j, x.clone()));
            }
        }
        SparseMatrix {
            cols: columns.len(),
            rows: acc
                .into_iter()
                .map(|r| SparseVector::from_sorted_unchecked(columns.len(), r))
                .collect(),
        }
    }

    pub fn from_dense(values: &[Vec<Rational>]) -> Self {
        let cols = values.first().map_or(0, |r| r.len());
        SparseMatrix::from_rows(cols, values.iter().map(|r| SparseVector::from_dense(r)).collect())
    }

    pub fn from_i64(values: &[&[i64]]) -> Self {
        let dense: Vec<Vec<Rational>> = values
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from_int(x)).collect())
            .collect();
        SparseMatrix::from_dense(&dense)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVector {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[SparseVector] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.rows[i].get(j)
    }

    pub fn mul_vec(&self, v: &SparseVector) -> Result<SparseVector, LinalgError> {
        if v.dim() != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: v.dim() });
        }
        Ok(SparseVector::from_entries(
            self.rows.len(),
            self.rows.iter().enumerate().map(|(i, r)| (i, r.dot(v))),
        ))
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        for r in &self.rows {
            e.insert(r.clone());
        }
        e.rank()
    }
}

/// Incremental row echelon form over a fixed column space.
///
/// Each stored row has leading coefficient 1 at its pivot column, and pivots
/// are pairwise distinct. Rows are only reduced against previously inserted
/// pivots; `rref` performs the back substitution.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    rows: Vec<SparseVector>,
    pivot_row: BTreeMap<usize, usize>,
    // Row `k` as a combination of the inserted vectors, when tracking.
    combos: Option<Vec<SparseVector>>,
    inserted: usize,
    independent: Vec<usize>,
}

/// The outcome of reducing a vector against an echelon basis.
pub struct Reduction {
    pub residual: SparseVector,
    /// Multipliers of the echelon rows subtracted along the way, keyed by row.
    pub multipliers: Vec<(usize, Rational)>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon {
            dim,
            rows: Vec::new(),
            pivot_row: BTreeMap::new(),
            combos: None,
            inserted: 0,
            independent: Vec::new(),
        }
    }

    /// Like `new`, but remembers every row as a combination of the inputs.
    pub fn with_tracking(dim: usize) -> Self {
        Echelon { combos: Some(Vec::new()), ..Echelon::new(dim) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.pivot_row.keys().copied().collect()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row.contains_key(&col)
    }

    /// Positions (in insertion order) of the inputs that increased the rank.
    pub fn independent_inputs(&self) -> &[usize] {
        &self.independent
    }

    /// Rows ordered by pivot column.
    pub fn rows_by_pivot(&self) -> Vec<&SparseVector> {
        self.pivot_row.values().map(|&k| &self.rows[k]).collect()
    }

    pub fn reduce(&self, v: &SparseVector) -> Reduction {
        assert_eq!(v.dim(), self.dim, "dimension mismatch");
        let mut work: BTreeMap<usize, Rational> =
            v.entries().iter().map(|(i, x)| (*i, x.clone())).collect();
        let mut residual = Vec::new();
        let mut multipliers = Vec::new();
        while let Some((col, c)) = work.pop_first() {
            match self.pivot_row.get(&col) {
                Some(&k) => {
                    for (j, y) in self.rows[k].entries().iter().skip(1) {
                        let e = work.entry(*j).or_default();
                        *e -= &(&c * y);
                        if e.is_zero() {
                            work.remove(j);
                        }
                    }
                    multipliers.push((k, c));
                }
                None => residual.push((col, c)),
            }
        }
        Reduction { residual: SparseVector::from_sorted_unchecked(self.dim, residual), multipliers }
    }

    /// Reduces `v` modulo the row space; the result is supported on non-pivot
    /// columns and depends only on the row space, not on insertion order.
    pub fn normal_form(&self, v: &SparseVector) -> SparseVector {
        self.reduce(v).residual
    }

    pub fn contains(&self, v: &SparseVector) -> bool {
        self.reduce(v).residual.is_zero()
    }

    /// Inserts a vector; returns `true` when it was independent of the
    /// previously inserted ones.
    pub fn insert(&mut self, v: SparseVector) -> bool {
        let input = self.inserted;
        self.inserted += 1;
        let red = self.reduce(&v);
        if red.residual.is_zero() {
            return false;
        }
        let (lead, lc) = red.residual.leading().map(|(i, x)| (i, x.clone())).unwrap();
        let inv = lc.recip();
        let row = red.residual.scale(&inv);
        if let Some(combos) = &mut self.combos {
            let mut combo = SparseVector::unit(input + 1, input);
            for (k, c) in &red.multipliers {
                let prev = pad(&combos[*k], input + 1);
                combo = combo.add_scaled(&prev, &-c.clone());
            }
            combos.push(combo.scale(&inv));
        }
        self.pivot_row.insert(lead, self.rows.len());
        self.rows.push(row);
        self.independent.push(input);
        true
    }

    /// Expresses `v` as a combination of the inserted vectors, if possible.
    /// Requires tracking.
    pub fn solve(&self, v: &SparseVector) -> Option<SparseVector> {
        let combos = self.combos.as_ref().expect("solve requires a tracking echelon");
        let red = self.reduce(v);
        if !red.residual.is_zero() {
            return None;
        }
        let mut out = SparseVector::zero(self.inserted);
        for (k, c) in &red.multipliers {
            out = out.add_scaled(&pad(&combos[*k], self.inserted), c);
        }
        Some(out)
    }

    /// Fully reduced rows ordered by pivot column.
    pub fn rref_rows(&self) -> Vec<SparseVector> {
        let order: Vec<usize> = self.pivot_row.values().copied().collect();
        let mut done: Vec<SparseVector> = vec![SparseVector::zero(self.dim); order.len()];
        let pivot_pos: BTreeMap<usize, usize> =
            self.pivot_row.keys().enumerate().map(|(pos, &col)| (col, pos)).collect();
        for pos in (0..order.len()).rev() {
            let row = &self.rows[order[pos]];
            let (lead, _) = row.leading().unwrap();
            let mut work: BTreeMap<usize, Rational> =
                row.entries().iter().skip(1).map(|(i, x)| (*i, x.clone())).collect();
            let mut out = vec![(lead, Rational::one())];
            while let Some((col, c)) = work.pop_first() {
                match pivot_pos.get(&col) {
                    Some(&q) => {
                        // rows after `pos` are already fully reduced
                        for (j, y) in done[q].entries().iter().skip(1) {
                            let e = work.entry(*j).or_default();
                            *e -= &(&c * y);
                            if e.is_zero() {
                                work.remove(j);
                            }
                        }
                    }
                    None => out.push((col, c)),
                }
            }
            done[pos] = SparseVector::from_sorted_unchecked(self.dim, out);
        }
        done
    }
}

fn pad(v: &SparseVector, dim: usize) -> SparseVector {
    SparseVector::from_sorted_unchecked(dim, v.entries().to_vec())
}

/// Reduced row echelon form, with pivots chosen in ascending column order.
/// The result has the same shape as the input; zero rows come last.
pub fn echelon(m: &SparseMatrix) -> (SparseMatrix, Vec<usize>) {
    let mut e = Echelon::new(m.ncols());
    for r in m.rows() {
        e.insert(r.clone());
    }
    let pivots = e.pivots();
    let mut rows = e.rref_rows();
    rows.resize(m.nrows(), SparseVector::zero(m.ncols()));
    (SparseMatrix::from_rows(m.ncols(), rows), pivots)
}

/// Basis of the right kernel: one vector per free column (ascending), with
/// coefficient 1 at its free column.
pub fn kernel_basis(m: &SparseMatrix) -> Vec<SparseVector> {
    let mut e = Echelon::new(m.ncols());
    for r in m.rows() {
        e.insert(r.clone());
    }
    kernel_from_echelon(&e)
}

pub(crate) fn kernel_from_echelon(e: &Echelon) -> Vec<SparseVector> {
    let dim = e.dim();
    let rows = e.rref_rows();
    let pivots = e.pivots();
    // column -> list of (pivot, coefficient) over the rref rows
    let mut by_col: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
    for (row, &p) in rows.iter().zip(&pivots) {
        for (j, x) in row.entries().iter().skip(1) {
            by_col.entry(*j).or_default().push((p, x.clone()));
        }
    }
    (0..dim)
        .filter(|c| !e.is_pivot(*c))
        .map(|f| {
            let mut entries = vec![(f, Rational::one())];
            if let Some(list) = by_col.get(&f) {
                entries.extend(list.iter().map(|(p, x)| (*p, -x)));
            }
            SparseVector::from_entries(dim, entries)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    InSpan(Vec<Rational>),
    NotInSpan,
}

/// Coordinates of `v` with respect to `span`, when `v` lies in it. Dependent
/// spanning vectors receive coefficient 0.
pub fn solve_membership(v: &SparseVector, span: &[SparseVector]) -> Result<Membership, LinalgError> {
    let dim = v.dim();
    if let Some(bad) = span.iter().find(|s| s.dim() != dim) {
        return Err(LinalgError::DimensionMismatch { expected: dim, found: bad.dim() });
    }
    let mut e = Echelon::with_tracking(dim);
    for s in span {
        e.insert(s.clone());
    }
    Ok(match e.solve(v) {
        Some(c) => {
            let mut dense = c.to_dense();
            dense.resize(span.len(), Rational::zero());
            Membership::InSpan(dense)
        }
        None => Membership::NotInSpan,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn identity_echelon() {
        let (e, p) = echelon(&SparseMatrix::identity(2));
        assert_eq!(e, SparseMatrix::identity(2));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn rank_one_echelon() {
        let (e, p) = echelon(&SparseMatrix::from_i64(&[&[1, 2], &[2, 4]]));
        assert_eq!(e, SparseMatrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_back_substitutes() {
        let m = SparseMatrix::from_i64(&[&[1, 1, 1], &[0, 1, 2], &[0, 0, 3]]);
        let (e, p) = echelon(&m);
        assert_eq!(e, SparseMatrix::identity(3));
        assert_eq!(p, vec![0, 1, 2]);
    }

    #[test]
    fn kernels() {
        assert!(kernel_basis(&SparseMatrix::identity(4)).is_empty());
        let k = kernel_basis(&SparseMatrix::zero(3, 3));
        assert_eq!(k, (0..3).map(|i| SparseVector::unit(3, i)).collect::<Vec<_>>());
        let m = SparseMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).unwrap().is_zero());
        }
        assert_eq!(k[0].get(1), r(1));
        assert_eq!(k[0].get(0), r(-2));
    }

    #[test]
    fn membership() {
        let e1 = SparseVector::unit(3, 0);
        let e2 = SparseVector::unit(3, 1);
        let span = vec![e1.add(&e2), e2.clone()];
        assert_eq!(
            solve_membership(&span[0], &span).unwrap(),
            Membership::InSpan(vec![r(1), r(0)])
        );
        assert_eq!(
            solve_membership(&SparseVector::zero(3), &span).unwrap(),
            Membership::InSpan(vec![r(0), r(0)])
        );
        assert_eq!(
            solve_membership(&SparseVector::unit(3, 2), &[e1.clone(), e2.clone()]).unwrap(),
            Membership::NotInSpan
        );
        assert_eq!(
            solve_membership(&e1, &span).unwrap(),
            Membership::InSpan(vec![r(1), r(-1)])
        );
        assert!(solve_membership(&e1, &[SparseVector::unit(2, 0)]).is_err());
    }

    #[test]
    fn tracking_with_dependent_inputs() {
        let a = SparseVector::from_dense(&[r(1), r(2), r(0)]);
        let b = a.scale(&r(3));
        let c = SparseVector::from_dense(&[r(0), r(1), r(1)]);
        let mut e = Echelon::with_tracking(3);
        assert!(e.insert(a.clone()));
        assert!(!e.insert(b));
        assert!(e.insert(c.clone()));
        let target = a.scale(&r(2)).add_scaled(&c, &r(-5));
        let coords = e.solve(&target).unwrap();
        assert_eq!(coords.to_dense(), vec![r(2), r(0), r(-5)]);
        assert_eq!(e.independent_inputs(), &[0, 2]);
    }
}
