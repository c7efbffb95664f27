//! Exact sparse linear algebra over the rationals.
//!
//! Pivots are always the smallest key of a row, so echelon forms and kernel
//! bases are reproducible run to run.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::{Monomial, State};
use crate::{rat, Rational};

/// Sparse vector with ordered keys.
pub type SparseVec<K> = BTreeMap<K, Rational>;

fn axpy<K: Ord + Clone>(target: &mut SparseVec<K>, scale: &Rational, row: &SparseVec<K>) {
    for (k, v) in row {
        let delta = scale * v;
        match target.get_mut(k) {
            Some(x) => {
                *x += delta;
                if x.is_zero() {
                    target.remove(k);
                }
            }
            None => {
                target.insert(k.clone(), delta);
            }
        }
    }
}

/// Incremental row echelon form. Each stored row is normalized so that its
/// pivot (smallest key) has coefficient one.
#[derive(Clone, Debug, Default)]
pub struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Echelon { rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    /// Remainder of `v` modulo the row space.
    pub fn reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        let mut floor: Option<K> = None;
        loop {
            let next = match &floor {
                None => v.iter().find(|(k, _)| self.rows.contains_key(*k)),
                Some(f) => v
                    .range((std::ops::Bound::Excluded(f.clone()), std::ops::Bound::Unbounded))
                    .find(|(k, _)| self.rows.contains_key(*k)),
            };
            let Some((k, c)) = next.map(|(k, c)| (k.clone(), c.clone())) else {
                return v;
            };
            axpy(&mut v, &-c, &self.rows[&k]);
            floor = Some(k);
        }
    }

    /// Adds `v` to the row space. Returns `true` when it was independent.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let mut r = self.reduce(v);
        let Some((lead, c)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = c.recip();
        for x in r.values_mut() {
            *x *= &inv;
        }
        self.rows.insert(lead, r);
        true
    }

    pub fn contains(&self, v: SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Reduced row echelon form: every pivot column is cleared from all other rows.
    pub fn into_reduced(mut self) -> BTreeMap<K, SparseVec<K>> {
        let pivots: Vec<K> = self.rows.keys().cloned().collect();
        for p in pivots.iter().rev() {
            let prow = self.rows[p].clone();
            for q in pivots.iter().take_while(|q| *q < p) {
                let c = match self.rows[q].get(p) {
                    Some(c) => c.clone(),
                    None => continue,
                };
                let row = self.rows.get_mut(q).expect("pivot row");
                axpy(row, &-c, &prow);
            }
        }
        self.rows
    }
}

/// Basis of `{x : sum_j x_j cols[j] = 0}`, one vector per free column in
/// ascending order.
pub fn kernel_of_columns(cols: &[State]) -> Vec<SparseVec<usize>> {
    let n = cols.len();
    let mut rows: BTreeMap<&Monomial, SparseVec<usize>> = BTreeMap::new();
    for (j, col) in cols.iter().enumerate() {
        for (m, c) in col.terms() {
            rows.entry(m).or_default().insert(j, c.clone());
        }
    }
    kernel_of_rows(rows.into_values(), n)
}

/// [`kernel_of_columns`] for columns with arbitrary ordered row keys.
pub fn kernel_of_sparse<K: Ord + Clone>(cols: &[SparseVec<K>]) -> Vec<SparseVec<usize>> {
    let n = cols.len();
    let mut rows: BTreeMap<&K, SparseVec<usize>> = BTreeMap::new();
    for (j, col) in cols.iter().enumerate() {
        for (k, c) in col {
            rows.entry(k).or_default().insert(j, c.clone());
        }
    }
    kernel_of_rows(rows.into_values(), n)
}

fn kernel_of_rows(rows: impl Iterator<Item = SparseVec<usize>>, n: usize) -> Vec<SparseVec<usize>> {
    let mut ech = Echelon::new();
    for row in rows {
        if ech.rank() == n {
            break;
        }
        ech.insert(row);
    }
    kernel_from_echelon(ech, n)
}

pub fn kernel_from_echelon(ech: Echelon<usize>, n: usize) -> Vec<SparseVec<usize>> {
    let rref = ech.into_reduced();
    let mut out = Vec::new();
    for f in (0..n).filter(|f| !rref.contains_key(f)) {
        let mut v = SparseVec::new();
        v.insert(f, Rational::one());
        for (p, row) in &rref {
            if let Some(c) = row.get(&f) {
                v.insert(*p, -c);
            }
        }
        out.push(v);
    }
    out
}

/// Echelon basis (in the monomial coordinates) of the span of `states`.
pub fn span_echelon(states: &[State]) -> Echelon<Monomial> {
    let mut ech = Echelon::new();
    for s in states {
        ech.insert(s.clone().into_terms());
    }
    ech
}

pub fn rank_of_states(states: &[State]) -> usize {
    span_echelon(states).rank()
}

/// Coordinates `x` with `sum x_i spanning[i] = target`, if any. Free
/// coordinates are set to zero.
pub fn solve_in_span(spanning: &[State], target: &State) -> Option<Vec<Rational>> {
    let mut cols: Vec<State> = spanning.to_vec();
    cols.push(-target);
    let n = spanning.len();
    let ker = kernel_of_columns(&cols);
    // the only kernel vector with a nonzero last entry is the one for free column n
    let v = ker.into_iter().find(|v| v.contains_key(&n))?;
    let scale = v[&n].recip();
    Some((0..n).map(|i| v.get(&i).map(|c| c * &scale).unwrap_or_else(Rational::zero)).collect())
}

/// Dense square-or-rectangular rational matrix, row major.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    pub fn scalar(n: usize, c: Rational) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn require_square(&self, n: usize) -> Result<()> {
        if self.rows != n || self.cols != n {
            return Err(Error::Shape {
                rows: self.rows,
                cols: self.cols,
                expected: n,
            });
        }
        Ok(())
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows);
        let mut out = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    out[(i, j)] += a * &o[(k, j)];
                }
            }
        }
        out
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&o.data) {
            *x -= y;
        }
        out
    }

    pub fn commutator(&self, o: &Matrix) -> Matrix {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Shape {
                rows: self.rows,
                cols: self.cols,
                expected: self.rows,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero()).ok_or(Error::SingularMatrix)?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let p = a[(col, col)].recip();
            for j in 0..n {
                a[(col, j)] *= &p;
                inv[(col, j)] *= &p;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..n {
                    let t = &f * &a[(col, j)];
                    a[(r, j)] -= t;
                    let t = &f * &inv[(col, j)];
                    inv[(r, j)] -= t;
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(pairs: &[(usize, i64)]) -> SparseVec<usize> {
        pairs.iter().map(|&(k, v)| (k, rat(v))).collect()
    }

    #[test]
    fn echelon_rank() {
        let mut e = Echelon::new();
        assert!(e.insert(sv(&[(0, 1), (1, 2)])));
        assert!(e.insert(sv(&[(0, 2), (1, 1)])));
        assert!(!e.insert(sv(&[(0, 3), (1, 3)])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(sv(&[(1, 5)])));
    }

    #[test]
    fn kernel_of_dependent_columns() {
        let a: State = State::from("B[1,-1]".parse::<Monomial>().unwrap());
        let b: State = State::from("b[1,-1]".parse::<Monomial>().unwrap());
        let cols = vec![a.clone(), b.clone(), &a + &b.scaled(&rat(2))];
        let ker = kernel_of_columns(&cols);
        assert_eq!(ker, vec![sv(&[(0, -1), (1, -2), (2, 1)])]);
        assert_eq!(kernel_of_columns(&[]), Vec::<SparseVec<usize>>::new());
        assert_eq!(kernel_of_columns(&[State::zero()]).len(), 1);
    }

    #[test]
    fn solve() {
        let a: State = "B[1,-1]".parse::<Monomial>().unwrap().into();
        let b: State = "b[1,-1]".parse::<Monomial>().unwrap().into();
        let t = &a.scaled(&rat(3)) - &b;
        assert_eq!(solve_in_span(&[a.clone(), b.clone()], &t), Some(vec![rat(3), rat(-1)]));
        assert_eq!(solve_in_span(&[a], &b), None);
    }

    #[test]
    fn inverse() {
        let m = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert_eq!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::SingularMatrix));
    }
}
