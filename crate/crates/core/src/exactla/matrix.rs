use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::Serialize;

use super::scalar::Scalar;
use crate::combinatorics::Permutation;
use crate::error::{Error, Result};

/// A dense matrix over an exact scalar domain. Row and column indices are
/// 1-based throughout, so `get(a, b)` is the entry written `(a, b)` or `E_{ab}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> ExactMatrix<S> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |a, b| if a == b { S::one() } else { S::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for a in 1..=rows {
            for b in 1..=cols {
                data.push(f(a, b));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from rows listed top to bottom.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::SizeMismatch { expected: cols, found: bad.len() });
        }
        Ok(Self { rows: rows.len(), cols, data: rows.into_iter().flatten().collect() })
    }

    /// Builds a matrix whose `j`-th column is `columns[j - 1]`.
    pub fn from_columns(columns: &[Vec<S>]) -> Result<Self> {
        let rows = columns.first().map_or(0, Vec::len);
        if let Some(bad) = columns.iter().find(|c| c.len() != rows) {
            return Err(Error::SizeMismatch { expected: rows, found: bad.len() });
        }
        Ok(Self::from_fn(rows, columns.len(), |a, b| columns[b - 1][a - 1].clone()))
    }

    /// The permutation matrix with `w e_j = e_{w(j)}`.
    pub fn permutation(w: &Permutation) -> Self {
        let n = w.n();
        Self::from_fn(n, n, |a, b| if w.get(b) == a { S::one() } else { S::zero() })
    }

    /// `E_{ab}`.
    pub fn unit(n: usize, a: usize, b: usize) -> Self {
        Self::from_fn(n, n, |i, j| if (i, j) == (a, b) { S::one() } else { S::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn idx(&self, a: usize, b: usize) -> usize {
        assert!(a >= 1 && a <= self.rows && b >= 1 && b <= self.cols, "index ({a}, {b}) out of range");
        (a - 1) * self.cols + (b - 1)
    }

    pub fn get(&self, a: usize, b: usize) -> &S {
        &self.data[self.idx(a, b)]
    }

    pub fn set(&mut self, a: usize, b: usize, v: S) {
        let i = self.idx(a, b);
        self.data[i] = v;
    }

    pub fn add_to(&mut self, a: usize, b: usize, v: S) {
        let i = self.idx(a, b);
        let cur = std::mem::replace(&mut self.data[i], S::zero());
        self.data[i] = cur + v;
    }

    pub fn row(&self, a: usize) -> Vec<S> {
        (1..=self.cols).map(|b| self.get(a, b).clone()).collect()
    }

    pub fn column(&self, b: usize) -> Vec<S> {
        (1..=self.rows).map(|a| self.get(a, b).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<S>> {
        (1..=self.cols).map(|b| self.column(b)).collect()
    }

    pub fn set_column(&mut self, b: usize, v: &[S]) {
        assert_eq!(v.len(), self.rows);
        for (a, x) in v.iter().enumerate() {
            self.set(a + 1, b, x.clone());
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zero(self.rows, other.cols);
        for a in 1..=self.rows {
            for c in 1..=self.cols {
                let x = self.get(a, c);
                if x.is_zero() {
                    continue;
                }
                for b in 1..=other.cols {
                    let y = other.get(c, b);
                    if !y.is_zero() {
                        out.add_to(a, b, x.clone() * y.clone());
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.cols {
            return Err(Error::SizeMismatch { expected: self.cols, found: v.len() });
        }
        Ok((1..=self.rows)
            .map(|a| {
                let mut acc = S::zero();
                for (c, x) in v.iter().enumerate() {
                    let m = self.get(a, c + 1);
                    if !m.is_zero() && !x.is_zero() {
                        acc = acc + m.clone() * x.clone();
                    }
                }
                acc
            })
            .collect())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(S, S) -> S) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::SizeMismatch { expected: self.rows * self.cols, found: other.rows * other.cols });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a.clone(), b.clone())).collect();
        Ok(Self { rows: self.rows, cols: self.cols, data })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.clone() * c.clone()).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |a, b| self.get(b, a).clone())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> ExactMatrix<T> {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (1..=self.rows).all(|a| (1..=self.cols).all(|b| {
                let x = self.get(a, b);
                if a == b { x.is_one() } else { x.is_zero() }
            }))
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        self.is_square()
            && (1..=self.rows).all(|a| {
                self.get(a, a).is_one() && (1..a).all(|b| self.get(a, b).is_zero())
            })
    }

    /// Off-diagonal positions holding nonzero entries.
    pub fn support(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 1..=self.rows {
            for b in 1..=self.cols {
                if a != b && !self.get(a, b).is_zero() {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// The top-left `k × k` block.
    pub fn top_left(&self, k: usize) -> Self {
        Self::from_fn(k, k, |a, b| self.get(a, b).clone())
    }

    /// `g ↦ [[g, 0], [0, I]]` of size `n`.
    pub fn embed(&self, n: usize) -> Self {
        Self::from_fn(n, n, |a, b| {
            if a <= self.rows && b <= self.cols {
                self.get(a, b).clone()
            } else if a == b {
                S::one()
            } else {
                S::zero()
            }
        })
    }

    /// `p⁻¹ · self · p` for a permutation matrix `p`.
    pub fn conjugate_by(&self, p: &Permutation) -> Self {
        // (p⁻¹ M p)_{ab} = M_{p(a), p(b)}
        Self::from_fn(self.rows, self.cols, |a, b| self.get(p.get(a), p.get(b)).clone())
    }

    /// Gauss–Jordan inverse using unit pivots only.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::SizeMismatch { expected: self.rows, found: self.cols });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for c in 1..=n {
            let pivot_row = (c..=n).find(|&r| a.get(r, c).unit_inverse().is_some());
            let Some(r) = pivot_row else {
                return Err(if (c..=n).all(|r| a.get(r, c).is_zero()) {
                    Error::SingularMatrix
                } else {
                    Error::NonUnitPivot
                });
            };
            a.swap_rows(r, c);
            inv.swap_rows(r, c);
            let p = a.get(c, c).unit_inverse().expect("unit pivot");
            a.scale_row(c, &p);
            inv.scale_row(c, &p);
            for r in 1..=n {
                if r == c || a.get(r, c).is_zero() {
                    continue;
                }
                let f = a.get(r, c).clone();
                a.add_row_multiple(r, c, &f);
                inv.add_row_multiple(r, c, &f);
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, r: usize, s: usize) {
        if r == s {
            return;
        }
        for b in 1..=self.cols {
            let (i, j) = (self.idx(r, b), self.idx(s, b));
            self.data.swap(i, j);
        }
    }

    fn scale_row(&mut self, r: usize, f: &S) {
        for b in 1..=self.cols {
            let i = self.idx(r, b);
            self.data[i] = self.data[i].clone() * f.clone();
        }
    }

    /// Row `r` −= `f` · row `s`.
    fn add_row_multiple(&mut self, r: usize, s: usize, f: &S) {
        for b in 1..=self.cols {
            let y = self.get(s, b).clone();
            if y.is_zero() {
                continue;
            }
            let i = self.idx(r, b);
            self.data[i] = self.data[i].clone() - f.clone() * y;
        }
    }

    pub fn rank(&self) -> Result<usize> {
        let mut e = Echelon::new(self.rows);
        for c in self.columns() {
            e.insert(c)?;
        }
        Ok(e.rank())
    }

    /// Dense row-major text, one row per line, entries separated by spaces.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for a in 1..=self.rows {
            let row: Vec<String> = (1..=self.cols).map(|b| self.get(a, b).to_string()).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }
}

impl<S: Scalar> fmt::Display for ExactMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl<S: Scalar + Serialize> Serialize for ExactMatrix<S> {
    fn serialize<Z: serde::Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        let rows: Vec<Vec<&S>> = (1..=self.rows).map(|a| (1..=self.cols).map(|b| self.get(a, b)).collect()).collect();
        let mut st = s.serialize_struct("ExactMatrix", 3)?;
        st.serialize_field("rows", &self.rows)?;
        st.serialize_field("cols", &self.cols)?;
        st.serialize_field("entries", &rows)?;
        st.end()
    }
}

pub(crate) fn vec_is_zero<S: Scalar>(v: &[S]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Column echelon form keyed by leading row, where a vector's leading row is
/// its bottom-most nonzero entry. Stored vectors are normalized to have a 1
/// there. Pivots must be units, so over polynomials the reduction is exact for
/// every value of the variables.
#[derive(Clone, Debug)]
pub struct Echelon<S> {
    dim: usize,
    pivots: BTreeMap<usize, Vec<S>>,
}

fn leading_row<S: Scalar>(v: &[S]) -> Option<usize> {
    v.iter().rposition(|x| !x.is_zero()).map(|i| i + 1)
}

impl<S: Scalar> Echelon<S> {
    pub fn new(dim: usize) -> Self {
        Self { dim, pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Subtracts stored vectors while the leading row of `v` is a pivot row.
    pub fn reduce(&self, mut v: Vec<S>) -> Result<Vec<S>> {
        if v.len() != self.dim {
            return Err(Error::SizeMismatch { expected: self.dim, found: v.len() });
        }
        while let Some(a) = leading_row(&v) {
            let Some(p) = self.pivots.get(&a) else { break };
            let c = v[a - 1].clone();
            for (x, y) in v.iter_mut().zip(p).take(a) {
                if !y.is_zero() {
                    *x = x.clone() - c.clone() * y.clone();
                }
            }
        }
        Ok(v)
    }

    pub fn contains(&self, v: Vec<S>) -> Result<bool> {
        Ok(vec_is_zero(&self.reduce(v)?))
    }

    /// Adds `v` to the span; returns whether it was independent.
    pub fn insert(&mut self, v: Vec<S>) -> Result<bool> {
        let mut r = self.reduce(v)?;
        let Some(a) = leading_row(&r) else { return Ok(false) };
        let inv = r[a - 1].unit_inverse().ok_or(Error::NonUnitPivot)?;
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        self.pivots.insert(a, r);
        Ok(true)
    }
}
