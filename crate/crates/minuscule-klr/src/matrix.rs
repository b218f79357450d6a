//! Minimal sparse matrices over an exact scalar (integers or rationals).
//!
//! Entries are stored column-major; all generator matrices in this crate are
//! partial permutation matrices, so products stay sparse.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMat<T> {
    rows: usize,
    cols: usize,
    /// keyed `(col, row)` so a column is a contiguous range
    entries: BTreeMap<(usize, usize), T>,
}

impl<T> SparseMat<T>
where
    T: Clone + Zero + One + PartialEq + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Neg<Output = T>,
{
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMat {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn elementary(n: usize, row: usize, col: usize) -> Self {
        let mut m = Self::zero(n, n);
        m.set(row, col, T::one());
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn set(&mut self, row: usize, col: usize, value: T) {
        assert!(row < self.rows && col < self.cols, "index out of range");
        if value.is_zero() {
            self.entries.remove(&(col, row));
        } else {
            self.entries.insert((col, row), value);
        }
    }

    pub fn get(&self, row: usize, col: usize) -> T {
        self.entries
            .get(&(col, row))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Iterates `(row, col, value)` triplets in column-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.entries.iter().map(|(&(c, r), v)| (r, c, v))
    }

    pub fn column(&self, col: usize) -> impl Iterator<Item = (usize, &T)> {
        self.entries
            .range((col, 0)..(col, self.rows))
            .map(|(&(_, r), v)| (r, v))
    }

    pub fn column_is_zero(&self, col: usize) -> bool {
        self.column(col).next().is_none()
    }

    pub fn columns_equal(&self, other: &Self, col: usize) -> bool {
        self.column(col)
            .zip_longest_check(other.column(col))
    }

    pub fn scale(&self, factor: &T) -> Self {
        let mut out = Self::zero(self.rows, self.cols);
        for (r, c, v) in self.iter() {
            out.set(r, c, factor.clone() * v.clone());
        }
        out
    }

    pub fn add_mat(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (r, c, v) in other.iter() {
            let cur = out.get(r, c);
            out.set(r, c, cur + v.clone());
        }
        out
    }

    pub fn sub_mat(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (r, c, v) in other.iter() {
            let cur = out.get(r, c);
            out.set(r, c, cur - v.clone());
        }
        out
    }

    pub fn mul_mat(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zero(self.rows, other.cols);
        for (mid, c, v) in other.iter() {
            for (r, a) in self.column(mid) {
                let cur = out.get(r, c);
                out.set(r, c, cur + a.clone() * v.clone());
            }
        }
        out
    }

    /// `self * v` for a sparse column vector given as `(index, value)` pairs.
    pub fn apply(&self, v: &[(usize, T)]) -> Vec<(usize, T)> {
        let mut acc: BTreeMap<usize, T> = BTreeMap::new();
        for (idx, x) in v {
            for (r, a) in self.column(*idx) {
                let cur = acc.remove(&r).unwrap_or_else(T::zero);
                let nv = cur + a.clone() * x.clone();
                if !nv.is_zero() {
                    acc.insert(r, nv);
                }
            }
        }
        acc.into_iter().collect()
    }

    pub fn map<U, F>(&self, f: F) -> SparseMat<U>
    where
        U: Clone + Zero + One + PartialEq + Add<Output = U> + Sub<Output = U> + Mul<Output = U> + Neg<Output = U>,
        F: Fn(&T) -> U,
    {
        let mut out = SparseMat::zero(self.rows, self.cols);
        for (r, c, v) in self.iter() {
            out.set(r, c, f(v));
        }
        out
    }

    /// Sparse triplet text: header `rows cols nnz`, then `row col value` lines.
    pub fn to_triplet_text(&self) -> String
    where
        T: std::fmt::Display,
    {
        let mut out = format!("{} {} {}\n", self.rows, self.cols, self.nnz());
        for (r, c, v) in self.iter() {
            out.push_str(&format!("{r} {c} {v}\n"));
        }
        out
    }
}

trait ZipLongestCheck<'a, T: PartialEq + 'a>: Iterator<Item = (usize, &'a T)> + Sized {
    fn zip_longest_check(mut self, mut other: impl Iterator<Item = (usize, &'a T)>) -> bool {
        loop {
            match (self.next(), other.next()) {
                (None, None) => return true,
                (Some((r1, v1)), Some((r2, v2))) if r1 == r2 && v1 == v2 => continue,
                _ => return false,
            }
        }
    }
}

impl<'a, T: PartialEq + 'a, I: Iterator<Item = (usize, &'a T)>> ZipLongestCheck<'a, T> for I {}
