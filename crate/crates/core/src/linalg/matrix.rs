//! Dense matrices over an exact ring.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::ring::scalar::{Field, Int, Rat, Ring};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<Int>;
pub type RatMatrix = Matrix<Rat>;

impl<T: Ring> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Matrix { rows, cols, data }
    }

    /// Panics on ragged input. An empty list gives the 0×0 matrix.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn column(v: Vec<T>) -> Self {
        let n = v.len();
        Matrix { rows: n, cols: 1, data: v }
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

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<T> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<U: Ring>(&self, f: impl Fn(&T) -> Option<U>) -> Option<Matrix<U>> {
        let data: Option<Vec<U>> = self.data.iter().map(f).collect();
        Some(Matrix { rows: self.rows, cols: self.cols, data: data? })
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "matrix product shape");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * o.cols + j;
                    out.data[idx] = out.data[idx].clone() + a.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).fold(T::zero(), |acc, j| acc + self.get(i, j).clone() * v[j].clone()))
            .collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix sum shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "matrix difference shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|a| -a.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    pub fn block_diag(&self, o: &Self) -> Self {
        let (r, c) = (self.rows + o.rows, self.cols + o.cols);
        Self::from_fn(r, c, |i, j| {
            if i < self.rows && j < self.cols {
                self.get(i, j).clone()
            } else if i >= self.rows && j >= self.cols {
                o.get(i - self.rows, j - self.cols).clone()
            } else {
                T::zero()
            }
        })
    }

    pub fn hstack(&self, o: &Self) -> Self {
        assert_eq!(self.rows, o.rows);
        Self::from_fn(self.rows, self.cols + o.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                o.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.cols);
        Self::from_fn(self.rows + o.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j).clone()
            } else {
                o.get(i - self.rows, j).clone()
            }
        })
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// `P' A P`
    pub fn congruence(&self, p: &Self) -> Self {
        p.transpose().mul(self).mul(p)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_skew(&self) -> bool {
        self.is_square() && *self == self.transpose().neg()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += c * row[src]`
    pub fn add_row(&mut self, dst: usize, src: usize, c: &T) {
        for j in 0..self.cols {
            let v = self.get(dst, j).clone() + c.clone() * self.get(src, j).clone();
            self.set(dst, j, v);
        }
    }

    /// `col[dst] += c * col[src]`
    pub fn add_col(&mut self, dst: usize, src: usize, c: &T) {
        for i in 0..self.rows {
            let v = self.get(i, dst).clone() + c.clone() * self.get(i, src).clone();
            self.set(i, dst, v);
        }
    }

    pub fn scale_row(&mut self, r: usize, c: &T) {
        for j in 0..self.cols {
            let v = self.get(r, j).clone() * c.clone();
            self.set(r, j, v);
        }
    }

    pub fn scale_col(&mut self, col: usize, c: &T) {
        for i in 0..self.rows {
            let v = self.get(i, col).clone() * c.clone();
            self.set(i, col, v);
        }
    }
}

impl<T: Field> Matrix<T> {
    /// Row echelon form by Gaussian elimination; returns `(echelon, pivots, sign)`.
    fn echelon(&self) -> (Self, Vec<usize>, bool) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut neg = false;
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                a.swap_rows(p, r);
                neg = !neg;
            }
            let inv = T::one() / a.get(r, c).clone();
            for i in r + 1..a.rows {
                if a.get(i, c).is_zero() {
                    continue;
                }
                let f = -(a.get(i, c).clone() * inv.clone());
                a.add_row(i, r, &f);
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots, neg)
    }

    pub fn det(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let (e, pivots, neg) = self.echelon();
        if pivots.len() < self.rows {
            return T::zero();
        }
        let d = (0..self.rows).fold(T::one(), |acc, i| acc * e.get(i, i).clone());
        if neg {
            -d
        } else {
            d
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let (mut a, pivots, _) = self.echelon();
        for (r, &c) in pivots.iter().enumerate().rev() {
            let inv = T::one() / a.get(r, c).clone();
            a.scale_row(r, &inv);
            for i in 0..r {
                if a.get(i, c).is_zero() {
                    continue;
                }
                let f = -a.get(i, c).clone();
                a.add_row(i, r, &f);
            }
        }
        (a, pivots)
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Self::zeros(0, 0));
        }
        let aug = self.hstack(&Self::identity(n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Some(r.submatrix(&rows, &cols))
    }

    /// Basis of `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![T::zero(); self.cols];
                v[f] = T::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, f).clone();
                }
                v
            })
            .collect()
    }

    /// Some `x` with `A x = b`.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        let aug = self.hstack(&Self::column(b.to_vec()));
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![T::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols).clone();
        }
        Some(x)
    }
}

impl IntMatrix {
    pub fn to_rat(&self) -> RatMatrix {
        self.map(|a| Rat::from_integer(a.clone()))
    }

    pub fn det_int(&self) -> Int {
        self.to_rat().det().to_integer()
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Int::from(x)).collect()).collect())
    }
}

impl RatMatrix {
    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|a| a.is_integer())
    }

    pub fn to_int(&self) -> Option<IntMatrix> {
        self.try_map(|a| a.is_integer().then(|| a.to_integer()))
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        IntMatrix::from_i64(rows).to_rat()
    }

    /// Inertia `(positive, negative, zero)` of a symmetric matrix, by
    /// congruence diagonalisation.
    pub fn inertia(&self) -> (usize, usize, usize) {
        assert!(self.is_symmetric(), "inertia of a non-symmetric matrix");
        let mut a = self.clone();
        let n = a.rows;
        let (mut pos, mut neg) = (0, 0);
        let mut k = 0;
        while k < n {
            if a.get(k, k).is_zero() {
                if let Some(j) = (k + 1..n).find(|&j| !a.get(j, j).is_zero()) {
                    a.swap_rows(k, j);
                    a.swap_cols(k, j);
                } else if let Some(j) = (k + 1..n).find(|&j| !a.get(k, j).is_zero()) {
                    // a_kk = 0, a_jj = 0, a_kj != 0: e_k + e_j has square 2 a_kj
                    let one = Rat::one();
                    a.add_row(k, j, &one);
                    a.add_col(k, j, &one);
                } else {
                    k += 1;
                    continue;
                }
            }
            let d = a.get(k, k).clone();
            for i in k + 1..n {
                if a.get(i, k).is_zero() {
                    continue;
                }
                let f = -(a.get(i, k).clone() / d.clone());
                a.add_row(i, k, &f);
                a.add_col(i, k, &f);
            }
            if d.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            k += 1;
        }
        (pos, neg, n - pos - neg)
    }

    pub fn signature(&self) -> i64 {
        let (p, n, _) = self.inertia();
        p as i64 - n as i64
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[T]> = (0..self.rows).map(|i| &self.data[i * self.cols..(i + 1) * self.cols]).collect();
        write!(f, "{}x{} {:?}", self.rows, self.cols, rows)
    }
}
