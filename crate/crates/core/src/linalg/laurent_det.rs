//! Determinants and inverses of matrices with Laurent polynomial entries.

use num_traits::{One, Zero};

use super::matrix::{Matrix, RatMatrix};
use crate::ring::laurent::Gamma;
use crate::ring::poly::RatPoly;
use crate::ring::ratfunc::RationalFunction;
use crate::ring::scalar::Rat;

/// Exact determinant by evaluation at integer points and interpolation.
pub fn det_laurent(a: &Matrix<Gamma>) -> Gamma {
    assert!(a.is_square(), "determinant of a non-square matrix");
    let n = a.rows();
    if n == 0 {
        return Gamma::one();
    }
    // row i is multiplied by t^-low_i to make every entry a polynomial
    let mut shift = 0i64;
    let mut degree = 0i64;
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let row = a.row(i);
        let low = row.iter().filter_map(|p| p.min_exp()).min().unwrap_or(0);
        let high = row.iter().filter_map(|p| p.max_exp()).max().unwrap_or(0);
        shift += low;
        degree += (high - low).max(0);
        rows.push(row.iter().map(|p| p.shift(-low)).collect::<Vec<_>>());
    }
    let shifted = Matrix::from_rows(rows);
    let points: Vec<Rat> = (0..=degree).map(|k| Rat::from_integer((k + 2).into())).collect();
    let values: Vec<Rat> = points.iter().map(|x| shifted.map(|p| p.eval(x)).det()).collect();
    let poly = interpolate(&points, &values);
    Gamma::from_poly(shift, &poly)
}

/// Lagrange interpolation through `(x_i, y_i)`.
pub fn interpolate(xs: &[Rat], ys: &[Rat]) -> RatPoly {
    let mut out = RatPoly::zero();
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = RatPoly::one();
        let mut denom = Rat::one();
        for (j, xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = &basis * &RatPoly::new(vec![-xj.clone(), Rat::one()]);
            denom *= xi - xj;
        }
        out = &out + &basis.scale(&(yi / denom));
    }
    out
}

pub fn to_rational_functions(a: &Matrix<Gamma>) -> Matrix<RationalFunction> {
    a.map(RationalFunction::from_laurent)
}

/// `A0 + A1 t` as a Laurent matrix.
pub fn pencil(a0: &RatMatrix, a1: &RatMatrix) -> Matrix<Gamma> {
    Matrix::from_fn(a0.rows(), a0.cols(), |i, j| {
        Gamma::from_slice(0, &[a0.get(i, j).clone(), a1.get(i, j).clone()])
    })
}

pub fn constant_matrix(a: &RatMatrix) -> Matrix<Gamma> {
    a.map(|x| Gamma::constant(x.clone()))
}

pub fn conjugate_matrix(a: &Matrix<Gamma>) -> Matrix<Gamma> {
    a.map(|p| p.conjugate())
}

/// Inverse over `ℚ(t)` via adjugate and the interpolated determinant.
pub fn inverse_laurent(a: &Matrix<Gamma>) -> Option<Matrix<RationalFunction>> {
    let n = a.rows();
    let det = det_laurent(a);
    if det.is_zero() {
        return None;
    }
    if n == 0 {
        return Some(Matrix::zeros(0, 0));
    }
    let idx: Vec<usize> = (0..n).collect();
    let inv = Matrix::from_fn(n, n, |i, j| {
        // (A⁻¹)_ij = (-1)^(i+j) det(A with row j and column i removed) / det A
        let rows: Vec<usize> = idx.iter().copied().filter(|&r| r != j).collect();
        let cols: Vec<usize> = idx.iter().copied().filter(|&c| c != i).collect();
        let minor = det_laurent(&a.submatrix(&rows, &cols));
        let minor = if (i + j) % 2 == 1 { -&minor } else { minor };
        RationalFunction::new(minor, det.clone())
    });
    Some(inv)
}
