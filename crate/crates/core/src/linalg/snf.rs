//! Smith normal forms over ℤ (with transforms) and over ℚ[t] (diagonal only),
//! plus integer linear solving.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{IntMatrix, Matrix};
use crate::ring::poly::RatPoly;
use crate::ring::scalar::Int;

/// `U A V = D` with `U`, `V` unimodular; `u_inv` is `U⁻¹`.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
    pub d: IntMatrix,
    /// Nonzero diagonal entries, positive, each dividing the next.
    pub diag: Vec<Int>,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }
}

fn min_nonzero(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < a.get(bi, bj).abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

pub fn smith(a: &IntMatrix) -> Smith {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut u_inv = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = min_nonzero(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        u_inv.swap_cols(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let p = d.get(t, t).clone();
            let mut dirty = false;
            for i in t + 1..m {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = d.get(i, t).div_floor(&p);
                let nq = -q.clone();
                d.add_row(i, t, &nq);
                u.add_row(i, t, &nq);
                u_inv.add_col(t, i, &q);
                if !d.get(i, t).is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..n {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = -d.get(t, j).div_floor(&p);
                d.add_col(j, t, &q);
                v.add_col(j, t, &q);
                if !d.get(t, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // move the smallest remaining entry of row/col t to the pivot
                let mut bi = t;
                let mut bj = t;
                for i in t..m {
                    let x = d.get(i, t);
                    if !x.is_zero() && x.abs() < d.get(bi, bj).abs() {
                        bi = i;
                        bj = t;
                    }
                }
                for j in t..n {
                    let x = d.get(t, j);
                    if !x.is_zero() && x.abs() < d.get(bi, bj).abs() {
                        bi = t;
                        bj = j;
                    }
                }
                d.swap_rows(t, bi);
                u.swap_rows(t, bi);
                u_inv.swap_cols(t, bi);
                d.swap_cols(t, bj);
                v.swap_cols(t, bj);
                continue;
            }
            // divisibility of the rest by the pivot
            let p = d.get(t, t).clone();
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d.get(i, j).is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    let one = Int::one();
                    d.add_row(t, i, &one);
                    u.add_row(t, i, &one);
                    u_inv.add_col(i, t, &(-one));
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            let m1 = -Int::one();
            d.scale_row(t, &m1);
            u.scale_row(t, &m1);
            u_inv.scale_col(t, &m1);
        }
        t += 1;
    }
    let diag = (0..m.min(n)).map(|i| d.get(i, i).clone()).take_while(|x| !x.is_zero()).collect();
    Smith { u, u_inv, v, d, diag }
}

/// Some integer `x` with `A x = b`, if one exists.
pub fn solve_int(a: &IntMatrix, b: &[Int]) -> Option<Vec<Int>> {
    assert_eq!(a.rows(), b.len());
    let s = smith(a);
    let c = s.u.mul_vec(b);
    let mut y = vec![Int::zero(); a.cols()];
    for (i, ci) in c.iter().enumerate() {
        if i < s.diag.len() {
            let (q, r) = ci.div_rem(&s.diag[i]);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !ci.is_zero() {
            return None;
        }
    }
    Some(s.v.mul_vec(&y))
}

/// Invariant factors of the finitely generated abelian group `ℤ^rows / im A`:
/// the orders of the nontrivial cyclic factors (0 for a free factor).
pub fn cokernel_orders(a: &IntMatrix) -> Vec<Int> {
    let s = smith(a);
    let mut out: Vec<Int> = s.diag.iter().filter(|d| !d.is_one()).cloned().collect();
    out.extend(std::iter::repeat_n(Int::zero(), a.rows() - s.diag.len()));
    out
}

/// Diagonal of the Smith form over `ℚ[t]`, monic.
pub fn poly_smith_diagonal(a: &Matrix<RatPoly>) -> Vec<RatPoly> {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let deg = |p: &RatPoly| p.degree().unwrap_or(usize::MAX);
    let mut out = Vec::new();
    for t in 0..m.min(n) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    let x = d.get(i, j);
                    if !x.is_zero() && best.is_none_or(|(bi, bj)| deg(x) < deg(d.get(bi, bj))) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return out;
            };
            d.swap_rows(t, bi);
            d.swap_cols(t, bj);
            let p = d.get(t, t).clone();
            let mut dirty = false;
            for i in t + 1..m {
                let (q, r) = d.get(i, t).div_rem(&p);
                d.add_row(i, t, &-&q);
                dirty |= !r.is_zero();
            }
            for j in t + 1..n {
                let (q, r) = d.get(t, j).div_rem(&p);
                d.add_col(j, t, &-&q);
                dirty |= !r.is_zero();
            }
            if dirty {
                continue;
            }
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d.get(i, j).rem(&p).is_zero()));
            match bad {
                Some(i) => d.add_row(t, i, &RatPoly::one()),
                None => break,
            }
        }
        out.push(d.get(t, t).monic());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::scalar::int;

    #[test]
    fn smith_transforms() {
        let a = IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = smith(&a);
        assert_eq!(s.diag, vec![int(2), int(6), int(12)]);
        assert_eq!(s.u.mul(&a).mul(&s.v), s.d);
        assert_eq!(s.u.mul(&s.u_inv), IntMatrix::identity(3));
    }

    #[test]
    fn integer_solutions() {
        let a = IntMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        assert_eq!(solve_int(&a, &[int(4), int(9)]), Some(vec![int(2), int(3)]));
        assert_eq!(solve_int(&a, &[int(1), int(0)]), None);
        let c = IntMatrix::from_i64(&[&[3, 5]]);
        let x = solve_int(&c, &[int(1)]).unwrap();
        assert_eq!(c.mul_vec(&x), vec![int(1)]);
    }

    #[test]
    fn cokernels() {
        assert_eq!(cokernel_orders(&IntMatrix::from_i64(&[&[2, 1], &[1, 2]])), vec![int(3)]);
        assert_eq!(cokernel_orders(&IntMatrix::from_i64(&[&[0], &[0]])), vec![int(0), int(0)]);
    }

    #[test]
    fn poly_smith() {
        let p = |v: &[i64]| RatPoly::from_i64s(v);
        let a = Matrix::from_rows(vec![vec![p(&[-1, 1]), p(&[0])], vec![p(&[0]), p(&[1, 1])]]);
        assert_eq!(poly_smith_diagonal(&a), vec![p(&[1]), p(&[-1, 0, 1])]);
    }
}
