//! Dense univariate polynomials, coefficients stored in ascending order.
//!
//! This is the working representation for division, gcd and factoring;
//! [`LaurentPoly`](super::LaurentPoly) converts to and from it.

use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::{Coeff, Int, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

pub type IntPoly = Poly<Int>;
pub type RatPoly = Poly<Rat>;

impl<C: Coeff> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![C::one()] }
    }

    pub fn constant(c: C) -> Self {
        Poly::new(vec![c])
    }

    /// `c * t^e`
    pub fn monomial(c: C, e: usize) -> Self {
        let mut v = vec![C::zero(); e + 1];
        v[e] = c;
        Poly::new(v)
    }

    pub fn x() -> Self {
        Poly::monomial(C::one(), 1)
    }

    pub fn from_i64s(v: &[i64]) -> Self {
        Poly::new(v.iter().map(|&c| C::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> C {
        self.coeffs.last().cloned().unwrap_or_else(C::zero)
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn scale(&self, c: &C) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![C::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly::new(v)
    }

    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * C::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `t^deg * p(1/t)`
    pub fn reversed(&self) -> Self {
        let mut v = self.coeffs.clone();
        v.reverse();
        Poly::new(v)
    }

    /// Number of trailing zero coefficients (power of `t` dividing the poly).
    pub fn low_order(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn strip_low(&self) -> Self {
        Poly::new(self.coeffs[self.low_order()..].to_vec())
    }
}

impl<'a, C: Coeff> Add for &'a Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: Self) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a, C: Coeff> Sub for &'a Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: Self) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a, C: Coeff> Mul for &'a Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Self) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(v)
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<C: Coeff> Add for Poly<C> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<C: Coeff> Sub for Poly<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<C: Coeff> Mul for Poly<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<C: Coeff> Neg for Poly<C> {
    type Output = Self;
    fn neg(self) -> Self {
        -&self
    }
}

impl<C: Coeff> Zero for Poly<C> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Coeff> One for Poly<C> {
    fn one() -> Self {
        Poly::one()
    }
}

impl RatPoly {
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead();
        self.scale(&(Rat::one() / l))
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let inv = Rat::one() / d.lead();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![Rat::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] = &r[i + j] - &c * dc;
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Exact quotient when `d` divides `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, u)` with `s*self + u*other = g`, `g` monic.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut u0, mut u1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = &s0 - &(&q * &s1);
            let u2 = &u0 - &(&q * &u1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            u0 = u1;
            u1 = u2;
        }
        if r0.is_zero() {
            return (r0, s0, u0);
        }
        let inv = Rat::one() / r0.lead();
        (r0.scale(&inv), s0.scale(&inv), u0.scale(&inv))
    }

    /// Clears denominators: returns `(c, f)` with `self = c * f`, `f`
    /// primitive with positive leading coefficient.
    pub fn to_primitive_int(&self) -> (Rat, IntPoly) {
        if self.is_zero() {
            return (Rat::one(), Poly::zero());
        }
        let den = self.coeffs.iter().fold(Int::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<Int> = self.coeffs.iter().map(|c| (c * Rat::from_integer(den.clone())).to_integer()).collect();
        let f = Poly::new(ints);
        let (cont, prim) = f.content_primitive();
        (Rat::new(cont, den), prim)
    }
}

impl IntPoly {
    pub fn to_rat(&self) -> RatPoly {
        Poly::new(self.coeffs.iter().map(|c| Rat::from_integer(c.clone())).collect())
    }

    /// Content carrying the sign of the leading coefficient, and the
    /// primitive part with positive leading coefficient.
    pub fn content_primitive(&self) -> (Int, IntPoly) {
        if self.is_zero() {
            return (Int::one(), self.clone());
        }
        let mut g = Int::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if self.lead().is_negative() {
            g = -g;
        }
        (g.clone(), Poly::new(self.coeffs.iter().map(|c| c / &g).collect()))
    }

    pub fn primitive(&self) -> IntPoly {
        self.content_primitive().1
    }

    /// Exact division over the integers.
    pub fn div_exact_int(&self, d: &IntPoly) -> Option<IntPoly> {
        let q = self.to_rat().div_exact(&d.to_rat())?;
        let ints: Option<Vec<Int>> = q.coeffs().iter().map(|c| c.is_integer().then(|| c.to_integer())).collect();
        Some(Poly::new(ints?))
    }

    pub fn max_abs_coeff(&self) -> Int {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_else(Int::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::scalar::rat;

    fn rp(v: &[i64]) -> RatPoly {
        Poly::from_i64s(v)
    }

    #[test]
    fn division_and_gcd() {
        // (t^2 - 1) / (t - 1) = t + 1
        let (q, r) = rp(&[-1, 0, 1]).div_rem(&rp(&[-1, 1]));
        assert_eq!(q, rp(&[1, 1]));
        assert!(r.is_zero());
        let g = rp(&[-1, 0, 1]).gcd(&rp(&[1, 2, 1]));
        assert_eq!(g, rp(&[1, 1]));
    }

    #[test]
    fn xgcd_bezout() {
        let a = rp(&[1, -1, 1]);
        let b = rp(&[-2, 1]);
        let (g, s, u) = a.xgcd(&b);
        assert_eq!(g, RatPoly::one());
        assert_eq!(&(&s * &a) + &(&u * &b), RatPoly::one());
    }

    #[test]
    fn primitive_parts() {
        let p = Poly::new(vec![rat(1, 2), rat(-3, 4)]);
        let (c, f) = p.to_primitive_int();
        assert_eq!(f, IntPoly::from_i64s(&[-2, 3]));
        assert_eq!(c, rat(-1, 4));
    }
}
