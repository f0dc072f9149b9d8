//! Sparse Laurent polynomials over the integers or the rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::Poly;
use super::scalar::{Coeff, Int, Rat};

/// Exact Laurent polynomial; no zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C> {
    coeffs: BTreeMap<i64, C>,
}

/// Elements of `ℤ[t, t⁻¹]`.
pub type Lambda = LaurentPoly<Int>;
/// Elements of `ℚ[t, t⁻¹]`.
pub type Gamma = LaurentPoly<Rat>;

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn t() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: C, e: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        LaurentPoly { coeffs }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Coefficients `v[i]` of `t^(low + i)`.
    pub fn from_slice(low: i64, v: &[C]) -> Self {
        Self::from_terms(v.iter().cloned().enumerate().map(|(i, c)| (low + i as i64, c)))
    }

    pub fn from_i64s(low: i64, v: &[i64]) -> Self {
        Self::from_terms(v.iter().enumerate().map(|(i, &c)| (low + i as i64, C::from_i64(c))))
    }

    pub fn add_term(&mut self, e: i64, c: C) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.remove(&e) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.coeffs.insert(e, sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> C {
        self.coeffs.get(&e).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.keys().all(|&e| e == 0)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// `max_exp - min_exp`, zero for the zero polynomial.
    pub fn span(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(a), Some(b)) => b - a,
            _ => 0,
        }
    }

    pub fn lead(&self) -> C {
        self.coeffs.values().next_back().cloned().unwrap_or_else(C::zero)
    }

    pub fn trail(&self) -> C {
        self.coeffs.values().next().cloned().unwrap_or_else(C::zero)
    }

    /// `p(t⁻¹)`
    pub fn conjugate(&self) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    /// `t^k p(t)`
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, a)| (*e, a.clone() * c.clone())).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Formal derivative, `d/dt t^e = e t^(e-1)`.
    pub fn derivative(&self) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(e, c)| (e - 1, c.clone() * C::from_i64(*e))))
    }

    /// Evaluates at a nonzero rational (or zero when no negative powers occur).
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (e, c) in &self.coeffs {
            let p = if *e >= 0 { x.pow(*e as i32) } else { x.recip().pow((-e) as i32) };
            acc += c.to_rat() * p;
        }
        acc
    }

    pub fn eval_one(&self) -> C {
        self.coeffs.values().fold(C::zero(), |a, c| a + c.clone())
    }

    /// Splits into `t^low * q(t)` with `q(0) != 0`.
    pub fn to_poly(&self) -> (i64, Poly<C>) {
        let low = self.min_exp().unwrap_or(0);
        let hi = self.max_exp().unwrap_or(-1);
        let len = (hi - low + 1).max(0) as usize;
        let mut v = vec![C::zero(); len];
        for (e, c) in &self.coeffs {
            v[(e - low) as usize] = c.clone();
        }
        (low, Poly::new(v))
    }

    pub fn from_poly(low: i64, p: &Poly<C>) -> Self {
        Self::from_slice(low, p.coeffs())
    }

    pub fn to_rational(&self) -> Gamma {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, c)| (*e, c.to_rat())).collect() }
    }

    /// Folds exponents modulo `k`, giving coefficients of `1, t, ..., t^(k-1)`
    /// in `ℚ[t]/(t^k - 1)`.
    pub fn fold_mod(&self, k: i64) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); k as usize];
        for (e, c) in &self.coeffs {
            let i = e.mod_floor(&k) as usize;
            out[i] += c.to_rat();
        }
        out
    }
}

impl Lambda {
    pub fn from_rational(p: &Gamma) -> Option<Lambda> {
        let mut coeffs = BTreeMap::new();
        for (e, c) in &p.coeffs {
            if !c.is_integer() {
                return None;
            }
            coeffs.insert(*e, c.to_integer());
        }
        Some(LaurentPoly { coeffs })
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> Int {
        self.coeffs.values().fold(Int::zero(), |g, c| g.gcd(c))
    }
}

impl Gamma {
    /// Least common multiple of the coefficient denominators.
    pub fn denominator(&self) -> Int {
        self.coeffs.values().fold(Int::one(), |l, c| l.lcm(c.denom()))
    }

    pub fn to_integer(&self) -> Option<Lambda> {
        Lambda::from_rational(self)
    }
}

impl<'a, C: Coeff> Add for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a, C: Coeff> Sub for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<'a, C: Coeff> Mul for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero();
        for (a, x) in &self.coeffs {
            for (b, y) in &rhs.coeffs {
                out.add_term(a + b, x.clone() * y.clone());
            }
        }
        out
    }
}

impl<'a, C: Coeff> Neg for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

impl<C: Coeff> Add for LaurentPoly<C> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<C: Coeff> Sub for LaurentPoly<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<C: Coeff> Mul for LaurentPoly<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<C: Coeff> Neg for LaurentPoly<C> {
    type Output = Self;
    fn neg(self) -> Self {
        -&self
    }
}

impl<C: Coeff> Zero for LaurentPoly<C> {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Coeff> One for LaurentPoly<C> {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

fn fmt_monomial(e: i64) -> String {
    match e {
        0 => String::new(),
        1 => "t".to_string(),
        _ => format!("t^{e}"),
    }
}

/// Highest exponent first, e.g. `t^2 - t + 1`, `2t^-1`, `(1/2)t`.
impl<C: Coeff> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mono = fmt_monomial(*e);
            let coef = a.to_string();
            if mono.is_empty() {
                write!(f, "{coef}")?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else if coef.contains('/') {
                write!(f, "({coef}){mono}")?;
            } else {
                write!(f, "{coef}{mono}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L[{self}]")
    }
}
