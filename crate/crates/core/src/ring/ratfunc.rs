//! Reduced quotients of rational Laurent polynomials.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::laurent::{Gamma, LaurentPoly, Lambda};
use super::poly::RatPoly;
use super::scalar::{CoeffRing, Field, Rat};

/// `num / den` with `gcd(num, den) = 1` and `den` monic with lowest exponent 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Gamma,
    den: Gamma,
}

impl RationalFunction {
    /// Panics when `den` is zero.
    pub fn new(num: Gamma, den: Gamma) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let (a, n) = num.to_poly();
        let (b, d) = den.to_poly();
        let g = n.gcd(&d);
        let n = n.div_exact(&g).expect("gcd divides");
        let d = d.div_exact(&g).expect("gcd divides");
        let l = Rat::one() / d.lead();
        RationalFunction {
            num: LaurentPoly::from_poly(a - b, &n.scale(&l)),
            den: LaurentPoly::from_poly(0, &d.scale(&l)),
        }
    }

    pub fn from_parts(num: Gamma, den: Gamma) -> Option<Self> {
        (!den.is_zero()).then(|| Self::new(num, den))
    }

    pub fn from_laurent(p: &Gamma) -> Self {
        Self::new(p.clone(), Gamma::one())
    }

    pub fn from_lambda(p: &Lambda) -> Self {
        Self::from_laurent(&p.to_rational())
    }

    pub fn from_poly_quotient(num: &RatPoly, den: &RatPoly) -> Self {
        Self::new(LaurentPoly::from_poly(0, num), LaurentPoly::from_poly(0, den))
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_laurent(&Gamma::constant(c))
    }

    pub fn zero() -> Self {
        RationalFunction { num: Gamma::zero(), den: Gamma::one() }
    }

    pub fn one() -> Self {
        RationalFunction { num: Gamma::one(), den: Gamma::one() }
    }

    pub fn t() -> Self {
        Self::from_laurent(&Gamma::t())
    }

    pub fn num(&self) -> &Gamma {
        &self.num
    }

    pub fn den(&self) -> &Gamma {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.num.conjugate(), self.den.conjugate())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.num.scale(c), self.den.clone())
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero rational function");
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(n, &self.den * &self.den)
    }

    /// `None` when the point is a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        if x.is_zero() && self.num.min_exp().is_some_and(|e| e < 0) {
            return None;
        }
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    /// The Laurent polynomial equal to `self`, if there is one in the ring.
    pub fn laurent_membership(&self, ring: CoeffRing) -> Option<Gamma> {
        if !self.den.is_constant() {
            return None;
        }
        match ring {
            CoeffRing::Rat => Some(self.num.clone()),
            CoeffRing::Int => Lambda::from_rational(&self.num).map(|p| p.to_rational()),
        }
    }

    pub fn as_lambda(&self) -> Option<Lambda> {
        self.laurent_membership(CoeffRing::Int).and_then(|p| Lambda::from_rational(&p))
    }

    pub fn is_in_lambda(&self) -> bool {
        self.as_lambda().is_some()
    }
}

impl<'a> Add for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: Self) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl<'a> Sub for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: Self) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: Self) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div for &'a RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: Self) -> RationalFunction {
        self * &rhs.inv()
    }
}

impl<'a> Neg for &'a RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Add for RationalFunction {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for RationalFunction {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for RationalFunction {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Div for RationalFunction {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        &self / &rhs
    }
}

impl Neg for RationalFunction {
    type Output = Self;
    fn neg(self) -> Self {
        -&self
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction::one()
    }
}

impl Field for RationalFunction {}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::scalar::rat;

    fn g(low: i64, v: &[i64]) -> Gamma {
        Gamma::from_i64s(low, v)
    }

    #[test]
    fn canonical_form() {
        // (t^2 - 1)/(2t - 2) = (t + 1)/2
        let f = RationalFunction::new(g(0, &[-1, 0, 1]), g(0, &[-2, 2]));
        assert_eq!(f.num(), &Gamma::from_slice(0, &[rat(1, 2), rat(1, 2)]));
        assert!(f.den().is_one());
        // t / t^3 = t^-2
        let h = RationalFunction::new(g(1, &[1]), g(3, &[1]));
        assert_eq!(h.laurent_membership(CoeffRing::Int), Some(g(-2, &[1])));
    }

    #[test]
    fn membership() {
        let f = RationalFunction::new(g(0, &[-1, 0, 1]), g(0, &[-1, 1]));
        assert_eq!(f.laurent_membership(CoeffRing::Int), Some(g(0, &[1, 1])));
        let h = RationalFunction::new(g(0, &[1]), g(0, &[-2, 1]));
        assert_eq!(h.laurent_membership(CoeffRing::Rat), None);
        let two_t = RationalFunction::new(g(1, &[2]), g(0, &[2]));
        assert_eq!(two_t.laurent_membership(CoeffRing::Int), Some(g(1, &[1])));
        let half = RationalFunction::constant(rat(1, 2));
        assert_eq!(half.laurent_membership(CoeffRing::Int), None);
    }

    #[test]
    fn field_ops() {
        let a = RationalFunction::new(g(0, &[1]), g(0, &[-2, 1]));
        let b = RationalFunction::new(g(0, &[1, 1]), g(0, &[1, 0, 1]));
        assert_eq!(&(&a * &b) / &b, a);
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!(a.conjugate().conjugate(), a);
        assert_eq!(a.eval(&rat(1, 1)), Some(rat(-1, 1)));
    }
}
