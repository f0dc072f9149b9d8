//! Exact scalars and the small set of traits shared by polynomial and
//! matrix code.

use std::fmt;
use std::ops::{Div, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Anything that behaves like a commutative ring element for the purposes
/// of dense matrix arithmetic.
pub trait Ring: Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self> {}

impl<T> Ring for T where T: Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = T> + Sub<Output = T> {}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring + Div<Output = Self> {}

impl Field for Rat {}

/// Coefficient rings for Laurent polynomials: the integers or the rationals.
pub trait Coeff: Ring + Signed + fmt::Display + FromStr + 'static {
    fn to_rat(&self) -> Rat;
    /// Returns `Some` when the rational is representable in this ring.
    fn from_rat(q: &Rat) -> Option<Self>;
    fn from_i64(v: i64) -> Self;
}

impl Coeff for Int {
    fn to_rat(&self) -> Rat {
        Rat::from_integer(self.clone())
    }

    fn from_rat(q: &Rat) -> Option<Self> {
        q.is_integer().then(|| q.to_integer())
    }

    fn from_i64(v: i64) -> Self {
        Int::from(v)
    }
}

impl Coeff for Rat {
    fn to_rat(&self) -> Rat {
        self.clone()
    }

    fn from_rat(q: &Rat) -> Option<Self> {
        Some(q.clone())
    }

    fn from_i64(v: i64) -> Self {
        Rat::from_integer(Int::from(v))
    }
}

/// Which coefficient ring an operation works over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoeffRing {
    Int,
    Rat,
}

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

/// Parses `"7"`, `"-3"` or `"p/q"`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = Int::from_str(n.trim()).ok()?;
            let d = Int::from_str(d.trim()).ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => Int::from_str(s).ok().map(Rat::from_integer),
    }
}

/// `"p/q"` or `"p"`, never decimal notation.
pub fn rat_to_string(q: &Rat) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Representative of `q` modulo the integers, in `[0, 1)`.
pub fn frac_part(q: &Rat) -> Rat {
    q - q.floor()
}

/// Integer square root test for non-negative integers.
pub fn is_perfect_square(n: &Int) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// Squarefree part of a nonzero rational, returned as a squarefree integer
/// carrying the sign. Used for determinant classes modulo squares.
pub fn squarefree_class(q: &Rat) -> Int {
    assert!(!q.is_zero(), "squarefree class of zero");
    let sign = if q.is_negative() { -1 } else { 1 };
    // q = a/b ~ a*b modulo squares
    let mut n = (q.numer() * q.denom()).abs();
    let mut out = Int::one();
    let mut p = Int::from(2u32);
    while &p * &p <= n {
        let mut e = 0u32;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= &p;
        }
        p += 1u32;
    }
    out *= n;
    out * Int::from(sign)
}

pub fn lcm_int(a: &Int, b: &Int) -> Int {
    a.lcm(b)
}

/// Prime factorisation by trial division; only used on small moduli.
pub fn factor_small(n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut n = n;
    let mut p = 2u64;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Modular inverse for coprime `a`, `m` (m > 1).
pub fn inv_mod(a: &Int, m: &Int) -> Option<Int> {
    let e = a.mod_floor(m).extended_gcd(m);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_rat("3/6"), Some(rat(1, 2)));
        assert_eq!(parse_rat("-4"), Some(rat_int(-4)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat("0.5"), None);
        assert_eq!(rat_to_string(&rat(-2, 4)), "-1/2");
        assert_eq!(rat_to_string(&rat(6, 3)), "2");
    }

    #[test]
    fn squares() {
        assert!(is_perfect_square(&int(49)));
        assert!(!is_perfect_square(&int(3)));
        assert!(is_perfect_square(&int(0)));
        assert_eq!(squarefree_class(&rat(-12, 1)), int(-3));
        assert_eq!(squarefree_class(&rat(2, 8)), int(1));
        assert_eq!(squarefree_class(&rat(5, 3)), int(15));
    }

    #[test]
    fn frac() {
        assert_eq!(frac_part(&rat(-1, 3)), rat(2, 3));
        assert_eq!(frac_part(&rat(7, 3)), rat(1, 3));
    }
}
