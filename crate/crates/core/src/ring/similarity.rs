//! Canonical representatives of Laurent polynomials up to units.

use std::fmt;

use num_traits::{One, Signed};

use super::laurent::Gamma;
use super::scalar::{CoeffRing, Rat};
use crate::error::{Error, Result};

/// A polynomial up to `±t^k` (over ℤ) or `q t^k` (over ℚ).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimilarityClass {
    pub ring: CoeffRing,
    pub rep: Gamma,
}

/// Lowest exponent 0; over ℤ positive leading coefficient, over ℚ monic.
pub fn similarity_normalize(p: &Gamma, ring: CoeffRing) -> Result<SimilarityClass> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let low = p.min_exp().unwrap();
    let shifted = p.shift(-low);
    let lead = shifted.lead();
    let rep = match ring {
        CoeffRing::Int if lead.is_negative() => -&shifted,
        CoeffRing::Int => shifted,
        CoeffRing::Rat => shifted.scale(&(Rat::one() / lead)),
    };
    Ok(SimilarityClass { ring, rep })
}

impl SimilarityClass {
    pub fn similar(a: &Gamma, b: &Gamma, ring: CoeffRing) -> Result<bool> {
        Ok(similarity_normalize(a, ring)? == similarity_normalize(b, ring)?)
    }

    pub fn is_unit(&self) -> bool {
        match self.ring {
            CoeffRing::Rat => self.rep.is_one(),
            CoeffRing::Int => self.rep.is_one(),
        }
    }
}

impl fmt::Display for SimilarityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(low: i64, v: &[i64]) -> Gamma {
        Gamma::from_i64s(low, v)
    }

    #[test]
    fn unit_stripping() {
        let p = g(1, &[-1, 1, -1]);
        assert_eq!(similarity_normalize(&p, CoeffRing::Rat).unwrap().rep, g(0, &[1, -1, 1]));
        assert_eq!(similarity_normalize(&g(-1, &[1]), CoeffRing::Int).unwrap().rep, g(0, &[1]));
        assert_eq!(similarity_normalize(&g(0, &[2, -2, 2]), CoeffRing::Rat).unwrap().rep, g(0, &[1, -1, 1]));
        assert_eq!(similarity_normalize(&g(0, &[-2, 2, -2]), CoeffRing::Int).unwrap().rep, g(0, &[2, -2, 2]));
        assert_eq!(similarity_normalize(&Gamma::zero(), CoeffRing::Rat), Err(Error::ZeroPolynomial));
    }
}
