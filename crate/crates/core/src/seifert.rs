//! Seifert matrices of disk knots and the matrices derived from them.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{det_laurent, pencil, IntMatrix, RatMatrix};
use crate::ring::scalar::{CoeffRing, Int, Rat};
use crate::ring::similarity::{similarity_normalize, SimilarityClass};
use crate::ring::Gamma;

/// Parity of `n` for a knot `D^(2n-1) ⊂ D^(2n+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    /// `(-1)^(n+1)`
    pub fn eps(self) -> i64 {
        match self {
            Parity::Odd => 1,
            Parity::Even => -1,
        }
    }

    /// `(-1)^n`
    pub fn sign(self) -> i64 {
        -self.eps()
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

/// A square Seifert matrix with the parity of `n`.
///
/// Entries are rational so that rational congruences can act; data read
/// from files and produced by the generator is integral.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeifertData {
    pub theta: RatMatrix,
    pub parity: Parity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidityReport {
    pub r_nondegenerate: bool,
    pub tau_integral: bool,
    pub mu_integral: bool,
    pub dimension_ok: bool,
    pub is_sphere_matrix: bool,
    pub verdict: bool,
    pub det_r: String,
}

impl ValidityReport {
    /// The first failed condition, for messages.
    pub fn failure(&self) -> Option<&'static str> {
        if !self.r_nondegenerate {
            Some("R degenerate")
        } else if !self.tau_integral {
            Some("tau not integral")
        } else if !self.mu_integral {
            Some("mu not integral")
        } else if !self.dimension_ok {
            Some("odd dimension")
        } else {
            None
        }
    }
}

fn scalar(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

impl SeifertData {
    pub fn new(theta: RatMatrix, parity: Parity) -> Result<Self> {
        if !theta.is_square() {
            return Err(Error::ShapeMismatch(format!("theta is {}x{}", theta.rows(), theta.cols())));
        }
        Ok(SeifertData { theta, parity })
    }

    pub fn from_int(theta: IntMatrix, parity: Parity) -> Result<Self> {
        Self::new(theta.to_rat(), parity)
    }

    pub fn from_i64(rows: &[&[i64]], parity: Parity) -> Self {
        Self::new(RatMatrix::from_i64(rows), parity).expect("square literal")
    }

    pub fn empty(parity: Parity) -> Self {
        SeifertData { theta: RatMatrix::zeros(0, 0), parity }
    }

    pub fn dim(&self) -> usize {
        self.theta.rows()
    }

    pub fn is_integral(&self) -> bool {
        self.theta.is_integral()
    }

    pub fn eps(&self) -> Rat {
        scalar(self.parity.eps())
    }

    pub fn sign(&self) -> Rat {
        scalar(self.parity.sign())
    }
}

/// `R = -θ' + (-1)^(n+1) θ`
pub fn derive_r(s: &SeifertData) -> RatMatrix {
    s.theta.transpose().neg().add(&s.theta.scale(&s.eps()))
}

fn r_inverse(s: &SeifertData) -> Result<RatMatrix> {
    derive_r(s).inverse().ok_or(Error::DegenerateR)
}

/// `τ = θ' R⁻¹`
pub fn derive_tau(s: &SeifertData) -> Result<RatMatrix> {
    Ok(s.theta.transpose().mul(&r_inverse(s)?))
}

/// `μ = (-1)^(n+1) θ R⁻¹`, the matrix with `μ R = (-1)^(n+1) R' τ'`.
pub fn derive_mu(s: &SeifertData) -> Result<RatMatrix> {
    Ok(s.theta.mul(&r_inverse(s)?).scale(&s.eps()))
}

/// `T = -(θ + (-1)^n θ')`
pub fn intersection_matrix(s: &SeifertData) -> RatMatrix {
    s.theta.add(&s.theta.transpose().scale(&s.sign())).neg()
}

pub fn validate(s: &SeifertData) -> ValidityReport {
    let r = derive_r(s);
    let det_r = r.det();
    let nondeg = !det_r.is_zero();
    let (tau_ok, mu_ok) = if nondeg {
        (derive_tau(s).is_ok_and(|t| t.is_integral()), derive_mu(s).is_ok_and(|m| m.is_integral()))
    } else {
        (false, false)
    };
    let odd_det = det_r.is_integer() && det_r.to_integer().is_odd();
    let needs_even = match s.parity {
        Parity::Odd => true,
        Parity::Even => odd_det,
    };
    let dimension_ok = !needs_even || s.dim() % 2 == 0;
    let verdict = nondeg && tau_ok && mu_ok && dimension_ok;
    ValidityReport {
        r_nondegenerate: nondeg,
        tau_integral: tau_ok,
        mu_integral: mu_ok,
        dimension_ok,
        is_sphere_matrix: det_r.abs().is_one(),
        verdict,
        det_r: crate::ring::rat_to_string(&det_r),
    }
}

pub fn require_valid(s: &SeifertData) -> Result<ValidityReport> {
    let rep = validate(s);
    match rep.failure() {
        None => Ok(rep),
        Some(why) => Err(Error::InvalidCandidate(why.to_string())),
    }
}

/// `det(θ t + (-1)^n θ')` as a Laurent polynomial.
pub fn alexander_numerator(s: &SeifertData) -> Gamma {
    det_laurent(&pencil(&s.theta.transpose().scale(&s.sign()), &s.theta))
}

/// Normalised `det((θ + (-1)^n θ')⁻¹ (θ t + (-1)^n θ'))`; only needs
/// `det R ≠ 0`, so it applies to rational matrices reached by moves.
pub fn alexander_class(s: &SeifertData) -> Result<SimilarityClass> {
    let d = intersection_matrix(s).neg().det();
    if d.is_zero() {
        return Err(Error::DegenerateR);
    }
    let p = alexander_numerator(s).scale(&(Rat::one() / d));
    similarity_normalize(&p, CoeffRing::Rat)
}

/// The Alexander polynomial of a valid candidate, up to similarity over ℚ.
pub fn alexander_polynomial(s: &SeifertData) -> Result<SimilarityClass> {
    require_valid(s)?;
    alexander_class(s)
}

impl fmt::Display for SeifertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .theta
            .to_rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(crate::ring::rat_to_string).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "theta = [{}] (n {})", rows.join(", "), self.parity.as_str())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> SeifertData {
        SeifertData::from_i64(&[&[-1, 1], &[0, -1]], Parity::Odd)
    }

    fn disk() -> SeifertData {
        SeifertData::from_i64(&[&[1, -1], &[2, 1]], Parity::Even)
    }

    fn hopf_like() -> SeifertData {
        SeifertData::from_i64(&[&[0, 1], &[0, 0]], Parity::Odd)
    }

    #[test]
    fn derived_matrices() {
        assert_eq!(derive_r(&hopf_like()), RatMatrix::from_i64(&[&[0, 1], &[-1, 0]]));
        assert_eq!(derive_r(&disk()), RatMatrix::from_i64(&[&[-2, -1], &[-1, -2]]));
        assert_eq!(derive_r(&SeifertData::empty(Parity::Odd)).rows(), 0);
        assert_eq!(derive_tau(&trefoil()).unwrap(), RatMatrix::from_i64(&[&[0, 1], &[-1, -1]]));
        assert_eq!(derive_tau(&disk()).unwrap(), RatMatrix::from_i64(&[&[0, -1], &[1, -1]]));
        assert_eq!(derive_tau(&hopf_like()).unwrap(), RatMatrix::from_i64(&[&[0, 0], &[0, -1]]));
        assert_eq!(derive_mu(&disk()).unwrap(), RatMatrix::from_i64(&[&[1, -1], &[1, 0]]));
        assert_eq!(derive_mu(&hopf_like()).unwrap(), RatMatrix::from_i64(&[&[1, 0], &[0, 0]]));
        assert_eq!(intersection_matrix(&hopf_like()), RatMatrix::from_i64(&[&[0, -1], &[1, 0]]));
    }

    #[test]
    fn mu_relation() {
        for s in [trefoil(), disk(), hopf_like()] {
            let r = derive_r(&s);
            let lhs = derive_mu(&s).unwrap().mul(&r);
            let rhs = r.transpose().mul(&derive_tau(&s).unwrap().transpose()).scale(&s.eps());
            assert_eq!(lhs, rhs);
            assert_eq!(derive_tau(&s).unwrap().mul(&r).transpose(), s.theta);
        }
    }

    #[test]
    fn validation() {
        let t = validate(&trefoil());
        assert!(t.verdict && t.is_sphere_matrix);
        let d = validate(&disk());
        assert!(d.verdict && !d.is_sphere_matrix);
        assert_eq!(d.det_r, "3");
        let one = validate(&SeifertData::from_i64(&[&[1]], Parity::Even));
        assert!(!one.verdict);
        assert_eq!(one.failure(), Some("tau not integral"));
        assert!(validate(&SeifertData::empty(Parity::Odd)).verdict);
    }

    #[test]
    fn alexander_examples() {
        let tref = Gamma::from_i64s(0, &[1, -1, 1]);
        assert_eq!(alexander_polynomial(&trefoil()).unwrap().rep, tref);
        assert_eq!(alexander_polynomial(&disk()).unwrap().rep, tref);
        assert_eq!(alexander_polynomial(&hopf_like()).unwrap().rep, Gamma::one());
        assert_eq!(alexander_polynomial(&SeifertData::empty(Parity::Even)).unwrap().rep, Gamma::one());
    }
}
