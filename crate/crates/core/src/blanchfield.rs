//! Presentation matrix of the module H̄ and its Blanchfield pairing matrix.

use std::collections::BTreeMap;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::io::{laurent_to_json, JsonRat, RationalFunctionRecord};
use crate::linalg::{conjugate_matrix, det_laurent, inverse_laurent, pencil, Matrix, RatMatrix};
use crate::ring::scalar::{CoeffRing, Rat};
use crate::ring::{trace_chi, Gamma, Lambda, RationalFunction};
use crate::seifert::{derive_r, derive_tau, require_valid, Parity, SeifertData};

pub type LambdaMatrix = Matrix<Lambda>;
pub type GammaMatrix = Matrix<Gamma>;
pub type FunctionMatrix = Matrix<RationalFunction>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlanchfieldForm {
    pub presentation: LambdaMatrix,
    pub pairing: FunctionMatrix,
    pub parity: Parity,
}

fn to_lambda(m: &GammaMatrix, what: &str) -> Result<LambdaMatrix> {
    m.try_map(Lambda::from_rational)
        .ok_or_else(|| Error::IntegralityViolation(format!("{what} has a non-integral entry")))
}

pub fn lambda_to_gamma(m: &LambdaMatrix) -> GammaMatrix {
    m.map(|p| p.to_rational())
}

fn t_minus_one() -> Gamma {
    Gamma::from_i64s(0, &[-1, 1])
}

/// `M = (-1)^(n+1) (R⁻¹)' τ R t - τ'`
pub fn presentation_matrix(s: &SeifertData) -> Result<LambdaMatrix> {
    require_valid(s)?;
    let r = derive_r(s);
    let r_inv = r.inverse().ok_or(Error::DegenerateR)?;
    let tau = derive_tau(s)?;
    let lin = r_inv.transpose().mul(&tau).mul(&r).scale(&s.eps());
    let m = to_lambda(&pencil(&tau.transpose().neg(), &lin), "presentation")?;
    let at_one = m.map(|p| p.eval_one()).to_rat();
    if !at_one.det().abs().is_one() {
        return Err(Error::IntegralityViolation("det M(1) is not a unit".into()));
    }
    Ok(m)
}

/// `B = (t - 1)((R⁻¹)' τ - (-1)^(n+1) t τ' R⁻¹)⁻¹`
pub fn pairing_matrix(s: &SeifertData) -> Result<FunctionMatrix> {
    require_valid(s)?;
    let r_inv = derive_r(s).inverse().ok_or(Error::DegenerateR)?;
    let tau = derive_tau(s)?;
    let inner = pencil(&r_inv.transpose().mul(&tau), &tau.transpose().mul(&r_inv).scale(&-s.eps()));
    scaled_inverse(&inner)
}

fn scaled_inverse(inner: &GammaMatrix) -> Result<FunctionMatrix> {
    let inv = inverse_laurent(inner).ok_or(Error::DegenerateForm)?;
    let f = RationalFunction::from_laurent(&t_minus_one());
    Ok(inv.map(|x| &f * x))
}

impl BlanchfieldForm {
    pub fn new(s: &SeifertData) -> Result<Self> {
        Ok(BlanchfieldForm { presentation: presentation_matrix(s)?, pairing: pairing_matrix(s)?, parity: s.parity })
    }

    /// The same pairing after the rational base change that turns `R` into the
    /// identity: pairing `(t - 1)(θ' - (-1)^(n+1) t θ)⁻¹`, presentation
    /// `(-1)^(n+1) θ' t - θ`.
    pub fn rational_basis(s: &SeifertData) -> Result<Self> {
        require_valid(s)?;
        let th = &s.theta;
        let pairing = scaled_inverse(&pencil(&th.transpose(), &th.scale(&-s.eps())))?;
        let presentation = to_lambda(&pencil(&th.neg(), &th.transpose().scale(&s.eps())), "presentation")?;
        Ok(BlanchfieldForm { presentation, pairing, parity: s.parity })
    }

    pub fn dim(&self) -> usize {
        self.pairing.rows()
    }

    /// `B_ij - (-1)^(n+1) conj(B_ji) ∈ Λ` for all `i, j`.
    pub fn is_hermitian(&self) -> bool {
        let eps = Rat::from_integer(self.parity.eps().into());
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let d = self.pairing.get(i, j) - &self.pairing.get(j, i).conjugate().scale(&eps);
                d.laurent_membership(CoeffRing::Int).is_some()
            })
        })
    }
}

/// Entrywise trace of the pairing.
pub fn trace_form(b: &BlanchfieldForm) -> RatMatrix {
    b.pairing.map(trace_chi)
}

/// `W = conj(M' B) = M̄' B̄`, which must be integral.
pub fn consistency_w(s: &SeifertData) -> Result<LambdaMatrix> {
    let m = presentation_matrix(s)?;
    let b = pairing_matrix(s)?;
    let mbar_t = conjugate_matrix(&lambda_to_gamma(&m)).transpose().map(RationalFunction::from_laurent);
    let w = mbar_t.mul(&b.map(RationalFunction::conjugate));
    w.try_map(RationalFunction::as_lambda)
        .ok_or_else(|| Error::NonIntegralAdjoint("conj(M' B) has a non-Laurent entry".into()))
}

/// `x ≡ y` in `Q(Λ)/Λ`.
pub fn congruent_mod_lambda(x: &RationalFunction, y: &RationalFunction) -> bool {
    (x - y).laurent_membership(CoeffRing::Int).is_some()
}

pub fn det_presentation(m: &LambdaMatrix) -> Gamma {
    det_laurent(&lambda_to_gamma(m))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlanchfieldRecord {
    pub n_parity: Parity,
    pub presentation: Vec<Vec<BTreeMap<String, String>>>,
    pub pairing: Vec<Vec<RationalFunctionRecord>>,
    pub hermitian: bool,
    pub trace_form: Vec<Vec<JsonRat>>,
}

impl From<&BlanchfieldForm> for BlanchfieldRecord {
    fn from(b: &BlanchfieldForm) -> Self {
        BlanchfieldRecord {
            n_parity: b.parity,
            presentation: b.presentation.to_rows().iter().map(|r| r.iter().map(laurent_to_json).collect()).collect(),
            pairing: b.pairing.to_rows().iter().map(|r| r.iter().map(RationalFunctionRecord::from).collect()).collect(),
            hermitian: b.is_hermitian(),
            trace_form: crate::io::matrix_to_json(&trace_form(b)),
        }
    }
}
