//! The product condition `p ~ q(t) q(t⁻¹)` over `ℚ[t, t⁻¹]`.

use std::collections::BTreeMap;

use super::factor::{canonical_rat, factor_over_rationals};
use super::laurent::Gamma;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoxMilnor {
    pub passes: bool,
    /// `q` with `p ~ q(t) q(t⁻¹)`, in canonical ℚ-form.
    pub witness: Option<Gamma>,
}

/// Canonical form of `f(t⁻¹)`.
pub fn reciprocal(f: &Gamma) -> Gamma {
    let (_, poly) = f.conjugate().to_poly();
    canonical_rat(&poly)
}

pub fn fox_milnor_test(p: &Gamma) -> Result<FoxMilnor> {
    let factors = factor_over_rationals(p)?;
    let mults: BTreeMap<String, (Gamma, u32)> =
        factors.iter().map(|(f, m)| (format!("{f}"), (f.clone(), *m))).collect();
    let mut witness = Gamma::one();
    for (f, m) in &factors {
        let star = reciprocal(f);
        if &star == f {
            if m % 2 != 0 {
                return Ok(FoxMilnor { passes: false, witness: None });
            }
            witness = &witness * &f.pow(m / 2);
            continue;
        }
        match mults.get(&format!("{star}")) {
            Some((_, ms)) if ms == m => {
                if factor_order(f) < factor_order(&star) {
                    witness = &witness * &f.pow(*m);
                }
            }
            _ => return Ok(FoxMilnor { passes: false, witness: None }),
        }
    }
    Ok(FoxMilnor { passes: true, witness: Some(witness) })
}

fn factor_order(f: &Gamma) -> (i64, Vec<num_rational::BigRational>) {
    let (_, p) = f.to_poly();
    (f.span(), p.coeffs().to_vec())
}
