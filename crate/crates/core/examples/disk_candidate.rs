//! A disk-knot matrix that is not a sphere-knot matrix: `θ + θ'` is only
//! rationally unimodular.
//!
//! ```bash
//! cargo run --example disk_candidate
//! ```

use diskknot::seifert::{alexander_polynomial, derive_mu, derive_r, derive_tau, validate, Parity, SeifertData};

fn main() -> diskknot::Result<()> {
    let s = SeifertData::from_i64(&[&[1, -1], &[2, 1]], Parity::Even);
    let v = validate(&s);
    println!("valid: {}  sphere matrix: {}", v.verdict, v.is_sphere_matrix);
    println!("R   = {}", derive_r(&s));
    println!("tau = {}", derive_tau(&s)?);
    println!("mu  = {}", derive_mu(&s)?);
    println!("alexander: {}", alexander_polynomial(&s)?);

    // [[1]] with n even has R = -2, so tau = θ' R⁻¹ is not integral
    let bad = SeifertData::from_i64(&[&[1]], Parity::Even);
    println!("[[1]] rejected: {:?}", validate(&bad).failure());
    Ok(())
}
