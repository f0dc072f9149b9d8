//! Validate the trefoil Seifert matrix, compute its Alexander polynomial and
//! run the cobordism obstructions.
//!
//! ```bash
//! cargo run --example trefoil_pipeline
//! ```

use diskknot::cobordism::obstruction_suite;
use diskknot::seifert::{alexander_polynomial, validate, Parity, SeifertData};

fn main() -> diskknot::Result<()> {
    let s = SeifertData::from_i64(&[&[-1, 1], &[0, -1]], Parity::Odd);

    let v = validate(&s);
    println!("valid: {}  sphere matrix: {}  det R: {}", v.verdict, v.is_sphere_matrix, v.det_r);

    let a = alexander_polynomial(&s)?;
    println!("alexander: {a}");

    let rep = obstruction_suite(&s)?;
    println!("verdict: {}", rep.verdict);
    for why in &rep.reasons {
        println!("  {why}");
    }
    Ok(())
}
