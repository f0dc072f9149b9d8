//! The Blanchfield pairing from Seifert data and its Trotter trace.
//!
//! ```bash
//! cargo run --example blanchfield_trace
//! ```

use diskknot::blanchfield::{trace_form, BlanchfieldForm};
use diskknot::seifert::{Parity, SeifertData};
use diskknot::sequiv::scalar_form;

fn main() -> diskknot::Result<()> {
    let s = SeifertData::from_i64(&[&[1, -1], &[2, 1]], Parity::Even);
    let b = BlanchfieldForm::new(&s)?;
    println!("presentation:");
    for row in b.presentation.to_rows() {
        println!("  {}", row.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" | "));
    }
    println!("pairing:");
    for row in b.pairing.to_rows() {
        println!("  {}", row.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" | "));
    }
    println!("hermitian: {}", b.is_hermitian());

    let rational = BlanchfieldForm::rational_basis(&s)?;
    println!("trace form   {}", trace_form(&rational));
    println!("scalar form  {}", scalar_form(&s)?);
    println!("in the H-bar basis {}", trace_form(&b));
    Ok(())
}
