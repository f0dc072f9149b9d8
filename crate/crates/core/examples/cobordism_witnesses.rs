//! Explicit null-cobordism witnesses: `A ⊞ -A`, an enlargement, and a
//! combination matrix, each checked exactly.
//!
//! ```bash
//! cargo run --example cobordism_witnesses
//! ```

use diskknot::cobordism::{
    block_sum, check_null_cobordance_witness, combo_ambient, combo_matrix_witness, diagonal_witness,
    enlargement_ambient, enlargement_cobordism_witness, negate, obstruction_suite,
};
use diskknot::generate::Generator;
use diskknot::seifert::Parity;
use diskknot::sequiv::apply_move;

fn main() -> diskknot::Result<()> {
    let mut g = Generator::new(11);
    let a = g.valid(Parity::Even);
    println!("A = {}", a.theta);

    let doubled = block_sum(&a, &negate(&a))?;
    let w = diagonal_witness(a.dim());
    println!("A ⊞ -A: witness ok = {}", check_null_cobordance_witness(&doubled.theta, &w)?);
    println!("A ⊞ -A: obstructions say {}", obstruction_suite(&doubled)?.verdict);

    let m = g.surgery(a.dim());
    let e = apply_move(&a, &m)?;
    let w = enlargement_cobordism_witness(&a, &e)?;
    println!("-A ⊞ enlarged: witness ok = {}", check_null_cobordance_witness(&enlargement_ambient(&a, &e), &w)?);

    let b = g.valid(Parity::Even);
    let blocks = g.combo_blocks(a.dim(), b.dim(), 2);
    let w = combo_matrix_witness(&a, &b, &blocks)?;
    let amb = combo_ambient(&a, &b, &blocks)?;
    println!("combination: witness of size {} ok = {}", w.len(), check_null_cobordance_witness(&amb, &w)?);
    println!("{}", serde_json::to_string(&w).expect("serialisable"));
    Ok(())
}
