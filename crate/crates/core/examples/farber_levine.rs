//! Finite torsion of the boundary knot module and its ℚ/ℤ linking pairing.
//!
//! ```bash
//! cargo run --example farber_levine
//! ```

use diskknot::farber_levine::{
    fl_pairing, lift_independence_check, mk_independence_check, torsion_module, Bounds, CancelToken,
};
use diskknot::seifert::{Parity, SeifertData};

fn main() -> diskknot::Result<()> {
    let cancel = CancelToken::new();
    let trefoil = SeifertData::from_i64(&[&[-1, 1], &[0, -1]], Parity::Odd);
    println!("trefoil module trivial: {}", torsion_module(&trefoil, Bounds::default(), &cancel)?.is_trivial());

    let s = SeifertData::from_i64(&[&[1, -1], &[2, 1]], Parity::Even);
    let module = torsion_module(&s, Bounds::default(), &cancel)?;
    println!("orders [{}]  m = {}  k = {}", module.orders.iter().map(|o| o.to_string()).collect::<Vec<_>>().join(", "), module.m, module.k);
    println!("t acts by {}", module.t_action);

    let table = fl_pairing(&s, &module)?;
    let rows: Vec<String> = table.values.iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")).collect();
    println!("pairing [[{}]]", rows.join("], ["));
    println!("(2m, 2k) agrees: {}", mk_independence_check(&s, &module, 2, 2)?);
    println!("random lifts agree: {}", lift_independence_check(&s, &module, 5, 1)?);
    Ok(())
}
