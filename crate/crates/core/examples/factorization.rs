//! Rational factorisation and the Fox-Milnor product condition.
//!
//! ```bash
//! cargo run --example factorization
//! ```

use diskknot::ring::{factor_over_rationals, fox_milnor_test, Gamma};

fn main() -> diskknot::Result<()> {
    let cases = [
        ("trefoil", Gamma::from_i64s(0, &[1, -1, 1])),
        ("square of trefoil", Gamma::from_i64s(0, &[1, -2, 3, -2, 1])),
        ("stevedore", Gamma::from_i64s(0, &[2, -5, 2])),
        ("t^4 - 1", Gamma::from_i64s(0, &[-1, 0, 0, 0, 1])),
    ];
    for (name, p) in cases {
        let factors = factor_over_rationals(&p)?;
        let shown: Vec<String> = factors.iter().map(|(f, e)| format!("({f})^{e}")).collect();
        let fm = fox_milnor_test(&p)?;
        print!("{name:>18}: {}  fox-milnor {}", shown.join(" "), fm.passes);
        if let Some(q) = fm.witness {
            print!("  q = {q}");
        }
        println!();
    }
    Ok(())
}
