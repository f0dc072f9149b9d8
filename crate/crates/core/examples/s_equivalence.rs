//! Random S-equivalence moves, a replayable trace, and reduction to a
//! nonsingular representative.
//!
//! ```bash
//! cargo run --example s_equivalence
//! ```

use diskknot::generate::Generator;
use diskknot::seifert::{Parity, SeifertData};
use diskknot::sequiv::{reduce_to_nonsingular, replay, sequiv_invariants, MoveTrace, Reduction};

fn main() -> diskknot::Result<()> {
    let mut g = Generator::new(21);
    let s = g.valid(Parity::Odd);
    let before = sequiv_invariants(&s)?;

    let mut trace = MoveTrace::identity(&s);
    for _ in 0..6 {
        let m = g.random_move(&trace.end);
        println!("{:>16} -> dim {}", m.name(), {
            trace.push(m)?;
            trace.end.dim()
        });
    }
    let after = sequiv_invariants(&trace.end)?;
    println!("invariants preserved: {}", before == after);
    println!("alexander {}  nonsingular dim {}", after.alexander, after.dim_of_nonsingular_rep);
    println!("replay matches: {}", replay(&trace)? == trace.end);

    // a hyperbolic block next to the trefoil; θ is singular but R is not
    let singular =
        SeifertData::from_i64(&[&[0, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, -1, 1], &[0, 0, 0, -1]], Parity::Odd);
    match reduce_to_nonsingular(&singular)? {
        Reduction::Nonsingular { result, trace } => {
            println!("reduced to {} in {} moves", result.theta, trace.moves.len())
        }
        Reduction::ZeroModule { trace } => println!("zero module after {} moves", trace.moves.len()),
    }
    Ok(())
}
