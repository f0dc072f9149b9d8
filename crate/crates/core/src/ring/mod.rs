//! Exact scalars, Laurent polynomials, rational functions and the
//! polynomial algorithms built on them.

pub mod factor;
pub mod fox_milnor;
pub mod laurent;
pub mod modp;
pub mod poly;
pub mod ratfunc;
pub mod scalar;
pub mod similarity;
pub mod trace;

pub use factor::{factor_over_rationals, is_irreducible};
pub use fox_milnor::{fox_milnor_test, FoxMilnor};
pub use laurent::{Gamma, Lambda, LaurentPoly};
pub use poly::{IntPoly, Poly, RatPoly};
pub use ratfunc::RationalFunction;
pub use scalar::{int, parse_rat, rat, rat_int, rat_to_string, CoeffRing, Int, Rat};
pub use similarity::{similarity_normalize, SimilarityClass};
pub use trace::{laurent_membership, trace_chi};

/// `p(t⁻¹)`
pub fn conjugate<C: scalar::Coeff>(p: &LaurentPoly<C>) -> LaurentPoly<C> {
    p.conjugate()
}
