//! The trace functional `χ` on `ℚ(t)`.

use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use super::poly::RatPoly;
use super::ratfunc::RationalFunction;
use super::scalar::Rat;

/// Splits `f = g + r/h` with `g` having denominators built from `t` and
/// `1 - t` and `r/h` proper with `h` prime to `t(1 - t)`; returns `(r, h)`.
pub fn proper_part(f: &RationalFunction) -> (RatPoly, RatPoly) {
    let (low, n) = f.num().to_poly();
    let (_, d) = f.den().to_poly();
    // f = n / (t^a d) after moving negative powers of t into the denominator
    let (n, a) = if low >= 0 { (n.shift_up(low as usize), 0usize) } else { (n, (-low) as usize) };
    let t_minus_one = RatPoly::from_i64s(&[-1, 1]);
    let mut h = d;
    let mut e = RatPoly::monomial(Rat::one(), a);
    while h.degree().unwrap_or(0) > 0 && h.eval(&Rat::one()).is_zero() {
        h = h.div_exact(&t_minus_one).unwrap();
        e = &e * &t_minus_one;
    }
    if h.degree().unwrap_or(0) == 0 {
        return (RatPoly::zero(), RatPoly::one());
    }
    let (_, s, _) = e.xgcd(&h);
    let r = (&n * &s).rem(&h);
    (r, h)
}

/// `χ(f) = (r/h)'(1)` for the proper part `r/h` of `f`.
pub fn trace_chi(f: &RationalFunction) -> Rat {
    let (r, h) = proper_part(f);
    if r.is_zero() {
        return Rat::zero();
    }
    let one = Rat::one();
    let h1 = h.eval(&one);
    (r.derivative().eval(&one) * &h1 - r.eval(&one) * h.derivative().eval(&one)) / (&h1 * &h1)
}

/// Convenience wrapper over [`RationalFunction::laurent_membership`].
pub fn laurent_membership(
    f: &RationalFunction,
    ring: super::scalar::CoeffRing,
) -> Option<LaurentPoly<Rat>> {
    f.laurent_membership(ring)
}
