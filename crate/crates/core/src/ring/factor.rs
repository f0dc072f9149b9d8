//! Factoring over the rationals: squarefree decomposition followed by
//! modular factoring, Hensel lifting and Zassenhaus recombination.

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::laurent::{Gamma, LaurentPoly};
use super::modp::Fp;
use super::poly::{IntPoly, Poly, RatPoly};
use super::scalar::{inv_mod, Int, Rat};
use crate::error::{Error, Result};

pub const DEGREE_CAP: usize = 32;

/// Yun's algorithm; returns `(squarefree factor, multiplicity)` with monic
/// non-constant factors.
pub fn squarefree_decomposition(f: &RatPoly) -> Vec<(RatPoly, u32)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let fp = f.derivative();
    let a0 = f.gcd(&fp);
    let mut b = f.div_exact(&a0).unwrap();
    let c = fp.div_exact(&a0).unwrap();
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        let nb = b.div_exact(&a).unwrap();
        let nc = d.div_exact(&a).unwrap();
        d = &nc - &nb.derivative();
        b = nb;
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.monic(), i));
        }
        i += 1;
    }
    out
}

fn modp(f: &IntPoly, m: &Int) -> IntPoly {
    Poly::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn symmetric(f: &IntPoly, m: &Int) -> IntPoly {
    let half = m / 2;
    Poly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Division by a monic polynomial modulo `m`.
fn div_rem_monic(a: &IntPoly, h: &IntPoly, m: &Int) -> (IntPoly, IntPoly) {
    let dh = h.degree().unwrap();
    let mut r: Vec<Int> = modp(a, m).coeffs().to_vec();
    if r.len() <= dh {
        return (Poly::zero(), Poly::new(r));
    }
    let mut q = vec![Int::zero(); r.len() - dh];
    for i in (0..q.len()).rev() {
        let c = r[i + dh].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, hc) in h.coeffs().iter().enumerate() {
            r[i + j] = (&r[i + j] - &c * hc).mod_floor(m);
        }
        q[i] = c;
    }
    r.truncate(dh);
    (Poly::new(q), modp(&Poly::new(r), m))
}

/// One quadratic Hensel step from modulus `m` to `m^2`; `h` is monic.
#[allow(clippy::too_many_arguments)]
fn hensel_step(
    f: &IntPoly,
    g: &IntPoly,
    h: &IntPoly,
    s: &IntPoly,
    t: &IntPoly,
    m: &Int,
) -> (IntPoly, IntPoly, IntPoly, IntPoly) {
    let m2 = m * m;
    let e = modp(&(f - &(g * h)), &m2);
    let (q, r) = div_rem_monic(&(s * &e), h, &m2);
    let g1 = modp(&(&(g + &(t * &e)) + &(&q * g)), &m2);
    let h1 = modp(&(h + &r), &m2);
    let b = modp(&(&(&(s * &g1) + &(t * &h1)) - &IntPoly::one()), &m2);
    let (c, d) = div_rem_monic(&(s * &b), &h1, &m2);
    let s1 = modp(&(s - &d), &m2);
    let t1 = modp(&(&(t - &(t * &b)) - &(&c * &g1)), &m2);
    (g1, h1, s1, t1)
}

/// Lifts the monic modular factors of `f` to monic factors modulo `p^(2^steps)`.
fn multi_lift(f: &IntPoly, factors: &[Fp], p: u64, steps: u32) -> Vec<IntPoly> {
    let pi = Int::from(p);
    let big = (0..steps).fold(pi.clone(), |m, _| &m * &m);
    if factors.len() == 1 {
        let li = inv_mod(&f.lead(), &big).expect("leading coefficient prime to p");
        return vec![modp(&f.scale(&li), &big)];
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let lc = f.lead().mod_floor(&pi).to_u64().unwrap();
    let h0 = left.iter().fold(Fp::one(p), |a, x| a.mul(x));
    let g0 = right.iter().fold(Fp::one(p), |a, x| a.mul(x)).scale(lc);
    let (_, s0, _) = g0.xgcd(&h0);
    let s0 = s0.rem(&h0);
    let t0 = Fp::one(p).sub(&s0.mul(&g0)).div_rem(&h0).0;
    let (mut g, mut h, mut s, mut t) = (g0.to_int(), h0.to_int(), s0.to_int(), t0.to_int());
    let mut m = pi.clone();
    for _ in 0..steps {
        let next = hensel_step(f, &g, &h, &s, &t, &m);
        g = next.0;
        h = next.1;
        s = next.2;
        t = next.3;
        m = &m * &m;
    }
    let mut out = multi_lift(&h, left, p, steps);
    out.extend(multi_lift(&g, right, p, steps));
    out
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|n| (3..).step_by(2).take_while(|d| d * d <= *n).all(|d| n % d != 0))
}

/// Irreducible factors over ℤ of a primitive squarefree polynomial with
/// positive leading coefficient.
fn zassenhaus(f: &IntPoly) -> Vec<IntPoly> {
    let n = f.degree().unwrap_or(0);
    if n <= 1 {
        return vec![f.clone()];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut best: Option<(u64, Vec<Fp>)> = None;
    let mut tried = 0;
    for p in small_primes() {
        if (f.lead() % Int::from(p)).is_zero() {
            continue;
        }
        let fp = Fp::from_int(f, p);
        if fp.degree() != n || !fp.is_squarefree() {
            continue;
        }
        let fs = fp.factor_squarefree(&mut rng);
        if fs.len() == 1 {
            return vec![f.clone()];
        }
        if best.as_ref().is_none_or(|(_, b)| fs.len() < b.len()) {
            best = Some((p, fs));
        }
        tried += 1;
        if tried >= 6 {
            break;
        }
    }
    let (p, modular) = best.expect("some prime keeps the polynomial squarefree");

    // Coefficient bound for any factor, times the leading coefficient.
    let bound = Int::from(2u32).pow(n as u32) * Int::from(n as u64 + 1) * f.max_abs_coeff() * f.lead();
    let need = bound * 2u32;
    let pi = Int::from(p);
    let mut steps = 0u32;
    let mut modulus = pi.clone();
    while modulus <= need {
        modulus = &modulus * &modulus;
        steps += 1;
    }
    let lifted = multi_lift(f, &modular, p, steps);

    let mut rest: Vec<IntPoly> = lifted;
    let mut remaining = f.clone();
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= rest.len() {
        let mut found = false;
        let r = rest.len();
        for subset in combinations(r, size) {
            let lc = remaining.lead();
            let cand = subset.iter().fold(IntPoly::constant(lc.clone()), |a, &i| modp(&(&a * &rest[i]), &modulus));
            let cand = symmetric(&cand, &modulus).primitive();
            if let Some(q) = remaining.div_exact_int(&cand) {
                out.push(cand);
                remaining = q;
                let keep: Vec<IntPoly> =
                    rest.iter().enumerate().filter(|(i, _)| !subset.contains(i)).map(|(_, g)| g.clone()).collect();
                rest = keep;
                found = true;
                break;
            }
        }
        if !found {
            size += 1;
        }
    }
    out.push(remaining.primitive());
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Canonical ℚ-form: monic, lowest exponent 0.
pub fn canonical_rat(p: &RatPoly) -> Gamma {
    LaurentPoly::from_poly(0, &p.strip_low().monic())
}

/// Irreducible factors with multiplicities; units (constants and powers of
/// `t`) are dropped. Factors are in canonical ℚ-form and sorted.
pub fn factor_over_rationals(p: &Gamma) -> Result<Vec<(Gamma, u32)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (_, poly) = p.to_poly();
    let deg = poly.degree().unwrap_or(0);
    if deg > DEGREE_CAP {
        return Err(Error::DegreeTooLarge { degree: deg, cap: DEGREE_CAP });
    }
    let mut out = Vec::new();
    for (sq, mult) in squarefree_decomposition(&poly) {
        let (_, prim) = sq.to_primitive_int();
        for f in zassenhaus(&prim) {
            out.push((canonical_rat(&f.to_rat()), mult));
        }
    }
    out.sort_by(|a, b| factor_key(&a.0).cmp(&factor_key(&b.0)).then(a.1.cmp(&b.1)));
    Ok(out)
}

fn factor_key(f: &Gamma) -> (i64, Vec<Rat>) {
    let (_, p) = f.to_poly();
    (f.span(), p.coeffs().to_vec())
}

/// True when the polynomial has no nontrivial factorisation over ℚ.
pub fn is_irreducible(p: &Gamma) -> Result<bool> {
    let fs = factor_over_rationals(p)?;
    Ok(fs.len() == 1 && fs[0].1 == 1)
}

/// Product of `factor^mult`, for reassembly checks.
pub fn expand(factors: &[(Gamma, u32)]) -> Gamma {
    factors.iter().fold(Gamma::one(), |acc, (f, m)| &acc * &f.pow(*m))
}
