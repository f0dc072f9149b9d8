//! Polynomials over a small prime field, for modular factoring.

use rand::Rng;

use super::poly::IntPoly;
use super::scalar::Int;
use num_integer::Integer;
use num_traits::ToPrimitive;

/// Dense polynomial over `F_p`, ascending coefficients, trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fp {
    pub p: u64,
    pub c: Vec<u64>,
}

fn trim(mut c: Vec<u64>) -> Vec<u64> {
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}

pub fn inv(a: u64, p: u64) -> u64 {
    pow_mod(a % p, p - 2, p)
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

impl Fp {
    pub fn new(p: u64, c: Vec<u64>) -> Self {
        Fp { p, c: trim(c.into_iter().map(|x| x % p).collect()) }
    }

    pub fn from_int(f: &IntPoly, p: u64) -> Self {
        let pi = Int::from(p);
        Fp::new(p, f.coeffs().iter().map(|c| c.mod_floor(&pi).to_u64().unwrap()).collect())
    }

    pub fn zero(p: u64) -> Self {
        Fp { p, c: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        Fp { p, c: vec![1] }
    }

    pub fn x(p: u64) -> Self {
        Fp { p, c: vec![0, 1] }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lead(&self) -> u64 {
        *self.c.last().unwrap_or(&0)
    }

    pub fn add(&self, o: &Fp) -> Fp {
        let n = self.c.len().max(o.c.len());
        let v = (0..n)
            .map(|i| (self.c.get(i).unwrap_or(&0) + o.c.get(i).unwrap_or(&0)) % self.p)
            .collect();
        Fp::new(self.p, v)
    }

    pub fn sub(&self, o: &Fp) -> Fp {
        let p = self.p;
        let n = self.c.len().max(o.c.len());
        let v = (0..n)
            .map(|i| (self.c.get(i).unwrap_or(&0) + p - o.c.get(i).unwrap_or(&0)) % p)
            .collect();
        Fp::new(p, v)
    }

    pub fn mul(&self, o: &Fp) -> Fp {
        if self.is_zero() || o.is_zero() {
            return Fp::zero(self.p);
        }
        let p = self.p;
        let mut v = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                v[i + j] = (v[i + j] + a * b) % p;
            }
        }
        Fp::new(p, v)
    }

    pub fn scale(&self, a: u64) -> Fp {
        Fp::new(self.p, self.c.iter().map(|c| c * (a % self.p) % self.p).collect())
    }

    pub fn monic(&self) -> Fp {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv(self.lead(), self.p))
    }

    pub fn div_rem(&self, d: &Fp) -> (Fp, Fp) {
        assert!(!d.is_zero());
        let p = self.p;
        let dd = d.degree();
        let li = inv(d.lead(), p);
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Fp::zero(p), self.clone());
        }
        let mut q = vec![0u64; r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = r[i + dd] * li % p;
            if c == 0 {
                continue;
            }
            for (j, dc) in d.c.iter().enumerate() {
                r[i + j] = (r[i + j] + p - c * dc % p) % p;
            }
            q[i] = c;
        }
        r.truncate(dd);
        (Fp::new(p, q), Fp::new(p, r))
    }

    pub fn rem(&self, d: &Fp) -> Fp {
        self.div_rem(d).1
    }

    pub fn gcd(&self, o: &Fp) -> Fp {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*o = g` monic.
    pub fn xgcd(&self, o: &Fp) -> (Fp, Fp, Fp) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Fp::one(p), Fp::zero(p));
        let (mut t0, mut t1) = (Fp::zero(p), Fp::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        let li = inv(r0.lead(), p);
        (r0.scale(li), s0.scale(li), t0.scale(li))
    }

    pub fn derivative(&self) -> Fp {
        let p = self.p;
        Fp::new(p, self.c.iter().enumerate().skip(1).map(|(i, c)| (i as u64 % p) * c % p).collect())
    }

    pub fn pow_mod_poly(&self, mut e: u128, m: &Fp) -> Fp {
        let mut base = self.rem(m);
        let mut acc = Fp::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == 0
    }

    /// Distinct-degree factorisation of a monic squarefree polynomial.
    pub fn ddf(&self) -> Vec<(Fp, usize)> {
        let p = self.p;
        let mut out = Vec::new();
        let mut f = self.clone();
        let x = Fp::x(p);
        let mut h = x.clone();
        let mut d = 0;
        while f.degree() >= 2 * (d + 1) {
            d += 1;
            h = h.pow_mod_poly(p as u128, &f);
            let g = f.gcd(&h.sub(&x));
            if g.degree() > 0 {
                f = f.div_rem(&g).0;
                h = h.rem(&f);
                out.push((g, d));
            }
        }
        if f.degree() > 0 {
            let deg = f.degree();
            out.push((f, deg));
        }
        out
    }

    /// Equal-degree splitting (odd `p`) into monic irreducibles of degree `d`.
    pub fn edf<R: Rng>(&self, d: usize, rng: &mut R) -> Vec<Fp> {
        let p = self.p;
        let n = self.degree();
        if n == d {
            return vec![self.monic()];
        }
        loop {
            let a = Fp::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
            if a.degree() == 0 {
                continue;
            }
            // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p - 1)/2)
            let mut frob = a.clone();
            let mut norm = a.clone();
            for _ in 1..d {
                frob = frob.pow_mod_poly(p as u128, self);
                norm = norm.mul(&frob).rem(self);
            }
            let b = norm.pow_mod_poly(((p - 1) / 2) as u128, self).sub(&Fp::one(p));
            let g = self.gcd(&b);
            if g.degree() > 0 && g.degree() < n {
                let h = self.div_rem(&g).0;
                let mut out = g.edf(d, rng);
                out.extend(h.edf(d, rng));
                return out;
            }
        }
    }

    /// Monic irreducible factors of a squarefree polynomial.
    pub fn factor_squarefree<R: Rng>(&self, rng: &mut R) -> Vec<Fp> {
        let mut out = Vec::new();
        for (g, d) in self.monic().ddf() {
            out.extend(g.edf(d, rng));
        }
        out
    }

    pub fn to_int(&self) -> IntPoly {
        IntPoly::new(self.c.iter().map(|&c| Int::from(c)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn factors_mod_seven() {
        // t^4 - 1 over F_7: (t-1)(t+1)(t^2+1)
        let f = Fp::new(7, vec![6, 0, 0, 0, 1]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut fs = f.factor_squarefree(&mut rng);
        fs.sort_by_key(|g| (g.degree(), g.c.clone()));
        assert_eq!(fs.len(), 3);
        let prod = fs.iter().fold(Fp::one(7), |a, g| a.mul(g));
        assert_eq!(prod, f);
        assert_eq!(fs[2].degree(), 2);
    }

    #[test]
    fn xgcd_identity() {
        let a = Fp::new(5, vec![1, 2, 1]);
        let b = Fp::new(5, vec![3, 1]);
        let (g, s, t) = a.xgcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }
}
