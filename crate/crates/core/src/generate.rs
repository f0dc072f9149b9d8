//! Seeded random Seifert data, moves and combination blocks.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cobordism::{block_sum, ComboBlocks};
use crate::linalg::RatMatrix;
use crate::ring::scalar::{CoeffRing, Int, Rat};
use crate::seifert::{derive_r, validate, Parity, SeifertData};
use crate::sequiv::{apply_move, Move};

pub const DEFAULT_SEED: u64 = 0x5eed;

pub struct Generator {
    rng: ChaCha8Rng,
    pub entry_bound: i64,
    pub max_dim: usize,
}

impl Default for Generator {
    fn default() -> Self {
        Self::new(DEFAULT_SEED)
    }
}

fn r(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        Generator { rng: ChaCha8Rng::seed_from_u64(seed), entry_bound: 3, max_dim: 6 }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn parity(&mut self) -> Parity {
        if self.rng.gen_bool(0.5) {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn entry(&mut self) -> Rat {
        r(self.rng.gen_range(-self.entry_bound..=self.entry_bound))
    }

    /// Small rational with denominator at most 3.
    pub fn small_rat(&mut self) -> Rat {
        Rat::new(Int::from(self.rng.gen_range(-3i64..=3)), Int::from(self.rng.gen_range(1i64..=3)))
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> RatMatrix {
        let data = (0..rows * cols).map(|_| self.entry()).collect();
        RatMatrix::new(rows, cols, data)
    }

    pub fn rat_vec(&mut self, n: usize) -> Vec<Rat> {
        (0..n).map(|_| self.small_rat()).collect()
    }

    /// Unconstrained integral candidate.
    pub fn candidate(&mut self, dim: usize, parity: Parity) -> SeifertData {
        SeifertData { theta: self.matrix(dim, dim), parity }
    }

    /// A valid `2 × 2` block by rejection sampling.
    pub fn valid_block(&mut self, parity: Parity) -> SeifertData {
        loop {
            let s = self.candidate(2, parity);
            if validate(&s).verdict {
                return s;
            }
        }
    }

    /// Product of elementary integral moves, entries kept small.
    pub fn unimodular(&mut self, n: usize) -> RatMatrix {
        let mut p = RatMatrix::identity(n);
        if n < 2 {
            return p;
        }
        for _ in 0..self.rng.gen_range(1..=3) {
            let i = self.rng.gen_range(0..n);
            let j = (i + self.rng.gen_range(1..n)) % n;
            let c = r(if self.rng.gen_bool(0.5) { 1 } else { -1 });
            p.add_col(j, i, &c);
        }
        if self.rng.gen_bool(0.3) {
            let i = self.rng.gen_range(0..n);
            p.scale_col(i, &r(-1));
        }
        p
    }

    pub fn rational_invertible(&mut self, n: usize) -> RatMatrix {
        loop {
            let data = (0..n * n).map(|_| self.small_rat()).collect();
            let p = RatMatrix::new(n, n, data);
            if !p.det().is_zero() {
                return p;
            }
        }
    }

    /// Product of one to three rational shears and a scaling; these generate
    /// `GL(n, ℚ)` and keep entries from growing along long move chains.
    pub fn rational_elementary(&mut self, n: usize) -> RatMatrix {
        let mut p = RatMatrix::identity(n);
        if n >= 2 {
            for _ in 0..self.rng.gen_range(1..=3) {
                let i = self.rng.gen_range(0..n);
                let j = (i + self.rng.gen_range(1..n)) % n;
                let c = self.small_rat();
                p.add_col(j, i, &c);
            }
        }
        let mut c = self.small_rat();
        while c.is_zero() {
            c = self.small_rat();
        }
        let i = self.rng.gen_range(0..n.max(1));
        if n > 0 {
            p.scale_col(i, &c);
        }
        p
    }

    /// Valid candidate built from `2 × 2` blocks by block sums, surgery
    /// enlargements and integral congruences, entries in the bound.
    pub fn valid(&mut self, parity: Parity) -> SeifertData {
        loop {
            let blocks = self.rng.gen_range(1..=self.max_dim / 2);
            let mut s = self.valid_block(parity);
            for _ in 1..blocks {
                let b = self.valid_block(parity);
                s = block_sum(&s, &b).expect("same parity");
            }
            if s.dim() + 2 <= self.max_dim && self.rng.gen_bool(0.3) {
                let m = self.integral_surgery(s.dim());
                if let Ok(e) = apply_move(&s, &m) {
                    if validate(&e).verdict && self.in_bound(&e.theta) {
                        s = e;
                    }
                }
            }
            if self.rng.gen_bool(0.5) {
                let p = self.unimodular(s.dim());
                let c = SeifertData { theta: s.theta.congruence(&p), parity };
                if self.in_bound(&c.theta) {
                    s = c;
                }
            }
            if validate(&s).verdict {
                return s;
            }
        }
    }

    /// Valid candidate with `det θ ≠ 0`.
    pub fn valid_nonsingular(&mut self, parity: Parity) -> SeifertData {
        loop {
            let s = self.valid(parity);
            if !s.theta.det().is_zero() {
                return s;
            }
        }
    }

    pub fn in_bound(&self, m: &RatMatrix) -> bool {
        let b = r(self.entry_bound);
        m.entries().all(|x| x.is_integer() && *x <= b && *x >= -&b)
    }

    /// Integral surgery enlargement of a `k × k` matrix.
    pub fn integral_surgery(&mut self, k: usize) -> Move {
        let small = |g: &mut Self| r(g.rng.gen_range(-1i64..=1));
        let eta = (0..k).map(|_| small(self)).collect();
        let xi = (0..k).map(|_| small(self)).collect();
        let nz = r(if self.rng.gen_bool(0.5) { 1 } else { -1 });
        let (x, x_prime) = if self.rng.gen_bool(0.5) { (nz, Rat::zero()) } else { (Rat::zero(), nz) };
        Move::SurgeryEnlarge { eta, xi, x, x_prime, y: small(self) }
    }

    /// Rational surgery enlargement.
    pub fn surgery(&mut self, k: usize) -> Move {
        let eta = self.rat_vec(k);
        let xi = self.rat_vec(k);
        let mut nz = self.small_rat();
        while nz.is_zero() {
            nz = self.small_rat();
        }
        let (x, x_prime) = if self.rng.gen_bool(0.5) { (nz, Rat::zero()) } else { (Rat::zero(), nz) };
        Move::SurgeryEnlarge { eta, xi, x, x_prime, y: self.small_rat() }
    }

    /// A move applicable to `s`, keeping the dimension at most `max_dim + 2`.
    pub fn random_move(&mut self, s: &SeifertData) -> Move {
        let k = s.dim();
        let mut kinds = vec![0, 1];
        if k + 2 <= self.max_dim + 2 {
            kinds.extend([2, 3, 4]);
        }
        if apply_move(s, &Move::RowReduce).is_ok() {
            kinds.extend([5, 5]);
        }
        if apply_move(s, &Move::ColReduce).is_ok() {
            kinds.extend([6, 6]);
        }
        match *kinds.choose(&mut self.rng).expect("non-empty") {
            0 => Move::Congruence { p: self.rational_elementary(k), ring: CoeffRing::Rat },
            1 => Move::Congruence { p: self.unimodular(k), ring: CoeffRing::Int },
            2 => Move::RowEnlarge { x: self.small_rat(), u: self.rat_vec(k), v: self.rat_vec(k) },
            3 => Move::ColEnlarge { x: self.small_rat(), u: self.rat_vec(k), v: self.rat_vec(k) },
            4 => self.surgery(k),
            5 => Move::RowReduce,
            _ => Move::ColReduce,
        }
    }

    /// Blocks `X1..X7` for the combination matrix with given sizes.
    pub fn combo_blocks(&mut self, r0: usize, r1: usize, s: usize) -> ComboBlocks {
        let shapes = [(r0, s), (r1, s), (s, s), (s, r0), (s, r1), (s, s), (s, s)];
        ComboBlocks { x: shapes.map(|(a, b)| self.matrix(a, b)) }
    }

    /// Odd-dimensional candidate with `n` odd, or `n` even and `det R` odd.
    pub fn odd_dimensional_candidate(&mut self) -> SeifertData {
        loop {
            let dim = [1, 3, 5][self.rng.gen_range(0..3)];
            let parity = self.parity();
            let s = self.candidate(dim, parity);
            let det = derive_r(&s).det();
            let odd_det = det.is_integer() && !(det.to_integer() % 2i32).is_zero();
            if parity == Parity::Odd || odd_det {
                return s;
            }
        }
    }
}
