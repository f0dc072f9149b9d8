//! The finite torsion module `A = coker [M̄' | W]` and its ℚ/ℤ-valued
//! linking pairing.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::blanchfield::{consistency_w, det_presentation, lambda_to_gamma, presentation_matrix, FunctionMatrix, LambdaMatrix};
use crate::error::{Error, Result};
use crate::io::{laurent_to_json, JsonRat};
use crate::linalg::{conjugate_matrix, inverse_laurent, poly_smith_diagonal, solve_int, IntMatrix, Matrix};
use crate::ring::poly::RatPoly;
use crate::ring::scalar::{factor_small, frac_part, inv_mod, lcm_int, Int, Rat};
use crate::ring::{Lambda, RationalFunction};
use crate::seifert::{derive_r, require_valid, SeifertData};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub k_max: u64,
    pub m_max: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { k_max: 24, m_max: 10_000 }
    }
}

/// Cooperative cancellation flag shared with long computations.
#[derive(Clone, Debug, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }

    fn check(&self) -> Result<()> {
        if self.is_cancelled() {
            Err(Error::Cancelled)
        } else {
            Ok(())
        }
    }
}

fn md(x: &Int, q: &Int) -> Int {
    x.mod_floor(q)
}

fn valuation(x: &Int, p: &Int) -> u32 {
    let mut x = x.clone();
    let mut v = 0;
    while !x.is_zero() && x.is_multiple_of(p) {
        x /= p;
        v += 1;
    }
    v
}

/// Smith form over `ℤ/p^e`: `U A V` diagonal with `U⁻¹` tracked; `orders[i]`
/// is the order of the `i`-th cokernel coordinate.
struct LocalSmith {
    u: IntMatrix,
    u_inv: IntMatrix,
    orders: Vec<Int>,
}

fn local_smith(a: &IntMatrix, p: &Int, q: &Int) -> LocalSmith {
    let (n, c) = (a.rows(), a.cols());
    let mut d = a.map(|x| md(x, q));
    let mut u = IntMatrix::identity(n);
    let mut u_inv = IntMatrix::identity(n);
    let mut orders = vec![q.clone(); n];
    for t in 0..n.min(c) {
        let mut best: Option<(usize, usize, u32)> = None;
        for i in t..n {
            for j in t..c {
                let x = d.get(i, j);
                if x.is_zero() {
                    continue;
                }
                let v = valuation(x, p);
                if best.is_none_or(|b| v < b.2) {
                    best = Some((i, j, v));
                }
            }
        }
        let Some((bi, bj, v)) = best else {
            break;
        };
        d.swap_rows(t, bi);
        u.swap_rows(t, bi);
        u_inv.swap_cols(t, bi);
        d.swap_cols(t, bj);
        let pv = p.pow(v);
        let unit = d.get(t, t) / &pv;
        let unit_inv = inv_mod(&unit, q).expect("unit modulo a prime power");
        d.scale_row(t, &unit_inv);
        u.scale_row(t, &unit_inv);
        u_inv.scale_col(t, &unit);
        for i in t + 1..n {
            let b = md(d.get(i, t), q) / &pv;
            if !b.is_zero() {
                d.add_row(i, t, &-&b);
                u.add_row(i, t, &-&b);
                u_inv.add_col(t, i, &b);
            }
        }
        for j in t + 1..c {
            let b = md(d.get(t, j), q) / &pv;
            if !b.is_zero() {
                d.add_col(j, t, &-&b);
            }
        }
        d = d.map(|x| md(x, q));
        u = u.map(|x| md(x, q));
        u_inv = u_inv.map(|x| md(x, q));
        orders[t] = pv;
    }
    LocalSmith { u, u_inv, orders }
}

/// The `p`-primary part `A / p^e A`, a module over `ℤ/p^e[t]/(P)`.
#[derive(Clone, Debug)]
struct PrimePart {
    p: Int,
    q: Int,
    /// Monic annihilator `P`, coefficients from degree 0.
    poly: Vec<Int>,
    t_inv: Vec<Int>,
    u: IntMatrix,
    gens: Vec<usize>,
    orders: Vec<Int>,
    lifts: Vec<Vec<Int>>,
}

impl PrimePart {
    fn deg(&self) -> usize {
        self.poly.len() - 1
    }

    fn reduce(&self, mut c: Vec<Int>) -> Vec<Int> {
        let d = self.deg();
        for i in (d..c.len()).rev() {
            let x = md(&c[i], &self.q);
            if !x.is_zero() {
                for j in 0..=d {
                    let y = &x * &self.poly[j];
                    c[i - d + j] -= y;
                }
            }
        }
        c.resize(d, Int::zero());
        c.iter().map(|x| md(x, &self.q)).collect()
    }

    fn mulmod(&self, a: &[Int], b: &[Int]) -> Vec<Int> {
        let mut c = vec![Int::zero(); (a.len() + b.len()).max(1)];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        self.reduce(c)
    }

    fn residue(&self, x: &Lambda) -> Vec<Int> {
        let d = self.deg();
        let hi = x.max_exp().unwrap_or(0).max(0) as usize;
        let mut pos = vec![Int::zero(); hi + 1];
        for (e, c) in x.terms() {
            if e >= 0 {
                pos[e as usize] = c.clone();
            }
        }
        let mut out = self.reduce(pos);
        let lo = x.min_exp().unwrap_or(0);
        if lo < 0 {
            let mut pw = self.t_inv.clone();
            for e in (lo..0).rev() {
                let c = x.coeff(e);
                if !c.is_zero() {
                    for j in 0..d {
                        out[j] += &c * &pw[j];
                    }
                }
                pw = self.mulmod(&pw, &self.t_inv);
            }
            out = out.iter().map(|v| md(v, &self.q)).collect();
        }
        out
    }

    fn residue_vec(&self, x: &[Lambda]) -> Vec<Int> {
        x.iter().flat_map(|c| self.residue(c)).collect()
    }

    fn times_t(&self, v: &[Int]) -> Vec<Int> {
        let d = self.deg();
        v.chunks(d)
            .flat_map(|comp| {
                let mut c = vec![Int::zero()];
                c.extend_from_slice(comp);
                self.reduce(c)
            })
            .collect()
    }

    fn coordinates(&self, v: &[Int]) -> Vec<Int> {
        let w = self.u.mul_vec(v);
        self.gens.iter().zip(&self.orders).map(|(&i, o)| md(&w[i], o)).collect()
    }
}

/// Extreme coefficients of `f` made prime to `p` by stripping `p`-divisible
/// runs from both ends.
fn strip_p(f: &[Int], p: &Int) -> Vec<Int> {
    let lo = f.iter().position(|c| !c.is_multiple_of(p));
    let hi = f.iter().rposition(|c| !c.is_multiple_of(p));
    match (lo, hi) {
        (Some(lo), Some(hi)) => f[lo..=hi].to_vec(),
        _ => vec![Int::one()],
    }
}

fn poly_mul(a: &[Int], b: &[Int]) -> Vec<Int> {
    let mut c = vec![Int::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    c
}

fn build_part(g_mat: &LambdaMatrix, delta: &[Int], p: &Int, e: u32) -> PrimePart {
    let q = p.pow(e);
    let units = !delta[0].is_multiple_of(p) && !delta[delta.len() - 1].is_multiple_of(p);
    let ann = if units {
        delta.to_vec()
    } else {
        let f = strip_p(delta, p);
        (1..e).fold(f.clone(), |acc, _| poly_mul(&acc, &f))
    };
    let lead_inv = inv_mod(&md(ann.last().unwrap(), &q), &q).expect("unit leading coefficient");
    let poly: Vec<Int> = ann.iter().map(|c| md(&(c * &lead_inv), &q)).collect();
    let d = poly.len() - 1;
    let c0_inv = inv_mod(&poly[0], &q).unwrap_or_else(Int::one);
    let t_inv: Vec<Int> = (1..=d).map(|j| md(&(-&c0_inv * &poly[j]), &q)).collect();
    let mut part = PrimePart {
        p: p.clone(),
        q: q.clone(),
        poly,
        t_inv,
        u: IntMatrix::zeros(0, 0),
        gens: Vec::new(),
        orders: Vec::new(),
        lifts: Vec::new(),
    };
    let g = g_mat.rows();
    let n = g * d;
    if n == 0 {
        return part;
    }
    let mut cols: Vec<Vec<Int>> = Vec::new();
    for j in 0..g_mat.cols() {
        let mut v = part.residue_vec(&g_mat.col(j));
        for _ in 0..d {
            cols.push(v.clone());
            v = part.times_t(&v);
        }
    }
    let rel = IntMatrix::from_fn(n, cols.len(), |i, j| cols[j][i].clone());
    let ls = local_smith(&rel, p, &q);
    for i in 0..n {
        if !ls.orders[i].is_one() {
            part.gens.push(i);
            part.orders.push(ls.orders[i].clone());
            part.lifts.push(ls.u_inv.col(i));
        }
    }
    part.u = ls.u;
    part
}

/// A finite `ℤ[t, t⁻¹]`-module given by cyclic generators, their orders and
/// the matrix of `t` (column `j` holds the coordinates of `t g_j`).
#[derive(Clone, Debug)]
pub struct FiniteTorsionModule {
    pub orders: Vec<Int>,
    /// Lifts of the generators to `Λ^g`.
    pub generators: Vec<Vec<Lambda>>,
    pub t_action: IntMatrix,
    /// Exponent of the group.
    pub m: Int,
    /// Order of `t`.
    pub k: u64,
    parts: Vec<PrimePart>,
}

impl PartialEq for FiniteTorsionModule {
    fn eq(&self, o: &Self) -> bool {
        self.orders == o.orders && self.generators == o.generators && self.t_action == o.t_action
    }
}

impl FiniteTorsionModule {
    pub fn is_trivial(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn order(&self) -> Int {
        self.orders.iter().product()
    }

    pub fn num_generators(&self) -> usize {
        self.orders.len()
    }

    /// Coordinates of the class of `x ∈ Λ^g`.
    pub fn coordinates(&self, x: &[Lambda]) -> Vec<Int> {
        self.parts.iter().flat_map(|p| p.coordinates(&p.residue_vec(x))).collect()
    }

    pub fn reduce(&self, v: &[Int]) -> Vec<Int> {
        v.iter().zip(&self.orders).map(|(x, o)| md(x, o)).collect()
    }

    pub fn apply_t(&self, v: &[Int]) -> Vec<Int> {
        self.reduce(&self.t_action.mul_vec(v))
    }

    /// The lift of `Σ v_i g_i`.
    pub fn lift(&self, v: &[Int]) -> Vec<Lambda> {
        let g = self.generators.first().map_or(0, |x| x.len());
        let mut out = vec![Lambda::zero(); g];
        for (c, gen) in v.iter().zip(&self.generators) {
            for (o, x) in out.iter_mut().zip(gen) {
                *o = &*o + &x.scale(c);
            }
        }
        out
    }

    /// Whether `t - 1` is invertible on every primary part.
    pub fn t_minus_one_invertible(&self) -> bool {
        let mut off = 0;
        self.parts.iter().all(|part| {
            let r = part.gens.len();
            let p = &part.p;
            let mat = Matrix::from_fn(r, r, |i, j| {
                let mut x = self.t_action.get(off + i, off + j).clone();
                if i == j {
                    x -= 1;
                }
                Rat::from_integer(md(&x, p))
            });
            off += r;
            let det = mat.det();
            !det.is_zero() && !det.to_integer().is_multiple_of(p)
        })
    }

    /// All elements as coordinate vectors.
    pub fn elements(&self) -> Vec<Vec<Int>> {
        let mut out = vec![Vec::new()];
        for o in &self.orders {
            let n = o.to_u64().unwrap_or(0);
            out = out.into_iter().flat_map(|v| (0..n).map(move |c| [v.clone(), vec![Int::from(c)]].concat())).collect();
        }
        out
    }
}

fn t_order(t: &IntMatrix, orders: &[Int], k_max: u64) -> Option<u64> {
    let n = orders.len();
    let reduce = |m: IntMatrix| Matrix::from_fn(n, n, |i, j| md(m.get(i, j), &orders[i]));
    let id = reduce(IntMatrix::identity(n));
    let mut pw = reduce(t.clone());
    for k in 1..=k_max {
        if pw == id {
            return Some(k);
        }
        pw = reduce(t.mul(&pw));
    }
    None
}

/// Columns shifted to polynomials, for the rank check over `ℚ[t]`.
fn rational_module_is_zero(g_mat: &LambdaMatrix) -> bool {
    let g = g_mat.rows();
    let shifted = Matrix::from_fn(g, g_mat.cols(), |i, j| {
        let low = g_mat.col(j).iter().filter_map(|p| p.min_exp()).min().unwrap_or(0);
        g_mat.get(i, j).to_rational().shift(-low).to_poly().1
    });
    let diag = poly_smith_diagonal(&shifted);
    diag.len() == g && diag.iter().all(|d| d.coeffs().iter().filter(|c| !c.is_zero()).count() == 1)
}

fn dual_relations(s: &SeifertData) -> Result<(LambdaMatrix, LambdaMatrix, LambdaMatrix)> {
    let m = presentation_matrix(s)?;
    let w = consistency_w(s)?;
    let mbar_t = conjugate_matrix(&lambda_to_gamma(&m)).transpose().map(|p| p.to_integer().expect("integral"));
    Ok((m, mbar_t, w))
}

pub fn torsion_module(s: &SeifertData, bounds: Bounds, cancel: &CancelToken) -> Result<FiniteTorsionModule> {
    require_valid(s)?;
    if !s.is_integral() {
        return Err(Error::InvalidCandidate("torsion module needs an integral matrix".into()));
    }
    let (m, mbar_t, w) = dual_relations(s)?;
    let g_mat = mbar_t.hstack(&w);
    if !rational_module_is_zero(&g_mat) {
        return Err(Error::InfiniteModule);
    }
    let d = derive_r(s).det().to_integer().abs();
    let d64 = d.to_u64().ok_or_else(|| Error::BoundExceeded(format!("det R = {d} is too large to factor")))?;
    let delta = det_presentation(&m).conjugate();
    let (_, dp) = delta.to_poly();
    let delta: Vec<Int> = dp.coeffs().iter().map(|c| c.to_integer()).collect();
    let mut parts = Vec::new();
    for (p, e) in factor_small(d64) {
        cancel.check()?;
        let part = build_part(&g_mat, &delta, &Int::from(p), e);
        if !part.gens.is_empty() {
            parts.push(part);
        }
    }
    let orders: Vec<Int> = parts.iter().flat_map(|p| p.orders.clone()).collect();
    let n = orders.len();
    let mut generators = Vec::with_capacity(n);
    for part in &parts {
        // CRT idempotent: 1 mod q, 0 mod d / q
        let rest = &d / &part.q;
        let idem = &rest * inv_mod(&rest, &part.q).unwrap_or_else(Int::one);
        let dg = part.deg();
        for lift in &part.lifts {
            generators.push(
                lift.chunks(dg)
                    .map(|comp| Lambda::from_slice(0, &comp.iter().map(|c| md(&(c * &idem), &d)).collect::<Vec<_>>()))
                    .collect::<Vec<_>>(),
            );
        }
    }
    let mut t_action = IntMatrix::zeros(n, n);
    let mut off = 0;
    for part in &parts {
        for (j, lift) in part.lifts.iter().enumerate() {
            let c = part.coordinates(&part.times_t(lift));
            for (i, x) in c.into_iter().enumerate() {
                t_action.set(off + i, off + j, x);
            }
        }
        off += part.gens.len();
    }
    let m_exp = orders.iter().fold(Int::one(), |a, o| lcm_int(&a, o));
    if m_exp > Int::from(bounds.m_max) {
        return Err(Error::BoundExceeded(format!("exponent {m_exp} exceeds m_max = {}", bounds.m_max)));
    }
    let k = t_order(&t_action, &orders, bounds.k_max)
        .ok_or_else(|| Error::BoundExceeded(format!("order of t exceeds k_max = {}", bounds.k_max)))?;
    let module = FiniteTorsionModule { orders, generators, t_action, m: m_exp, k, parts };
    if !module.t_minus_one_invertible() {
        return Err(Error::IntegralityViolation("t - 1 is not invertible on the torsion module".into()));
    }
    Ok(module)
}

/// Values `[g_i, g_j] ∈ [0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FLPairingTable {
    pub values: Vec<Vec<Rat>>,
}

impl FLPairingTable {
    /// `[x, y]` for coordinate vectors, by bilinearity.
    pub fn evaluate(&self, x: &[Int], y: &[Int]) -> Rat {
        let mut acc = Rat::zero();
        for (i, a) in x.iter().enumerate() {
            for (j, b) in y.iter().enumerate() {
                acc += &self.values[i][j] * Rat::from_integer(a * b);
            }
        }
        frac_part(&acc)
    }
}

fn random_lambda(rng: &mut ChaCha8Rng) -> Lambda {
    Lambda::from_terms((-1..=1).map(|e| (e, Int::from(rng.gen_range(-2i64..=2)))))
}

fn random_vec(rng: &mut ChaCha8Rng, g: usize) -> Vec<Lambda> {
    (0..g).map(|_| random_lambda(rng)).collect()
}

fn mat_vec(a: &LambdaMatrix, v: &[Lambda]) -> Vec<Lambda> {
    a.mul_vec(v)
}

fn add_vec(a: &[Lambda], b: &[Lambda]) -> Vec<Lambda> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `(num / den)` reduced into `ℚ[t]/(t^k - 1)`, coefficient of `t⁰`, mod ℤ.
pub fn project(f: &RationalFunction, k: u64) -> Result<Rat> {
    let k = k as usize;
    let modulus = {
        let mut c = vec![Rat::zero(); k + 1];
        c[0] = -Rat::one();
        c[k] = Rat::one();
        RatPoly::new(c)
    };
    let (_, den) = f.den().to_poly();
    let (gcd, s, _) = den.xgcd(&modulus);
    if gcd.degree() != Some(0) {
        return Err(Error::LiftFailure("pairing denominator meets t^k - 1".into()));
    }
    let num = RatPoly::new(f.num().fold_mod(k as i64));
    let r = (&num * &s).rem(&modulus);
    Ok(frac_part(&r.coeff(0)))
}

/// Solver for `W u + M̄' c = rhs` and evaluator of the pairing.
pub struct PairingEngine {
    m: LambdaMatrix,
    g_mat: LambdaMatrix,
    v_inv: FunctionMatrix,
    max_extra: i64,
}

impl PairingEngine {
    pub fn new(s: &SeifertData, k: u64) -> Result<Self> {
        let (m, mbar_t, w) = dual_relations(s)?;
        let g_mat = w.hstack(&mbar_t);
        let v_inv = inverse_laurent(&lambda_to_gamma(&m).transpose()).ok_or(Error::DegenerateForm)?;
        let max_extra = det_presentation(&m).span() + k as i64 + 2;
        Ok(PairingEngine { m, g_mat, v_inv, max_extra })
    }

    fn dim(&self) -> usize {
        self.m.rows()
    }

    /// First block `u` of a solution of `[W | M̄'] (u, c) = rhs` over `Λ`.
    pub fn solve(&self, rhs: &[Lambda], cancel: &CancelToken) -> Result<Vec<Lambda>> {
        let g = self.dim();
        if rhs.iter().all(|x| x.is_zero()) {
            return Ok(vec![Lambda::zero(); g]);
        }
        let ents: Vec<&Lambda> = self.g_mat.entries().filter(|x| !x.is_zero()).collect();
        let gmin = ents.iter().filter_map(|x| x.min_exp()).min().unwrap_or(0);
        let gmax = ents.iter().filter_map(|x| x.max_exp()).max().unwrap_or(0);
        let rmin = rhs.iter().filter_map(|x| x.min_exp()).min().unwrap_or(0);
        let rmax = rhs.iter().filter_map(|x| x.max_exp()).max().unwrap_or(0);
        let nc = self.g_mat.cols();
        for extra in 0..=self.max_extra {
            cancel.check()?;
            let lo = rmin - gmax - extra;
            let hi = rmax - gmin + extra;
            let len = (hi - lo + 1) as usize;
            let elo = lo + gmin;
            let ehi = hi + gmax;
            let elen = (ehi - elo + 1) as usize;
            let mut a = IntMatrix::zeros(g * elen, nc * len);
            for i in 0..g {
                for j in 0..nc {
                    for (e, c) in self.g_mat.get(i, j).terms() {
                        for x in 0..len {
                            let row = i * elen + (e + lo + x as i64 - elo) as usize;
                            let col = j * len + x;
                            a.set(row, col, a.get(row, col) + c);
                        }
                    }
                }
            }
            let b: Vec<Int> = (0..g * elen).map(|r| rhs[r / elen].coeff(elo + (r % elen) as i64)).collect();
            if let Some(sol) = solve_int(&a, &b) {
                return Ok((0..g).map(|j| Lambda::from_slice(lo, &sol[j * len..(j + 1) * len])).collect());
            }
        }
        Err(Error::LiftFailure(format!("no Λ-solution within {} extra degrees", self.max_extra)))
    }

    /// `[x, y]` for lifts `x, y ∈ Λ^g`; `rng` perturbs every choice.
    pub fn pair(
        &self,
        x: &[Lambda],
        y: &[Lambda],
        m: &Int,
        k: u64,
        mut rng: Option<&mut ChaCha8Rng>,
        cancel: &CancelToken,
    ) -> Result<Rat> {
        let g = self.dim();
        let (mut x, mut y) = (x.to_vec(), y.to_vec());
        if let Some(r) = rng.as_deref_mut() {
            x = add_vec(&x, &mat_vec(&self.g_mat, &random_vec(r, 2 * g)));
            y = add_vec(&y, &mat_vec(&self.g_mat, &random_vec(r, 2 * g)));
        }
        let tk1 = Lambda::from_terms([(0, -Int::one()), (k as i64, Int::one())]);
        let mut u = self.solve(&x.iter().map(|c| c.scale(m)).collect::<Vec<_>>(), cancel)?;
        let mut s = self.solve(&x.iter().map(|c| c * &tk1).collect::<Vec<_>>(), cancel)?;
        if let Some(r) = rng.as_deref_mut() {
            u = add_vec(&u, &mat_vec(&self.m, &random_vec(r, g)));
            s = add_vec(&s, &mat_vec(&self.m, &random_vec(r, g)));
        }
        let coef = tk1.to_rational().scale(&Rat::new(Int::one(), m.clone()));
        let z: Vec<RationalFunction> = s
            .iter()
            .zip(&u)
            .map(|(si, ui)| RationalFunction::from_laurent(&(&coef * &ui.to_rational() - si.to_rational())))
            .collect();
        let ybar: Vec<RationalFunction> = y.iter().map(|c| RationalFunction::from_laurent(&c.to_rational().conjugate())).collect();
        let v = self.v_inv.mul_vec(&ybar);
        let val = z.iter().zip(&v).fold(RationalFunction::zero(), |acc, (a, b)| &acc + &(a * b));
        project(&val, k)
    }
}

fn table_with(
    s: &SeifertData,
    module: &FiniteTorsionModule,
    m: &Int,
    k: u64,
    mut rng: Option<&mut ChaCha8Rng>,
    cancel: &CancelToken,
) -> Result<FLPairingTable> {
    let n = module.num_generators();
    if n == 0 {
        return Ok(FLPairingTable { values: Vec::new() });
    }
    let engine = PairingEngine::new(s, k)?;
    let mut values = vec![vec![Rat::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            values[i][j] = engine.pair(&module.generators[i], &module.generators[j], m, k, rng.as_deref_mut(), cancel)?;
        }
    }
    Ok(FLPairingTable { values })
}

pub fn fl_pairing(s: &SeifertData, module: &FiniteTorsionModule) -> Result<FLPairingTable> {
    fl_pairing_with_cancel(s, module, &CancelToken::new())
}

pub fn fl_pairing_with_cancel(s: &SeifertData, module: &FiniteTorsionModule, cancel: &CancelToken) -> Result<FLPairingTable> {
    table_with(s, module, &module.m, module.k, None, cancel)
}

/// Recomputes the table with `m' = a m` and `k' = b k`.
pub fn mk_independence_check(s: &SeifertData, module: &FiniteTorsionModule, a: u64, b: u64) -> Result<bool> {
    let cancel = CancelToken::new();
    let base = fl_pairing(s, module)?;
    let other = table_with(s, module, &(&module.m * Int::from(a)), module.k * b, None, &cancel)?;
    Ok(base == other)
}

/// Recomputes the table `trials` times with randomly perturbed lifts.
pub fn lift_independence_check(s: &SeifertData, module: &FiniteTorsionModule, trials: usize, seed: u64) -> Result<bool> {
    let cancel = CancelToken::new();
    let base = fl_pairing(s, module)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        if table_with(s, module, &module.m, module.k, Some(&mut rng), &cancel)? != base {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Searches for a group isomorphism commuting with `t` and preserving the
/// pairing; returns the images of the generators of `a`.
pub fn find_isometry(
    a: &FiniteTorsionModule,
    ta: &FLPairingTable,
    b: &FiniteTorsionModule,
    tb: &FLPairingTable,
    limit: usize,
) -> Result<Option<Vec<Vec<Int>>>> {
    if a.order() != b.order() {
        return Ok(None);
    }
    let elems = b.elements();
    let n = a.num_generators();
    let total = elems.len().checked_pow(n as u32).unwrap_or(usize::MAX);
    if total > limit {
        return Err(Error::BoundExceeded(format!("isometry search over {total} maps")));
    }
    let mut idx = vec![0usize; n];
    loop {
        let imgs: Vec<Vec<Int>> = idx.iter().map(|&i| elems[i].clone()).collect();
        if is_isometry(a, ta, b, tb, &imgs) {
            return Ok(Some(imgs));
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(None);
            }
            idx[pos] += 1;
            if idx[pos] < elems.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn image(b: &FiniteTorsionModule, imgs: &[Vec<Int>], v: &[Int]) -> Vec<Int> {
    let mut out = vec![Int::zero(); b.num_generators()];
    for (c, img) in v.iter().zip(imgs) {
        for (o, x) in out.iter_mut().zip(img) {
            *o += c * x;
        }
    }
    b.reduce(&out)
}

fn is_isometry(a: &FiniteTorsionModule, ta: &FLPairingTable, b: &FiniteTorsionModule, tb: &FLPairingTable, imgs: &[Vec<Int>]) -> bool {
    let n = a.num_generators();
    // well defined: order_i * img_i = 0
    for (o, img) in a.orders.iter().zip(imgs) {
        if b.reduce(&img.iter().map(|x| x * o).collect::<Vec<_>>()).iter().any(|x| !x.is_zero()) {
            return false;
        }
    }
    // injective, hence bijective
    let mut seen = std::collections::HashSet::new();
    for v in a.elements() {
        if !seen.insert(image(b, imgs, &v)) {
            return false;
        }
    }
    for j in 0..n {
        let tj = a.apply_t(&a.t_action.col(j));
        let lhs = image(b, imgs, &tj);
        let rhs = b.apply_t(&imgs[j]);
        if lhs != rhs {
            return false;
        }
    }
    (0..n).all(|i| (0..n).all(|j| ta.values[i][j] == tb.evaluate(&imgs[i], &imgs[j])))
}

/// Serialised module: generator orders, `t`-matrix and lifts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionModuleRecord {
    pub orders: Vec<String>,
    pub t_action: Vec<Vec<String>>,
    pub m_exponent: String,
    pub t_order: u64,
    pub generators: Vec<Vec<std::collections::BTreeMap<String, String>>>,
}

impl From<&FiniteTorsionModule> for TorsionModuleRecord {
    fn from(t: &FiniteTorsionModule) -> Self {
        TorsionModuleRecord {
            orders: t.orders.iter().map(Int::to_string).collect(),
            t_action: t.t_action.to_rows().iter().map(|r| r.iter().map(Int::to_string).collect()).collect(),
            m_exponent: t.m.to_string(),
            t_order: t.k,
            generators: t.generators.iter().map(|g| g.iter().map(laurent_to_json).collect()).collect(),
        }
    }
}

impl Serialize for FLPairingTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<JsonRat>> = self.values.iter().map(|r| r.iter().cloned().map(JsonRat).collect()).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for FLPairingTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<JsonRat>> = Vec::deserialize(d)?;
        Ok(FLPairingTable { values: rows.into_iter().map(|r| r.into_iter().map(|x| x.0).collect()).collect() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Gamma;
    use crate::ring::scalar::rat;
    use crate::seifert::Parity;

    fn disk() -> SeifertData {
        SeifertData::from_i64(&[&[1, -1], &[2, 1]], Parity::Even)
    }

    #[test]
    fn local_smith_small() {
        let a = IntMatrix::from_i64(&[&[3, 0], &[0, 1]]);
        let ls = local_smith(&a, &Int::from(3), &Int::from(9));
        let mut o: Vec<Int> = ls.orders.clone();
        o.sort();
        assert_eq!(o, vec![Int::from(1), Int::from(3)]);
        assert_eq!(ls.u.mul(&ls.u_inv).map(|x| md(x, &Int::from(9))), IntMatrix::identity(2));
    }

    #[test]
    fn unimodular_inputs_are_trivial() {
        for s in [
            SeifertData::from_i64(&[&[-1, 1], &[0, -1]], Parity::Odd),
            SeifertData::from_i64(&[&[0, 1], &[0, 0]], Parity::Odd),
        ] {
            let t = torsion_module(&s, Bounds::default(), &CancelToken::new()).unwrap();
            assert!(t.is_trivial());
            assert_eq!((t.m.clone(), t.k), (Int::one(), 1));
            assert!(fl_pairing(&s, &t).unwrap().values.is_empty());
            assert!(mk_independence_check(&s, &t, 2, 3).unwrap());
        }
    }

    #[test]
    fn disk_module() {
        let t = torsion_module(&disk(), Bounds::default(), &CancelToken::new()).unwrap();
        assert_eq!(t.orders, vec![Int::from(3)]);
        assert_eq!(t.m, Int::from(3));
        assert_eq!(t.k, 2);
        assert_eq!(t.t_action, IntMatrix::from_i64(&[&[2]]));
        assert!(t.t_minus_one_invertible());
        let g = &t.generators[0];
        assert_eq!(t.coordinates(g), vec![Int::one()]);
    }

    #[test]
    fn disk_pairing() {
        let s = disk();
        let t = torsion_module(&s, Bounds::default(), &CancelToken::new()).unwrap();
        let table = fl_pairing(&s, &t).unwrap();
        let v = &table.values[0][0];
        assert!(!v.is_zero());
        assert_eq!(&(v * Rat::from_integer(Int::from(3))).fract(), &Rat::zero());
        for (a, b) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            assert!(mk_independence_check(&s, &t, a, b).unwrap());
        }
        assert!(lift_independence_check(&s, &t, 10, 7).unwrap());
        let _ = rat(1, 3);
    }

    #[test]
    fn cancellation() {
        let c = CancelToken::new();
        c.cancel();
        assert_eq!(torsion_module(&disk(), Bounds::default(), &c).unwrap_err(), Error::Cancelled);
    }

    #[test]
    fn projection() {
        let f = RationalFunction::new(Gamma::one(), Gamma::from_i64s(0, &[3]));
        assert_eq!(project(&f, 2).unwrap(), rat(1, 3));
        // 1/(t+2) in Q[t]/(t^2-1): inverse is (2 - t)/3
        let f = RationalFunction::new(Gamma::one(), Gamma::from_i64s(0, &[2, 1]));
        assert_eq!(project(&f, 2).unwrap(), rat(2, 3));
        let f = RationalFunction::new(Gamma::one(), Gamma::from_i64s(0, &[-1, 1]));
        assert!(project(&f, 2).is_err());
    }
}
