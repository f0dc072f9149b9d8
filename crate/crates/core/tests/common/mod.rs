#![allow(dead_code)]

use diskknot::blanchfield::{consistency_w, lambda_to_gamma, presentation_matrix, LambdaMatrix};
use diskknot::linalg::{cokernel_orders, conjugate_matrix, det_laurent, inverse_laurent, IntMatrix, Matrix};
use diskknot::ring::scalar::frac_part;
use diskknot::ring::{Gamma, Int, Lambda, Rat, RationalFunction};
use diskknot::seifert::{Parity, SeifertData};
use num_traits::{One, Zero};

pub fn trefoil() -> SeifertData {
    SeifertData::from_i64(&[&[-1, 1], &[0, -1]], Parity::Odd)
}

pub fn disk() -> SeifertData {
    SeifertData::from_i64(&[&[1, -1], &[2, 1]], Parity::Even)
}

pub fn hopf_like() -> SeifertData {
    SeifertData::from_i64(&[&[0, 1], &[0, 0]], Parity::Odd)
}

/// `[M̄' | W]` for the dual module.
pub fn dual_relations(s: &SeifertData) -> (LambdaMatrix, LambdaMatrix) {
    let m = presentation_matrix(s).unwrap();
    let mbar_t = conjugate_matrix(&lambda_to_gamma(&m)).transpose().map(|p| p.to_integer().unwrap());
    (mbar_t, consistency_w(s).unwrap())
}

/// Invariant factors of `A / (t^k - 1) A` from the block-circulant matrix.
pub fn circulant_orders(s: &SeifertData, k: usize) -> Vec<Int> {
    let (mbar_t, w) = dual_relations(s);
    let rel = mbar_t.hstack(&w);
    let g = rel.rows();
    let mut cols: Vec<Vec<Int>> = Vec::new();
    for j in 0..rel.cols() {
        for shift in 0..k as i64 {
            let mut col = vec![Int::zero(); g * k];
            for i in 0..g {
                for (e, c) in rel.get(i, j).terms() {
                    let slot = (e + shift).rem_euclid(k as i64) as usize;
                    col[i * k + slot] += c;
                }
            }
            cols.push(col);
        }
    }
    let a = IntMatrix::from_fn(g * k, cols.len(), |r, c| cols[c][r].clone());
    cokernel_orders(&a)
}

fn eval_rf(f: &RationalFunction, x: &Rat) -> Rat {
    f.eval(x).expect("denominator prime to t^k - 1")
}

/// Coefficient of `t⁰` in `ℚ[t]/(t^k - 1)` for `k ≤ 2`, by averaging over
/// the `k`-th roots of unity.
pub fn root_projection(f: &RationalFunction, k: usize) -> Rat {
    assert!(k == 1 || k == 2);
    let one = Rat::one();
    let v = if k == 1 { eval_rf(f, &one) } else { (eval_rf(f, &one) + eval_rf(f, &-one.clone())) / Rat::from_integer(2.into()) };
    frac_part(&v)
}

fn small_laurent_vectors(g: usize) -> Vec<Vec<Lambda>> {
    let exps = [0i64, 1, 2];
    let per = exps.len();
    let total = 7usize.pow((g * per) as u32);
    (0..total)
        .map(|mut code| {
            (0..g)
                .map(|_| {
                    let mut terms = Vec::new();
                    for &e in &exps {
                        terms.push((e, Int::from((code % 7) as i64 - 3)));
                        code /= 7;
                    }
                    Lambda::from_terms(terms)
                })
                .collect()
        })
        .collect()
}

/// Every `u` with `W u ≡ rhs` modulo the image of `M̄'`, reached by
/// correction vectors `c` with exponents in `{0, 1, 2}` and coefficients
/// in `[-3, 3]`.
pub fn exhaustive_lifts(mbar_t: &LambdaMatrix, w: &LambdaMatrix, rhs: &[Lambda], limit: usize) -> Vec<Vec<Lambda>> {
    let g = w.rows();
    let wg = lambda_to_gamma(w);
    let det = det_laurent(&wg);
    let inv = inverse_laurent(&wg).unwrap();
    // adj(W) = det · W⁻¹ is integral
    let adj: Matrix<Gamma> = inv.map(|x| (x * &RationalFunction::from_laurent(&det)).laurent_membership(diskknot::ring::CoeffRing::Rat).unwrap());
    let probes = [Rat::from_integer(2.into()), Rat::from_integer(3.into()), Rat::from_integer(5.into())];
    let mut out = Vec::new();
    for c in small_laurent_vectors(g) {
        let mc = mbar_t.mul_vec(&c);
        let v: Vec<Gamma> = rhs.iter().zip(&mc).map(|(r, x)| (r - x).to_rational()).collect();
        let num = adj.mul_vec(&v);
        let quick = probes.iter().all(|x| {
            let d = det.eval(x);
            num.iter().all(|n| (n.eval(x) / &d).is_integer())
        });
        if !quick {
            continue;
        }
        let u: Option<Vec<Lambda>> = num.iter().map(|n| RationalFunction::new(n.clone(), det.clone()).as_lambda()).collect();
        if let Some(u) = u {
            out.push(u);
            if out.len() >= limit {
                break;
            }
        }
    }
    out
}

/// Pairing value `[X, Y]` from brute-force lifts, checking that all lift
/// choices agree; `None` when no lift was found.
pub fn brute_force_value(s: &SeifertData, x: &[Lambda], y: &[Lambda], m: i64, k: usize) -> Option<Rat> {
    let (mbar_t, w) = dual_relations(s);
    let m_lam = presentation_matrix(s).unwrap();
    let m_t_inv = inverse_laurent(&lambda_to_gamma(&m_lam).transpose()).unwrap();
    let mx: Vec<Lambda> = x.iter().map(|c| c.scale(&Int::from(m))).collect();
    let tk1 = Lambda::from_terms([(0, -Int::one()), (k as i64, Int::one())]);
    let tx: Vec<Lambda> = x.iter().map(|c| c * &tk1).collect();
    let bs = exhaustive_lifts(&mbar_t, &w, &mx, 4);
    let ss = exhaustive_lifts(&mbar_t, &w, &tx, 4);
    if bs.is_empty() || ss.is_empty() {
        return None;
    }
    let ybar: Vec<RationalFunction> = y.iter().map(|c| RationalFunction::from_laurent(&c.to_rational().conjugate())).collect();
    let v = m_t_inv.mul_vec(&ybar);
    let coef = RationalFunction::from_laurent(&tk1.to_rational()).scale(&Rat::new(Int::one(), Int::from(m)));
    let mut value: Option<Rat> = None;
    for u in &bs {
        for sv in &ss {
            let mut acc = RationalFunction::zero();
            for i in 0..u.len() {
                let zi = &(&coef * &RationalFunction::from_lambda(&u[i])) - &RationalFunction::from_lambda(&sv[i]);
                acc = &acc + &(&zi * &v[i]);
            }
            let r = root_projection(&acc, k);
            match &value {
                None => value = Some(r),
                Some(prev) => assert_eq!(prev, &r, "lift choices disagree"),
            }
        }
    }
    value
}

pub fn unit_vec(g: usize, i: usize, e: i64) -> Vec<Lambda> {
    (0..g).map(|j| if j == i { Lambda::monomial(Int::one(), e) } else { Lambda::zero() }).collect()
}
