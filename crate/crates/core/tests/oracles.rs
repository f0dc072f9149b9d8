mod common;

use common::*;
use diskknot::farber_levine::{fl_pairing, torsion_module, Bounds, CancelToken};
use diskknot::ring::scalar::rat;
use diskknot::ring::{factor_over_rationals, Gamma, Int, Rat};
use diskknot::sequiv::scalar_form;
use diskknot::linalg::RatMatrix;
use num_traits::Zero;

#[test]
fn circulant_quotients_of_disk_module() {
    let s = disk();
    for k in 1..=12 {
        let orders = circulant_orders(&s, k);
        if k % 2 == 0 {
            assert_eq!(orders, vec![Int::from(3)], "k = {k}");
        } else {
            assert!(orders.is_empty(), "k = {k}");
        }
    }
}

#[test]
fn circulant_quotients_of_unimodular_inputs_vanish() {
    for s in [trefoil(), hopf_like()] {
        for k in 1..=6 {
            assert!(circulant_orders(&s, k).is_empty());
        }
    }
}

#[test]
fn module_matches_circulant_oracle() {
    let s = disk();
    let t = torsion_module(&s, Bounds::default(), &CancelToken::new()).unwrap();
    assert_eq!(circulant_orders(&s, t.k as usize), t.orders);
    assert_eq!(circulant_orders(&s, 2 * t.k as usize), t.orders);
}

#[test]
fn pairing_matches_exhaustive_lifts() {
    let s = disk();
    let t = torsion_module(&s, Bounds::default(), &CancelToken::new()).unwrap();
    let table = fl_pairing(&s, &t).unwrap();
    let probes = [unit_vec(2, 0, 0), unit_vec(2, 1, 0), unit_vec(2, 0, -1)];
    let mut nonzero = false;
    for x in &probes {
        for y in &probes {
            let want = brute_force_value(&s, x, y, 3, 2).expect("a lift within the search box");
            let got = table.evaluate(&t.coordinates(x), &t.coordinates(y));
            assert_eq!(got, want);
            assert!((&want * Rat::from_integer(3.into())).is_integer());
            nonzero |= !want.is_zero();
        }
    }
    assert!(nonzero);
}

#[test]
fn two_by_two_scalar_form_inverses() {
    // inverse of [[a, b], [c, d]] is [[d, -b], [-c, a]] / (ad - bc)
    let s = disk();
    let a = s.theta.transpose().add(&s.theta);
    let det = a.get(0, 0) * a.get(1, 1) - a.get(0, 1) * a.get(1, 0);
    let want = RatMatrix::from_rows(vec![
        vec![a.get(1, 1) / &det, -(a.get(0, 1) / &det)],
        vec![-(a.get(1, 0) / &det), a.get(0, 0) / &det],
    ]);
    assert_eq!(scalar_form(&s).unwrap(), want);
    assert_eq!(want, RatMatrix::from_i64(&[&[2, -1], &[-1, 2]]).scale(&rat(1, 3)));
}

/// Degree ≤ 3 factors are irreducible iff they have no rational root.
fn has_rational_root(p: &Gamma) -> bool {
    let (_, poly) = p.to_poly();
    let c: Vec<Rat> = poly.coeffs().to_vec();
    let lead = c.last().unwrap().numer().clone();
    let constant = c[0].numer().clone();
    let divisors = |n: &Int| -> Vec<i64> {
        let n: i64 = n.try_into().unwrap();
        (1..=n.abs()).filter(|d| n % d == 0).collect()
    };
    if constant.is_zero() {
        return true;
    }
    for a in divisors(&constant) {
        for b in divisors(&lead) {
            for sign in [1, -1] {
                if poly.eval(&Rat::new(Int::from(sign * a), Int::from(b))).is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

#[test]
fn small_factorizations_by_root_search() {
    let cases: [&[i64]; 5] = [&[1, -1, 1], &[2, -5, 2], &[1, 0, 0, -1], &[6, -5, 1], &[1, 1, 1, 1]];
    for c in cases {
        let p = Gamma::from_i64s(0, c);
        let fs = factor_over_rationals(&p).unwrap();
        let mut prod = Gamma::one();
        for (f, e) in &fs {
            if f.span() <= 3 {
                assert!(f.span() == 1 || !has_rational_root(f), "{f} should be irreducible");
            }
            prod = &prod * &f.pow(*e);
        }
        assert!(diskknot::ring::SimilarityClass::similar(&prod, &p, diskknot::ring::CoeffRing::Rat).unwrap());
    }
}
