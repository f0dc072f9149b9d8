use diskknot::blanchfield::{presentation_matrix, trace_form, BlanchfieldForm};
use diskknot::cobordism::{block_sum, check_null_cobordance_witness, diagonal_witness, negate, CobordismWitness};
use diskknot::generate::Generator;
use diskknot::linalg::{smith, IntMatrix, RatMatrix};
use diskknot::ring::{CoeffRing, Gamma, Int, Lambda, Rat, RationalFunction, SimilarityClass};
use diskknot::seifert::{alexander_class, validate, Parity, SeifertData};
use diskknot::sequiv::{apply_move, replay, scalar_form, sequiv_invariants, MoveTrace};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn laurent() -> impl Strategy<Value = Lambda> {
    (-3i64..=3, prop::collection::vec(-4i64..=4, 0..5)).prop_map(|(low, c)| Lambda::from_i64s(low, &c))
}

fn nonzero_gamma() -> impl Strategy<Value = Gamma> {
    (-2i64..=2, prop::collection::vec(-4i64..=4, 1..4))
        .prop_filter("nonzero", |(_, c)| c.iter().any(|x| *x != 0))
        .prop_map(|(low, c)| Gamma::from_i64s(low, &c))
}

fn int_matrix(n: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(-5i64..=5, n * n)
        .prop_map(move |v| IntMatrix::new(n, n, v.into_iter().map(Int::from).collect()))
}

fn parity() -> impl Strategy<Value = Parity> {
    prop_oneof![Just(Parity::Odd), Just(Parity::Even)]
}

fn valid(seed: u64, p: Parity) -> SeifertData {
    Generator::new(seed).valid(p)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
    }

    #[test]
    fn conjugation_is_a_ring_involution(a in laurent(), b in laurent()) {
        prop_assert_eq!(a.conjugate().conjugate(), a.clone());
        prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
        prop_assert_eq!(a.conjugate().eval_one(), a.eval_one());
    }

    #[test]
    fn rational_functions_form_a_field(p in nonzero_gamma(), q in nonzero_gamma(), r in nonzero_gamma()) {
        let f = RationalFunction::new(p.clone(), q.clone());
        let g = RationalFunction::new(r.clone(), q.clone());
        prop_assert!((&f * &f.inv() - RationalFunction::one()).is_zero());
        prop_assert_eq!(&(&f + &g) * &RationalFunction::from_laurent(&q), RationalFunction::from_laurent(&(&p + &r)));
        prop_assert_eq!(f.conjugate().conjugate(), f.clone());
        let x = Rat::new(Int::from(7), Int::from(3));
        if let (Some(fx), Some(gx)) = (f.eval(&x), g.eval(&x)) {
            prop_assert_eq!((&f * &g).eval(&x), Some(fx * gx));
        }
    }

    #[test]
    fn determinant_is_multiplicative(a in int_matrix(3), b in int_matrix(3)) {
        prop_assert_eq!(a.mul(&b).det_int(), a.det_int() * b.det_int());
        prop_assert_eq!(a.transpose().det_int(), a.det_int());
    }

    #[test]
    fn smith_diagonal_multiplies_to_determinant(a in int_matrix(3)) {
        let s = smith(&a);
        let det = a.det_int();
        if det.is_zero() {
            prop_assert!(s.diag.len() < 3);
        } else {
            let prod = s.diag.iter().fold(Int::one(), |acc, d| acc * d);
            prop_assert_eq!(prod, det.abs());
        }
        for w in s.diag.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
    }

    #[test]
    fn generated_data_has_integral_presentation(seed in any::<u64>(), p in parity()) {
        let s = valid(seed, p);
        prop_assert!(validate(&s).verdict);
        let m = presentation_matrix(&s).unwrap();
        let at_one = m.map(|x| x.eval_one());
        prop_assert_eq!(at_one.det_int().abs(), Int::one());
    }

    #[test]
    fn pairing_is_hermitian_and_traces_to_scalar_form(seed in any::<u64>(), p in parity()) {
        let s = Generator::new(seed).valid_nonsingular(p);
        let b = BlanchfieldForm::rational_basis(&s).unwrap();
        prop_assert!(b.is_hermitian());
        prop_assert_eq!(trace_form(&b), scalar_form(&s).unwrap());
    }

    #[test]
    fn moves_preserve_invariants(seed in any::<u64>(), p in parity()) {
        let mut g = Generator::new(seed);
        let s = g.valid(p);
        let want = sequiv_invariants(&s).unwrap();
        let mut trace = MoveTrace::identity(&s);
        for _ in 0..4 {
            let m = g.random_move(&trace.end);
            trace.push(m).unwrap();
            prop_assert_eq!(&sequiv_invariants(&trace.end).unwrap(), &want);
        }
        prop_assert_eq!(replay(&trace).unwrap(), trace.end.clone());
    }

    #[test]
    fn alexander_class_is_congruence_invariant(seed in any::<u64>(), p in parity()) {
        let mut g = Generator::new(seed);
        let s = g.valid(p);
        let q = g.rational_invertible(s.dim());
        let t = SeifertData { theta: s.theta.congruence(&q), parity: p };
        prop_assert_eq!(alexander_class(&t).unwrap(), alexander_class(&s).unwrap());
    }

    #[test]
    fn witnesses_transport_under_congruence(seed in any::<u64>()) {
        let mut g = Generator::new(seed);
        let s = g.valid(Parity::Even);
        let doubled = block_sum(&s, &negate(&s)).unwrap();
        let w = diagonal_witness(s.dim());
        prop_assert!(check_null_cobordance_witness(&doubled.theta, &w).unwrap());
        let q = g.rational_invertible(doubled.dim());
        let moved = w.transport(&q).unwrap();
        prop_assert!(check_null_cobordance_witness(&doubled.theta.congruence(&q), &moved).unwrap());
    }

    #[test]
    fn signature_is_additive(a in any::<u64>(), b in any::<u64>()) {
        let x = valid(a, Parity::Even);
        let y = valid(b, Parity::Even);
        let sig = |s: &SeifertData| s.theta.add(&s.theta.transpose()).signature();
        prop_assert_eq!(sig(&block_sum(&x, &y).unwrap()), sig(&x) + sig(&y));
        prop_assert_eq!(sig(&negate(&x)), -sig(&x));
    }

    #[test]
    fn seifert_json_round_trip(seed in any::<u64>(), p in parity()) {
        let s = valid(seed, p);
        let text = serde_json::to_string(&s).unwrap();
        prop_assert_eq!(serde_json::from_str::<SeifertData>(&text).unwrap(), s);
    }

    #[test]
    fn trace_json_round_trip(seed in any::<u64>()) {
        let mut g = Generator::new(seed);
        let s = g.valid(Parity::Odd);
        let mut trace = MoveTrace::identity(&s);
        for _ in 0..3 {
            let m = g.random_move(&trace.end);
            trace.push(m).unwrap();
        }
        let text = serde_json::to_string(&trace).unwrap();
        let back: MoveTrace = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &trace);
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }

    #[test]
    fn witness_json_round_trip(v in prop::collection::vec((-9i64..=9, 1i64..=9), 4)) {
        let basis = vec![v.iter().map(|(a, b)| Rat::new(Int::from(*a), Int::from(*b))).collect::<Vec<_>>()];
        let w = CobordismWitness { basis };
        let text = serde_json::to_string(&w).unwrap();
        prop_assert!(!text.contains('.') || text.contains('/'));
        prop_assert_eq!(serde_json::from_str::<CobordismWitness>(&text).unwrap(), w);
    }
}

#[test]
fn similarity_ignores_units() {
    let p = Gamma::from_i64s(0, &[1, -1, 1]);
    let q = p.shift(3).scale(&Rat::new(Int::from(-5), Int::from(2)));
    assert!(SimilarityClass::similar(&p, &q, CoeffRing::Rat).unwrap());
    assert!(!SimilarityClass::similar(&p, &q, CoeffRing::Int).unwrap());
}

#[test]
fn moves_reject_bad_shapes() {
    let s = SeifertData::from_i64(&[&[-1, 1], &[0, -1]], Parity::Odd);
    let bad = diskknot::sequiv::Move::Congruence { p: RatMatrix::identity(3), ring: CoeffRing::Rat };
    assert!(apply_move(&s, &bad).is_err());
}
