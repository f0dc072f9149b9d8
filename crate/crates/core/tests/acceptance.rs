//! One PASS/FAIL line per acceptance criterion.

mod common;

use std::time::{Duration, Instant};

use common::{brute_force_value, circulant_orders, disk, hopf_like, trefoil, unit_vec};
use diskknot::blanchfield::{presentation_matrix, trace_form, BlanchfieldForm};
use diskknot::cobordism::{
    block_sum, check_null_cobordance_witness, combo_ambient, combo_matrix_witness, enlargement_ambient,
    enlargement_cobordism_witness, negate, obstruction_suite, POSSIBLY_NULL,
};
use diskknot::farber_levine::{
    fl_pairing, lift_independence_check, mk_independence_check, torsion_module, Bounds, CancelToken,
};
use diskknot::generate::Generator;
use diskknot::ring::{fox_milnor_test, similarity_normalize, CoeffRing, Gamma, Int, Rat};
use diskknot::seifert::{alexander_numerator, alexander_polynomial, derive_r, validate, Parity, SeifertData};
use diskknot::sequiv::{apply_move, scalar_form, sequiv_invariants, Move};
use num_traits::{One, Signed};

type Check = Result<String, String>;

fn ensure(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn err(e: diskknot::Error) -> String {
    e.to_string()
}

fn trefoil_alexander() -> Gamma {
    Gamma::from_i64s(0, &[1, -1, 1])
}

fn criterion_1() -> Check {
    let s = trefoil();
    let v = validate(&s);
    ensure(v.verdict, "trefoil rejected")?;
    ensure(v.is_sphere_matrix, "trefoil not a sphere matrix")?;
    let a = alexander_polynomial(&s).map_err(err)?;
    ensure(a == similarity_normalize(&trefoil_alexander(), CoeffRing::Rat).unwrap(), format!("alexander {a}"))?;
    let at_minus_one = alexander_numerator(&s).eval(&-Rat::one()).abs();
    ensure(at_minus_one == Rat::from_integer(Int::from(3)), "det at -1")?;
    ensure(!fox_milnor_test(&a.rep).map_err(err)?.passes, "fox-milnor passes")?;
    Ok(format!("alexander {a}, det at -1 = 3, fox-milnor fails"))
}

fn criterion_2() -> Check {
    let s = disk();
    let v = validate(&s);
    ensure(v.verdict, "disk candidate rejected")?;
    ensure(v.det_r == "3", format!("det R = {}", v.det_r))?;
    ensure(!v.is_sphere_matrix, "unexpected sphere matrix")?;
    let a = alexander_polynomial(&s).map_err(err)?;
    ensure(a == similarity_normalize(&trefoil_alexander(), CoeffRing::Rat).unwrap(), format!("alexander {a}"))?;
    Ok(format!("det R = 3, not a sphere matrix, alexander {a}"))
}

fn criterion_3() -> Check {
    let mut g = Generator::new(3);
    let n = 200;
    for i in 0..n {
        let p = if i % 2 == 0 { Parity::Odd } else { Parity::Even };
        let s = g.valid_nonsingular(p);
        let b = BlanchfieldForm::rational_basis(&s).map_err(err)?;
        ensure(trace_form(&b) == scalar_form(&s).map_err(err)?, format!("mismatch on {:?}", s.theta))?;
    }
    Ok(format!("{n} matrices"))
}

fn criterion_4() -> Check {
    let mut g = Generator::new(4);
    let (bases, per) = (50, 10);
    for b in 0..bases {
        let p = if b % 2 == 0 { Parity::Odd } else { Parity::Even };
        let mut s = g.valid(p);
        let want = sequiv_invariants(&s).map_err(err)?;
        for _ in 0..per {
            let m = g.random_move(&s);
            s = apply_move(&s, &m).map_err(err)?;
            let got = sequiv_invariants(&s).map_err(err)?;
            ensure(got.alexander == want.alexander, format!("alexander changed by {}", m.name()))?;
            ensure(got == want, format!("invariants changed by {}", m.name()))?;
        }
    }
    Ok(format!("{} moves over {bases} bases", bases * per))
}

fn criterion_5() -> Check {
    let mut g = Generator::new(5);
    let n = 100;
    for i in 0..n {
        let p = if i % 2 == 0 { Parity::Odd } else { Parity::Even };
        let s = g.valid(p);
        let k = s.dim();
        let m = match i % 3 {
            0 => Move::RowEnlarge { x: g.small_rat(), u: g.rat_vec(k), v: g.rat_vec(k) },
            1 => Move::ColEnlarge { x: g.small_rat(), u: g.rat_vec(k), v: g.rat_vec(k) },
            _ => g.surgery(k),
        };
        let e = apply_move(&s, &m).map_err(err)?;
        let w = enlargement_cobordism_witness(&s, &e).map_err(err)?;
        ensure(check_null_cobordance_witness(&enlargement_ambient(&s, &e), &w).map_err(err)?, "enlargement witness")?;
    }
    for i in 0..n {
        let p = if i % 2 == 0 { Parity::Odd } else { Parity::Even };
        let a0 = g.valid(p);
        let a1 = g.valid(p);
        let sz = 1 + i % 3;
        let blocks = g.combo_blocks(a0.dim(), a1.dim(), sz);
        let w = combo_matrix_witness(&a0, &a1, &blocks).map_err(err)?;
        let amb = combo_ambient(&a0, &a1, &blocks).map_err(err)?;
        ensure(check_null_cobordance_witness(&amb, &w).map_err(err)?, "combo witness")?;
    }
    Ok(format!("{n} enlargement and {n} combination witnesses"))
}

fn criterion_6() -> Check {
    let mut g = Generator::new(6);
    let n = 100;
    for i in 0..n {
        let p = if i % 2 == 0 { Parity::Odd } else { Parity::Even };
        let a = g.valid(p);
        let d = block_sum(&a, &negate(&a)).map_err(err)?;
        let rep = obstruction_suite(&d).map_err(err)?;
        ensure(rep.verdict == POSSIBLY_NULL, format!("{:?}", rep.reasons))?;
        let alex = alexander_polynomial(&d).map_err(err)?;
        ensure(fox_milnor_test(&alex.rep).map_err(err)?.passes, "fox-milnor fails")?;
    }
    Ok(format!("{n} doubled matrices"))
}

fn criterion_7() -> Check {
    let mut g = Generator::new(7);
    let n = 500;
    for i in 0..n {
        let p = if i % 2 == 0 { Parity::Odd } else { Parity::Even };
        let s = g.valid(p);
        let m = presentation_matrix(&s).map_err(err)?;
        let det = m.map(|x| x.eval_one()).det_int();
        ensure(det.abs().is_one(), format!("det M(1) = {det}"))?;
    }
    Ok(format!("{n} matrices"))
}

fn criterion_8() -> Check {
    let bounds = Bounds::default();
    let cancel = CancelToken::new();
    let mut unimodular = vec![trefoil(), hopf_like()];
    let mut g = Generator::new(8);
    while unimodular.len() < 20 {
        let s = g.valid(g_parity(unimodular.len()));
        if derive_r(&s).det().abs().is_one() {
            unimodular.push(s);
        }
    }
    for s in &unimodular {
        ensure(torsion_module(s, bounds, &cancel).map_err(err)?.is_trivial(), "nontrivial module")?;
    }
    let s = disk();
    let module = torsion_module(&s, bounds, &cancel).map_err(err)?;
    ensure(module.orders == circulant_orders(&s, module.k as usize), "orders differ from oracle")?;
    ensure(module.orders == vec![Int::from(3)], "orders")?;
    let table = fl_pairing(&s, &module).map_err(err)?;
    let m: i64 = (&module.m).try_into().map_err(|_| "m too large".to_string())?;
    let probes = [unit_vec(2, 0, 0), unit_vec(2, 1, 0), unit_vec(2, 0, -1)];
    for x in &probes {
        for y in &probes {
            let want = brute_force_value(&s, x, y, m, module.k as usize).ok_or("oracle found no lift")?;
            let got = table.evaluate(&module.coordinates(x), &module.coordinates(y));
            ensure(got == want, format!("pairing {got} vs oracle {want}"))?;
        }
    }
    for a in 1..=2 {
        for b in 1..=2 {
            ensure(mk_independence_check(&s, &module, a, b).map_err(err)?, format!("(a, b) = ({a}, {b})"))?;
        }
    }
    ensure(lift_independence_check(&s, &module, 10, 8).map_err(err)?, "lift dependence")?;
    let values: Vec<String> = table.values.iter().flatten().map(|v| v.to_string()).collect();
    Ok(format!("{} trivial modules; disk module Z/3, pairing [{}]", unimodular.len(), values.join(", ")))
}

fn g_parity(i: usize) -> Parity {
    if i % 2 == 0 {
        Parity::Odd
    } else {
        Parity::Even
    }
}

fn criterion_9() -> Check {
    let mut g = Generator::new(9);
    let n = 10_000;
    for _ in 0..n {
        let s: SeifertData = g.odd_dimensional_candidate();
        ensure(!validate(&s).verdict, format!("accepted {:?}", s.theta))?;
    }
    Ok(format!("{n} samples rejected"))
}

fn main() {
    let criteria: [(u32, &str, fn() -> Check, Option<u64>); 9] = [
        (1, "trefoil pipeline", criterion_1, Some(1)),
        (2, "non-sphere disk candidate", criterion_2, Some(1)),
        (3, "trace form equals scalar form", criterion_3, Some(30)),
        (4, "move invariance", criterion_4, Some(30)),
        (5, "witness constructions", criterion_5, Some(10)),
        (6, "null sums", criterion_6, Some(20)),
        (7, "presentation integrality", criterion_7, None),
        (8, "finite torsion pairing", criterion_8, Some(60)),
        (9, "even dimension", criterion_9, None),
    ];
    let mut failed = 0;
    for (id, name, f, limit) in criteria {
        let start = Instant::now();
        let result = f();
        let took = start.elapsed();
        let late = limit.is_some_and(|l| took > Duration::from_secs(l));
        let budget = limit.map(|l| format!(" / {l}s")).unwrap_or_default();
        match result {
            Ok(detail) if !late => println!("PASS {id} {name}: {detail} ({:.2}s{budget})", took.as_secs_f64()),
            Ok(detail) => {
                failed += 1;
                println!("FAIL {id} {name}: over time budget, {detail} ({:.2}s{budget})", took.as_secs_f64());
            }
            Err(why) => {
                failed += 1;
                println!("FAIL {id} {name}: {why} ({:.2}s{budget})", took.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
