mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use zetterberg::arith::prime_powers_in;
use zetterberg::charsum::*;
use zetterberg::tower::quadratic_character;
use zetterberg::{Arena, Caps, Error, Fe, FieldContext, Level};

fn base(p: u64, m: u32) -> FieldContext {
    FieldContext::new(p, m, 1, Arena::Base, &Caps::default()).unwrap()
}

#[test]
fn quadratic_sum_examples() {
    let f5 = base(5, 1);
    let i = |k| f5.from_int(k);
    assert_eq!(quadratic_char_sum(&f5, Level::Q0, i(1), i(0), i(0)).unwrap(), 4);
    assert_eq!(quadratic_char_sum(&f5, Level::Q0, i(1), i(0), i(1)).unwrap(), -1);
    let f7 = base(7, 1);
    let j = |k| f7.from_int(k);
    let elems = f7.level_elements(Level::Q0).unwrap();
    let direct = quadratic_sum(&f7, Level::Q0, &elems, [j(1), j(3), j(2)]);
    assert_eq!(quadratic_char_sum(&f7, Level::Q0, j(2), j(3), j(1)).unwrap(), direct);
    assert_eq!(direct, -quadratic_character(&f7, j(2), Level::Q0).unwrap() as i64);
}

#[test]
fn quadratic_sum_matches_euler_oracle_on_small_fields() {
    for (p, m) in [(3, 1), (5, 1), (3, 2), (7, 1)] {
        let ctx = base(p, m);
        let elems = ctx.level_elements(Level::Q0).unwrap();
        for &a2 in &elems[1..] {
            for &a1 in &elems {
                for &a0 in &elems {
                    let lib = quadratic_char_sum(&ctx, Level::Q0, a2, a1, a0).unwrap();
                    assert_eq!(lib, quadratic_sum(&ctx, Level::Q0, &elems, [a0, a1, a2]));
                }
            }
        }
        let q = elems.len() as u64;
        assert_eq!(quadratic_char_sum_exhaustive(&ctx, Level::Q0).unwrap(), (q - 1) * q * q);
    }
}

#[test]
fn quadratic_sum_rejects_bad_input() {
    let ctx = base(5, 1);
    assert!(matches!(
        quadratic_char_sum(&ctx, Level::Q0, Fe::ZERO, Fe::ONE, Fe::ONE),
        Err(Error::PreconditionViolated(_))
    ));
    let even = base(2, 3);
    assert_eq!(
        quadratic_char_sum(&even, Level::Q0, Fe::ONE, Fe::ONE, Fe::ONE),
        Err(Error::EvenCharacteristic)
    );
}

#[test]
fn roots_in_h_odd_exhaustive_q9() {
    let ctx = field(3, 1, 2);
    let h = h_list(&ctx);
    let fq = ctx.level_elements(Level::Q).unwrap();
    for alpha in ctx.elements() {
        for &beta in &fq {
            if alpha.is_zero() && beta.is_zero() {
                continue;
            }
            let expected = roots_in_h(&ctx, &h, alpha, beta).len() as u32;
            assert_eq!(roots_in_h_count_odd(&ctx, alpha, beta).unwrap(), expected);
        }
    }
}

#[test]
fn artin_schreier_small() {
    let ctx = field(2, 1, 3);
    let level = level_by_filter(&ctx, Level::Q2);
    for &a in &level[1..] {
        // b = a²: solvable exactly when the degree is even
        let b = ctx.mul(a, a);
        assert_eq!(artin_schreier_solvable(&ctx, Level::Q2, a, b).unwrap(), ctx.degree() % 2 == 0);
        assert!(artin_schreier_solvable(&ctx, Level::Q2, a, Fe::ZERO).unwrap());
    }
    assert!(artin_schreier_solvable(&ctx, Level::Q2, Fe::ZERO, Fe::ONE).is_err());
}

#[test]
fn artin_schreier_random_f64() {
    let ctx = field(2, 1, 3);
    let elems: Vec<Fe> = ctx.elements().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..500 {
        let a = Fe(rng.gen_range(1..64));
        let b = Fe(rng.gen_range(0..64));
        let brute = elems
            .iter()
            .any(|&x| ctx.add(ctx.add(ctx.mul(x, x), ctx.mul(a, x)), b).is_zero());
        assert_eq!(artin_schreier_solvable(&ctx, Level::Q2, a, b).unwrap(), brute);
    }
}

#[test]
fn roots_in_h_even_q16() {
    let ctx = field(2, 1, 4);
    let h = h_list(&ctx);
    let fq = ctx.level_elements(Level::Q).unwrap();
    assert!(!roots_in_h_exist_even(&ctx, Fe::ZERO, Fe::ONE).unwrap());
    for alpha in ctx.elements() {
        for &beta in &fq[1..] {
            let brute = roots_in_h(&ctx, &h, alpha, beta);
            let flag = roots_in_h_exist_even(&ctx, alpha, beta).unwrap();
            assert_eq!(flag, !brute.is_empty());
            if flag {
                assert_eq!(brute.len(), 2);
                let (r1, r2) = roots_in_h_even(&ctx, alpha, beta).unwrap().unwrap();
                let mut got = vec![r1, r2];
                got.sort();
                let mut want = brute.clone();
                want.sort();
                assert_eq!(got, want);
            }
        }
    }
}

#[test]
fn artin_schreier_solutions_solve() {
    for (m, s) in [(1, 3), (1, 4), (2, 2), (1, 5)] {
        let ctx = field(2, m, s);
        for c in ctx.elements().step_by(7) {
            if let Some(y) = solve_artin_schreier(&ctx, c) {
                assert_eq!(ctx.add(ctx.mul(y, y), y), c);
            }
        }
    }
}

#[test]
fn quartic_pairs_exist_for_small_odd_q0() {
    for q0 in prime_powers_in(5, 199).into_iter().filter(|q| q % 2 == 1) {
        let (p, m) = zetterberg::arith::prime_power(q0).unwrap();
        let ctx = base(p, m);
        let (c1, c2) = find_nonsquare_quartic_pair(&ctx).unwrap();
        assert!(!c1.is_zero() && !c2.is_zero());
        let d = quartic(&ctx, c1, c2);
        assert_eq!(euler_chi(&ctx, d, Level::Q0), -1, "q0 = {q0}");
        if q0 > 5 {
            let minus = ctx.from_int(-1);
            for c in [c1, c2] {
                assert!(c != Fe::ONE && c != minus, "q0 = {q0}");
            }
        }
    }
}

#[test]
fn quartic_pair_q7_is_first_in_order() {
    let ctx = base(7, 1);
    let elems = ctx.level_elements(Level::Q0).unwrap();
    let minus = ctx.from_int(-1);
    let ok = |c: Fe| !c.is_zero() && c != Fe::ONE && c != minus;
    let first = elems
        .iter()
        .flat_map(|&a| elems.iter().map(move |&b| (a, b)))
        .find(|&(a, b)| ok(a) && ok(b) && euler_chi(&ctx, quartic(&ctx, a, b), Level::Q0) == -1)
        .unwrap();
    assert_eq!(find_nonsquare_quartic_pair(&ctx).unwrap(), first);
}

#[test]
fn weil_cubic_example() {
    let ctx = base(3, 3);
    let i = |k| ctx.from_int(k);
    let f = Poly::from_roots(&ctx, &[i(0), i(1), i(2)]);
    let r = weil_bound_check(&ctx, &[CharFactor { poly: f.clone(), order: 2 }]).unwrap();
    assert!(r.holds);
    assert!((r.bound - 2.0 * 27f64.sqrt()).abs() < 1e-9);
    let sq = Poly::from_roots(&ctx, &[i(1), i(1)]);
    assert!(matches!(
        weil_bound_check(&ctx, &[CharFactor { poly: sq, order: 2 }]),
        Err(Error::PreconditionViolated(_))
    ));
}

#[test]
fn weil_random_cubics_f27() {
    let ctx = base(3, 3);
    let elems = ctx.level_elements(Level::Q).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(27);
    let mut done = 0;
    while done < 100 {
        let f = random_monic(&ctx, &mut rng, &elems, 3);
        let factor = CharFactor { poly: f, order: 2 };
        let Ok(r) = weil_bound_check(&ctx, std::slice::from_ref(&factor)) else {
            continue;
        };
        let (re, im) = direct_char_sum(&ctx, &[factor]);
        assert!((re - r.sum_re).abs() < 1e-6 && (im - r.sum_im).abs() < 1e-6);
        assert!(r.holds, "{r:?}");
        done += 1;
    }
}
