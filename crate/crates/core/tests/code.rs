use proptest::prelude::*;

use zetterberg::code::witness::weight3_witness_even_at;
use zetterberg::code::*;
use zetterberg::{Caps, Error, Fe, Level};

fn code(q0: u64, s: u32, variant: Variant) -> ZetterbergCode {
    ZetterbergCode::for_params(q0, s, variant, &Caps::default()).unwrap()
}

const SMALL: [(u64, u32, Variant); 7] = [
    (2, 2, Variant::Full),
    (2, 3, Variant::Full),
    (3, 2, Variant::Full),
    (4, 2, Variant::Full),
    (5, 1, Variant::Half),
    (5, 2, Variant::Half),
    (3, 2, Variant::Half),
];

#[test]
fn parity_check_rank_and_kernel() {
    for (q0, s, v) in SMALL {
        let c = code(q0, s, v);
        let h = parity_check_matrix(&c).unwrap();
        assert_eq!(rank_over_q0(c.ctx(), &h), 2 * s as usize, "({q0}, {s}, {v})");
        let basis = kernel_basis(c.ctx(), &h);
        assert_eq!(basis.len(), c.dimension());
        for w in &basis {
            assert!(c.contains(w).unwrap());
        }
    }
}

#[test]
fn weight_one_syndromes_are_distinct_positions() {
    for (q0, s, v) in SMALL {
        let c = code(q0, s, v);
        let mut seen = std::collections::HashSet::new();
        for i in 0..c.length() {
            let mut w = Codeword::zero(c.length());
            w.coeffs[i] = Fe::ONE;
            let syn = c.syndrome(&w).unwrap();
            assert!(!syn.is_zero());
            assert!(seen.insert(syn));
        }
    }
}

#[test]
fn entries_outside_q0_are_rejected() {
    let c = code(4, 2, Variant::Full);
    let ctx = c.ctx();
    let outside = ctx.elements().find(|&x| !ctx.in_level(x, Level::Q0).unwrap()).unwrap();
    let mut w = Codeword::zero(c.length());
    w.coeffs[3] = outside;
    assert_eq!(c.syndrome(&w), Err(Error::NotInSubfield));
}

proptest! {
    #[test]
    fn shifts_preserve_codewords(idx in 0usize..7, coeffs in prop::collection::vec(0usize..64, 64)) {
        let (q0, s, v) = SMALL[idx];
        let c = code(q0, s, v);
        let ctx = c.ctx();
        let basis = kernel_basis(ctx, &parity_check_matrix(&c).unwrap());
        let scalars = ctx.level_elements(Level::Q0).unwrap();
        let mut w = Codeword::zero(c.length());
        for (b, &k) in basis.iter().zip(&coeffs) {
            let a = scalars[k % scalars.len()];
            for (x, &y) in w.coeffs.iter_mut().zip(&b.coeffs) {
                *x = ctx.add(*x, ctx.mul(a, y));
            }
        }
        prop_assert!(c.contains(&w).unwrap());
        let shifted = c.shift(&w);
        prop_assert!(c.contains(&shifted).unwrap());
        prop_assert_eq!(shifted.weight(), w.weight());
    }
}

#[test]
fn formula_matches_search() {
    let caps = Caps::default();
    for (q0, s, v) in SMALL {
        let c = code(q0, s, v);
        let d = min_distance_formula(q0, s, v).unwrap();
        match min_distance_exhaustive(&c, d, &caps).unwrap() {
            MinDistance::Exact { d: found, witness } => {
                assert_eq!(found, d, "({q0}, {s}, {v})");
                assert_eq!(witness.weight() as u32, d);
                assert!(c.contains(&witness).unwrap());
            }
            other => panic!("({q0}, {s}, {v}): {other:?}"),
        }
    }
}

#[test]
fn exhaustive_caps() {
    let caps = Caps { exhaustive_len_cap: 10, ..Caps::default() };
    let c = code(4, 2, Variant::Full);
    assert!(matches!(min_distance_exhaustive(&c, 4, &caps), Err(Error::SizeCapExceeded { .. })));
}

#[test]
fn mindist_examples() {
    assert_eq!(min_distance_formula(5, 1, Variant::Half).unwrap(), 3);
    assert_eq!(min_distance_formula(3, 2, Variant::Half).unwrap(), 5);
    assert_eq!(min_distance_formula(2, 4, Variant::Full).unwrap(), 5);
    assert_eq!(min_distance_formula(8, 4, Variant::Full).unwrap(), 4);
    assert_eq!(min_distance_formula(4, 2, Variant::Half), Err(Error::HalfVariantNeedsOddQ0));
}

#[test]
fn even_witnesses_for_all_exponent_pairs() {
    let c = code(8, 3, Variant::Full);
    for i in 1..=8 {
        for j in i + 1..=8 {
            let w = weight3_witness_even_at(&c, i, j).unwrap();
            assert_eq!(w.weight(), 3);
            assert!(c.contains(&w).unwrap());
        }
    }
}

#[test]
fn half_witness_7_3() {
    let c = code(7, 3, Variant::Half);
    let w = weight3_witness_half_odd(&c).unwrap();
    assert_eq!(w.weight(), 3);
    assert!(c.contains(&w).unwrap());
    let json = c.to_json(&w);
    assert_eq!(json.support.len(), 3);
}
