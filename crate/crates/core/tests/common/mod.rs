//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use rand::Rng;

use zetterberg::charsum::{CharFactor, Poly};
use zetterberg::{Arena, Caps, Fe, FieldContext, Level, Subgroup};

pub fn field(p: u64, m: u32, s: u32) -> FieldContext {
    FieldContext::new(p, m, s, Arena::Quadratic, &Caps::default()).unwrap()
}

pub fn h_list(ctx: &FieldContext) -> Vec<Fe> {
    let xi = ctx.subgroup_generator(Subgroup::H).unwrap();
    let mut out = Vec::new();
    let mut x = Fe::ONE;
    for _ in 0..=ctx.q() {
        out.push(x);
        x = ctx.mul(x, xi);
    }
    out
}

/// Elements of a level found by testing every ambient element.
pub fn level_by_filter(ctx: &FieldContext, level: Level) -> Vec<Fe> {
    ctx.elements().filter(|&x| ctx.in_level(x, level).unwrap()).collect()
}

/// Roots in H of `αX² + βX + α^q`, found by trying every element of H.
pub fn roots_in_h(ctx: &FieldContext, h: &[Fe], alpha: Fe, beta: Fe) -> Vec<Fe> {
    let aq = ctx.pow(alpha, ctx.q());
    h.iter()
        .copied()
        .filter(|&x| {
            let v = ctx.add(ctx.add(ctx.mul(alpha, ctx.mul(x, x)), ctx.mul(beta, x)), aq);
            v.is_zero()
        })
        .collect()
}

/// Euler's criterion in the given level.
pub fn euler_chi(ctx: &FieldContext, x: Fe, level: Level) -> i64 {
    if x.is_zero() {
        return 0;
    }
    let l = ctx.level_order(level).unwrap();
    if ctx.pow(x, (l - 1) / 2) == Fe::ONE {
        1
    } else {
        -1
    }
}

/// `Σ χ(a2x² + a1x + a0)` over the level, by Euler's criterion at each point.
pub fn quadratic_sum(ctx: &FieldContext, level: Level, elems: &[Fe], a: [Fe; 3]) -> i64 {
    elems
        .iter()
        .map(|&x| {
            let v = ctx.add(ctx.add(ctx.mul(a[2], ctx.mul(x, x)), ctx.mul(a[1], x)), a[0]);
            euler_chi(ctx, v, level)
        })
        .sum()
}

/// `Σ_x ∏ χ_i(f_i(x))` as a complex number, with χ_i(γ^k) = exp(2πik/r_i) and
/// the discrete log found by walking powers of γ.
pub fn direct_char_sum(ctx: &FieldContext, factors: &[CharFactor]) -> (f64, f64) {
    let q = ctx.level_order(Level::Q).unwrap();
    let gamma = ctx.level_generator(Level::Q).unwrap();
    let mut log = std::collections::HashMap::new();
    let mut t = Fe::ONE;
    for k in 0..q - 1 {
        log.insert(t, k);
        t = ctx.mul(t, gamma);
    }
    let (mut re, mut im) = (0.0, 0.0);
    'points: for x in ctx.level_elements(Level::Q).unwrap() {
        let mut angle = 0.0;
        for f in factors {
            let y = f.poly.eval(ctx, x);
            if y.is_zero() {
                continue 'points;
            }
            let k = log[&y] % f.order;
            angle += std::f64::consts::TAU * k as f64 / f.order as f64;
        }
        re += angle.cos();
        im += angle.sin();
    }
    (re, im)
}

/// A random monic polynomial of degree `deg` over level Q.
pub fn random_monic<R: Rng>(ctx: &FieldContext, rng: &mut R, elems: &[Fe], deg: usize) -> Poly {
    let mut c: Vec<Fe> = (0..deg).map(|_| elems[rng.gen_range(0..elems.len())]).collect();
    c.push(Fe::ONE);
    let _ = ctx;
    Poly::new(c)
}

/// Orders r ≥ 2 dividing q - 1.
pub fn orders(q: u64) -> Vec<u64> {
    (2..q).filter(|r| (q - 1) % r == 0).collect()
}
