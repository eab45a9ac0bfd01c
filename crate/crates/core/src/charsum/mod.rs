//! Character sums and root-location tests used by the criteria and witnesses.

pub mod poly;

use serde::Serialize;

use crate::arith::lcm;
use crate::error::{Error, Result};
use crate::gf::{Fe, FieldContext, Level};
use crate::tower::{quadratic_character, trace, LevelPair, SquareSet};

pub use poly::Poly;

/// `Σ_{x ∈ F_q} χ(a2 x² + a1 x + a0)` by direct summation, checked against the
/// closed form `-χ(a2)` (nonzero discriminant) or `(q-1)χ(a2)` (zero discriminant).
pub fn quadratic_char_sum(ctx: &FieldContext, level: Level, a2: Fe, a1: Fe, a0: Fe) -> Result<i64> {
    if ctx.is_even() {
        return Err(Error::EvenCharacteristic);
    }
    if a2.is_zero() {
        return Err(Error::PreconditionViolated("leading coefficient must be nonzero".into()));
    }
    for c in [a2, a1, a0] {
        if !ctx.in_level(c, level)? {
            return Err(Error::NotInSubfield);
        }
    }
    let squares = SquareSet::new(ctx, level)?;
    let f = Poly::new(vec![a0, a1, a2]);
    let direct: i64 = ctx
        .level_elements(level)?
        .into_iter()
        .map(|x| squares.chi(f.eval(ctx, x)) as i64)
        .sum();
    let four = ctx.from_int(4);
    let d = ctx.sub(ctx.mul(a1, a1), ctx.mul(four, ctx.mul(a0, a2)));
    let chi_a2 = squares.chi(a2) as i64;
    let q = ctx.level_order(level)? as i64;
    let closed = if d.is_zero() { (q - 1) * chi_a2 } else { -chi_a2 };
    if direct != closed {
        return Err(Error::FormulaMismatch(format!(
            "quadratic character sum {direct} differs from closed form {closed}"
        )));
    }
    Ok(direct)
}

/// Checks [`quadratic_char_sum`]'s identity for every `(a2, a1, a0)` with `a2 ≠ 0`
/// over the given level by direct summation through addition and multiplication
/// tables. Returns the number of polynomials checked.
pub fn quadratic_char_sum_exhaustive(ctx: &FieldContext, level: Level) -> Result<u64> {
    if ctx.is_even() {
        return Err(Error::EvenCharacteristic);
    }
    let elems = ctx.level_elements(level)?;
    let q = elems.len();
    if q > 1 << 12 {
        return Err(Error::SizeCapExceeded {
            what: "exhaustive quadratic check",
            needed: q as u128,
            cap: 1 << 12,
        });
    }
    let mut index = std::collections::HashMap::with_capacity(q);
    for (i, &x) in elems.iter().enumerate() {
        index.insert(x, i as u16);
    }
    let squares = SquareSet::new(ctx, level)?;
    let chi: Vec<i8> = elems.iter().map(|&x| squares.chi(x)).collect();
    let mut add = vec![0u16; q * q];
    let mut mul = vec![0u16; q * q];
    for (i, &x) in elems.iter().enumerate() {
        for (j, &y) in elems.iter().enumerate() {
            add[i * q + j] = index[&ctx.add(x, y)];
            mul[i * q + j] = index[&ctx.mul(x, y)];
        }
    }
    let four = index[&ctx.from_int(4)] as usize;
    let neg: Vec<u16> = elems.iter().map(|&x| index[&ctx.neg(x)]).collect();
    let sq: Vec<usize> = (0..q).map(|x| mul[x * q + x] as usize).collect();
    let mut values = vec![0usize; q];
    let mut checked = 0u64;
    for a2 in 1..q {
        for a1 in 0..q {
            for (x, v) in values.iter_mut().enumerate() {
                let t = add[mul[a2 * q + sq[x]] as usize * q + mul[a1 * q + x] as usize] as usize;
                *v = t * q;
            }
            let a1sq = sq[a1];
            for a0 in 0..q {
                let direct: i64 = values.iter().map(|&v| chi[add[v + a0] as usize] as i64).sum();
                let prod = mul[four * q + mul[a0 * q + a2] as usize] as usize;
                let d = add[a1sq * q + neg[prod] as usize];
                let closed = if d == 0 {
                    (q as i64 - 1) * chi[a2] as i64
                } else {
                    -(chi[a2] as i64)
                };
                if direct != closed {
                    return Err(Error::FormulaMismatch(format!(
                        "quadratic character sum {direct} differs from closed form {closed}"
                    )));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// Number of roots in H of `αX² + βX + α^q`, odd q, from the character of
/// `Δ = β² - 4α^{q+1}`: one root when Δ = 0, otherwise `1 - χ(Δ)`.
pub fn roots_in_h_count_odd(ctx: &FieldContext, alpha: Fe, beta: Fe) -> Result<u32> {
    if ctx.is_even() {
        return Err(Error::EvenCharacteristic);
    }
    if alpha.is_zero() && beta.is_zero() {
        return Err(Error::PreconditionViolated("alpha and beta both zero".into()));
    }
    if !ctx.in_level(beta, Level::Q)? {
        return Err(Error::NotInSubfield);
    }
    let four = ctx.from_int(4);
    let delta = ctx.sub(ctx.mul(beta, beta), ctx.mul(four, ctx.pow(alpha, ctx.q() + 1)));
    if delta.is_zero() {
        return Ok(1);
    }
    Ok((1 - quadratic_character(ctx, delta, Level::Q)?) as u32)
}

/// Whether `x² + ax + b` has a root in the given level (characteristic 2):
/// exactly when `Tr(b/a²)` to F_2 vanishes.
pub fn artin_schreier_solvable(ctx: &FieldContext, level: Level, a: Fe, b: Fe) -> Result<bool> {
    if !ctx.is_even() {
        return Err(Error::PreconditionViolated("characteristic 2 required".into()));
    }
    let t = ctx.div(b, ctx.mul(a, a))?;
    Ok(trace(ctx, t, LevelPair::new(level, Level::Fp))?.is_zero())
}

/// Even q: `αX² + βX + α^q` (β ∈ F_q^*) has roots in H iff `Tr_{q/2}(α^{q+1}/β²) = 1`.
pub fn roots_in_h_exist_even(ctx: &FieldContext, alpha: Fe, beta: Fe) -> Result<bool> {
    Ok(as_argument(ctx, alpha, beta)?.1)
}

fn as_argument(ctx: &FieldContext, alpha: Fe, beta: Fe) -> Result<(Fe, bool)> {
    if !ctx.is_even() {
        return Err(Error::PreconditionViolated("characteristic 2 required".into()));
    }
    if beta.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if !ctx.in_level(beta, Level::Q)? {
        return Err(Error::NotInSubfield);
    }
    let c = ctx.div(ctx.pow(alpha, ctx.q() + 1), ctx.mul(beta, beta))?;
    let t = trace(ctx, c, LevelPair::new(Level::Q, Level::Fp))?;
    Ok((c, t == Fe::ONE))
}

/// Both roots in H of `αX² + βX + α^q` for even q, when they exist.
///
/// Substituting `X = (β/α)Y` gives `Y² + Y = α^{q+1}/β²`.
pub fn roots_in_h_even(ctx: &FieldContext, alpha: Fe, beta: Fe) -> Result<Option<(Fe, Fe)>> {
    let (c, exists) = as_argument(ctx, alpha, beta)?;
    if !exists {
        return Ok(None);
    }
    let y = solve_artin_schreier(ctx, c).ok_or_else(|| {
        Error::FormulaMismatch("Y² + Y = c unsolvable in F_{q²}".into())
    })?;
    let scale = ctx.div(beta, alpha)?;
    let r1 = ctx.mul(scale, y);
    let r2 = ctx.mul(scale, ctx.add(y, Fe::ONE));
    Ok(Some((r1, r2)))
}

/// A solution of `Y² + Y = c` in the ambient field of characteristic 2.
///
/// Odd ambient degree uses the half-trace; even degree solves the F_2-linear
/// system directly.
pub fn solve_artin_schreier(ctx: &FieldContext, c: Fe) -> Option<Fe> {
    assert!(ctx.is_even());
    let n = ctx.degree();
    if n % 2 == 1 {
        let mut acc = Fe::ZERO;
        let mut t = c;
        for _ in 0..=(n - 1) / 2 {
            acc = ctx.add(acc, t);
            t = ctx.pow(t, 4);
        }
        return (ctx.add(ctx.mul(acc, acc), acc) == c).then_some(acc);
    }
    // XOR basis of the images L(e_i) = e_i² + e_i, tracking preimages.
    let mut pivots: Vec<Option<(u32, u32)>> = vec![None; n];
    for i in 0..n {
        let e = Fe(1 << i);
        let mut img = ctx.add(ctx.mul(e, e), e).0;
        let mut pre = e.0;
        while img != 0 {
            let top = 31 - img.leading_zeros() as usize;
            match pivots[top] {
                Some((pi, pp)) => {
                    img ^= pi;
                    pre ^= pp;
                }
                None => {
                    pivots[top] = Some((img, pre));
                    break;
                }
            }
        }
    }
    let mut rem = c.0;
    let mut sol = 0u32;
    while rem != 0 {
        let top = 31 - rem.leading_zeros() as usize;
        let (pi, pp) = pivots[top]?;
        rem ^= pi;
        sol ^= pp;
    }
    Some(Fe(sol))
}

/// The first `(c1, c2)` with `c1, c2 ∉ {0, ±1}` and
/// `χ((c1+c2+1)(c1+c2-1)(c1-c2+1)(c1-c2-1)) = -1` in F_{q0}, scanning both
/// coordinates in the canonical order of F_{q0}.
///
/// Over F_5 no such pair avoids ±1, so the scan is repeated over all of
/// F_{q0}^* when the restricted one comes up empty.
pub fn find_nonsquare_quartic_pair(ctx: &FieldContext) -> Result<(Fe, Fe)> {
    if ctx.is_even() {
        return Err(Error::EvenCharacteristic);
    }
    if ctx.q0() < 5 {
        return Err(Error::NotFound(format!("no admissible pair over F_{}", ctx.q0())));
    }
    let one = Fe::ONE;
    let minus_one = ctx.from_int(-1);
    let units: Vec<Fe> = ctx.level_elements(Level::Q0)?.into_iter().skip(1).collect();
    let strict: Vec<Fe> = units.iter().copied().filter(|&c| c != one && c != minus_one).collect();
    for elems in [&strict, &units] {
        for &c1 in elems {
            for &c2 in elems {
                if quartic_character(ctx, c1, c2)? == -1 {
                    return Ok((c1, c2));
                }
            }
        }
    }
    Err(Error::NotFound(format!("no admissible pair over F_{}", ctx.q0())))
}

/// `(c1+c2+1)(c1+c2-1)(c1-c2+1)(c1-c2-1)`.
pub fn quartic(ctx: &FieldContext, c1: Fe, c2: Fe) -> Fe {
    let plus = ctx.add(c1, c2);
    let minus = ctx.sub(c1, c2);
    let one = Fe::ONE;
    let a = ctx.mul(ctx.add(plus, one), ctx.sub(plus, one));
    let b = ctx.mul(ctx.add(minus, one), ctx.sub(minus, one));
    ctx.mul(a, b)
}

fn quartic_character(ctx: &FieldContext, c1: Fe, c2: Fe) -> Result<i8> {
    quadratic_character(ctx, quartic(ctx, c1, c2), Level::Q0)
}

/// One factor of a character sum: a monic polynomial and a character order.
#[derive(Debug, Clone)]
pub struct CharFactor {
    pub poly: Poly,
    pub order: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct WeilReport {
    /// Number of points in each class `j mod L`; the sum is `Σ_j counts[j] ζ_L^j`.
    pub counts: Vec<u64>,
    pub sum_re: f64,
    pub sum_im: f64,
    pub abs_sum: f64,
    /// Radical degrees d_i.
    pub degrees: Vec<usize>,
    pub bound: f64,
    /// Present when every character is quadratic and every d_i is even.
    pub refined_bound: Option<f64>,
    /// `bound - |sum|`, or `refined_bound - |sum|` when refined.
    pub margin: f64,
    pub holds: bool,
}

/// Evaluates `Σ_{x∈F_q} ∏ χ_i(f_i(x))` exactly (as class counts) and compares its
/// absolute value with `(Σ d_i - 1)√q`, refined to `1 + (Σ d_i - 2)√q` only when all
/// characters are quadratic and all radical degrees even.
///
/// Each χ_i of order r_i is `γ^k ↦ exp(2πik/r_i)` for the canonical generator γ of F_q^*.
pub fn weil_bound_check(ctx: &FieldContext, factors: &[CharFactor]) -> Result<WeilReport> {
    if ctx.is_even() {
        return Err(Error::EvenCharacteristic);
    }
    if factors.is_empty() {
        return Err(Error::PreconditionViolated("no factors".into()));
    }
    let q = ctx.level_order(Level::Q)?;
    let mut degrees = Vec::with_capacity(factors.len());
    let mut any_non_power = false;
    for (i, f) in factors.iter().enumerate() {
        if f.order < 2 || (q - 1) % f.order != 0 {
            return Err(Error::PreconditionViolated(format!(
                "character order {} does not divide q - 1 = {}",
                f.order,
                q - 1
            )));
        }
        if !f.poly.is_monic() || f.poly.degree() == Some(0) {
            return Err(Error::PreconditionViolated("factors must be monic and nonconstant".into()));
        }
        for &c in &f.poly.0 {
            if !ctx.in_level(c, Level::Q)? {
                return Err(Error::NotInSubfield);
            }
        }
        for g in &factors[i + 1..] {
            if !f.poly.gcd(ctx, &g.poly).is_one() {
                return Err(Error::PreconditionViolated("factors are not pairwise coprime".into()));
            }
        }
        let dec = f.poly.squarefree_decomposition(ctx, q);
        degrees.push(dec.iter().map(|(g, _)| g.degree().unwrap()).sum());
        if dec.iter().any(|(_, e)| e % f.order != 0) {
            any_non_power = true;
        }
    }
    if !any_non_power {
        return Err(Error::PreconditionViolated(
            "every factor is a perfect power of its character order".into(),
        ));
    }
    let l = factors.iter().fold(1u64, |acc, f| lcm(acc, f.order));
    // class of y^{(q-1)/r} among the r-th roots of unity, via a lookup table
    let gamma = ctx.level_generator(Level::Q)?;
    let tables: Vec<std::collections::HashMap<Fe, u64>> = factors
        .iter()
        .map(|f| {
            let w = ctx.pow(gamma, (q - 1) / f.order);
            let mut map = std::collections::HashMap::new();
            let mut t = Fe::ONE;
            for j in 0..f.order {
                map.insert(t, j);
                t = ctx.mul(t, w);
            }
            map
        })
        .collect();
    let mut counts = vec![0u64; l as usize];
    'points: for x in ctx.level_elements(Level::Q)? {
        let mut class = 0u64;
        for (f, table) in factors.iter().zip(&tables) {
            let y = f.poly.eval(ctx, x);
            if y.is_zero() {
                continue 'points;
            }
            let j = table[&ctx.pow(y, (q - 1) / f.order)];
            class = (class + j * (l / f.order)) % l;
        }
        counts[class as usize] += 1;
    }
    let (mut re, mut im) = (0f64, 0f64);
    for (j, &c) in counts.iter().enumerate() {
        let angle = std::f64::consts::TAU * j as f64 / l as f64;
        re += c as f64 * angle.cos();
        im += c as f64 * angle.sin();
    }
    let abs_sum = re.hypot(im);
    let sqrt_q = (q as f64).sqrt();
    let dsum: usize = degrees.iter().sum();
    let bound = (dsum as f64 - 1.0) * sqrt_q;
    let refinable = factors.iter().all(|f| f.order == 2) && degrees.iter().all(|d| d % 2 == 0);
    let refined_bound = refinable.then(|| 1.0 + (dsum as f64 - 2.0) * sqrt_q);
    let effective = refined_bound.unwrap_or(bound);
    let margin = effective - abs_sum;
    Ok(WeilReport {
        counts,
        sum_re: re,
        sum_im: im,
        abs_sum,
        degrees,
        bound,
        refined_bound,
        margin,
        holds: margin >= -1e-9,
    })
}
