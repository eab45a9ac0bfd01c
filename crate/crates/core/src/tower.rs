//! Trace, norm, quadratic character and subgroup membership between levels.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{Fe, FieldContext, Level, Subgroup};

/// A relative extension `from / to`, e.g. F_q over F_{q0}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct LevelPair {
    pub from: Level,
    pub to: Level,
}

impl LevelPair {
    pub fn new(from: Level, to: Level) -> LevelPair {
        LevelPair { from, to }
    }

    /// Degree of the extension, checking containment.
    pub fn relative_degree(&self, ctx: &FieldContext) -> Result<u32> {
        let df = ctx.level_degree(self.from)?;
        let dt = ctx.level_degree(self.to)?;
        if df % dt != 0 {
            return Err(Error::InvalidParameter(format!(
                "{:?} is not a subfield of {:?}",
                self.to, self.from
            )));
        }
        Ok(df / dt)
    }
}

/// `Tr(x) = x + x^Q + ... + x^{Q^{k-1}}` with Q the order of the target level.
pub fn trace(ctx: &FieldContext, x: Fe, pair: LevelPair) -> Result<Fe> {
    let k = pair.relative_degree(ctx)?;
    let qt = ctx.level_order(pair.to)?;
    let mut acc = Fe::ZERO;
    let mut y = x;
    for _ in 0..k {
        acc = ctx.add(acc, y);
        y = ctx.pow(y, qt);
    }
    Ok(acc)
}

/// `N(x) = x · x^Q ⋯ x^{Q^{k-1}} = x^{(Q^k - 1)/(Q - 1)}`.
pub fn norm(ctx: &FieldContext, x: Fe, pair: LevelPair) -> Result<Fe> {
    let k = pair.relative_degree(ctx)?;
    let qt = ctx.level_order(pair.to)?;
    let mut acc = Fe::ONE;
    let mut y = x;
    for _ in 0..k {
        acc = ctx.mul(acc, y);
        y = ctx.pow(y, qt);
    }
    Ok(acc)
}

/// The quadratic character of `x` in the named level: 0, 1 or -1.
pub fn quadratic_character(ctx: &FieldContext, x: Fe, level: Level) -> Result<i8> {
    if ctx.is_even() {
        return Err(Error::EvenCharacteristic);
    }
    if !ctx.in_level(x, level)? {
        return Err(Error::NotInSubfield);
    }
    if x.is_zero() {
        return Ok(0);
    }
    let l = ctx.level_order(level)?;
    let t = ctx.pow(x, (l - 1) / 2);
    if t == Fe::ONE {
        Ok(1)
    } else if t == ctx.from_int(-1) {
        Ok(-1)
    } else {
        Err(Error::NotInSubfield)
    }
}

/// Membership in H, F_q^* or F_{q0}^*, by `x^{|G|} = 1`. Zero is in none of them.
pub fn in_subgroup(ctx: &FieldContext, x: Fe, tag: Subgroup) -> Result<bool> {
    if x.is_zero() {
        return Ok(false);
    }
    let ord = ctx.subgroup_order(tag)?;
    Ok(ctx.pow(x, ord) == Fe::ONE)
}

/// Membership in F_{q0}·H = {c·h : c ∈ F_{q0}, h ∈ H}; zero counts as a member.
///
/// Odd q0: the norm y^{q+1} must be a nonzero square of F_{q0}.
/// Even q0: the norm must lie in F_{q0}^*.
pub fn in_scaled_h(ctx: &FieldContext, y: Fe) -> bool {
    if y.is_zero() {
        return true;
    }
    let nrm = ctx.pow(y, ctx.q() + 1);
    let q0 = ctx.q0();
    if ctx.is_even() {
        ctx.pow(nrm, q0 - 1) == Fe::ONE
    } else {
        ctx.pow(nrm, (q0 - 1) / 2) == Fe::ONE
    }
}

/// The elements ξ^0, ξ^1, ..., ξ^q of H, where ξ = g^{q-1}.
pub fn h_elements(ctx: &FieldContext) -> Result<Vec<Fe>> {
    let xi = ctx.subgroup_generator(Subgroup::H)?;
    let mut out = Vec::with_capacity(ctx.q() as usize + 1);
    let mut x = Fe::ONE;
    for _ in 0..=ctx.q() {
        out.push(x);
        x = ctx.mul(x, xi);
    }
    Ok(out)
}

/// The nonzero squares of F_{q0}, in canonical order.
pub fn squares_q0(ctx: &FieldContext) -> Result<Vec<Fe>> {
    let gen = ctx.level_generator(Level::Q0)?;
    let g2 = ctx.mul(gen, gen);
    let count = (ctx.q0() - 1) / 2;
    let mut out = Vec::with_capacity(count as usize);
    let mut x = Fe::ONE;
    for _ in 0..count {
        out.push(x);
        x = ctx.mul(x, g2);
    }
    Ok(out)
}

/// A trace map evaluated through precomputed images of the polynomial basis.
#[derive(Debug, Clone)]
pub struct LinearTrace {
    p: u64,
    // images[i * p + d] = Tr(d · t^i)
    images: Vec<Fe>,
    n: usize,
}

impl LinearTrace {
    pub fn new(ctx: &FieldContext, pair: LevelPair) -> Result<LinearTrace> {
        pair.relative_degree(ctx)?;
        let p = ctx.p();
        let n = ctx.degree();
        let mut images = Vec::with_capacity(n * p as usize);
        for i in 0..n {
            let mut basis = vec![0u64; n];
            basis[i] = 1;
            let t = trace(ctx, ctx.from_coeffs(&basis)?, pair)?;
            let mut acc = Fe::ZERO;
            for _ in 0..p {
                images.push(acc);
                acc = ctx.add(acc, t);
            }
        }
        Ok(LinearTrace { p, images, n })
    }

    #[inline]
    pub fn eval(&self, ctx: &FieldContext, x: Fe) -> Fe {
        let mut v = x.0 as u64;
        if self.p == 2 {
            let mut acc = 0u32;
            while v != 0 {
                let i = v.trailing_zeros() as usize;
                acc ^= self.images[2 * i + 1].0;
                v &= v - 1;
            }
            return Fe(acc);
        }
        let mut acc = Fe::ZERO;
        for i in 0..self.n {
            if v == 0 {
                break;
            }
            let d = v % self.p;
            v /= self.p;
            if d != 0 {
                acc = ctx.add(acc, self.images[i * self.p as usize + d as usize]);
            }
        }
        acc
    }
}

/// Bitset of the nonzero squares of a level, indexed by element encoding.
#[derive(Debug, Clone)]
pub struct SquareSet {
    bits: Vec<u64>,
}

impl SquareSet {
    pub fn new(ctx: &FieldContext, level: Level) -> Result<SquareSet> {
        if ctx.is_even() {
            return Err(Error::EvenCharacteristic);
        }
        let l = ctx.level_order(level)?;
        let gen = ctx.level_generator(level)?;
        let g2 = ctx.mul(gen, gen);
        let mut bits = vec![0u64; (ctx.order() as usize).div_ceil(64)];
        let mut x = Fe::ONE;
        for _ in 0..(l - 1) / 2 {
            bits[(x.0 >> 6) as usize] |= 1u64 << (x.0 & 63);
            x = ctx.mul(x, g2);
        }
        Ok(SquareSet { bits })
    }

    #[inline]
    pub fn contains(&self, x: Fe) -> bool {
        (self.bits[(x.0 >> 6) as usize] >> (x.0 & 63)) & 1 == 1
    }

    /// χ(x) for x in the level the set was built for.
    #[inline]
    pub fn chi(&self, x: Fe) -> i8 {
        if x.is_zero() {
            0
        } else if self.contains(x) {
            1
        } else {
            -1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{make_field, Arena};
    use crate::Caps;

    #[test]
    fn character_over_f13() {
        let ctx = FieldContext::new(13, 1, 1, Arena::Base, &Caps::default()).unwrap();
        let chi = |k| quadratic_character(&ctx, ctx.from_int(k), Level::Q).unwrap();
        assert_eq!(chi(1), 1);
        assert_eq!(chi(4), 1);
        assert_eq!(chi(2), -1);
        assert_eq!(chi(0), 0);
        let squares: std::collections::BTreeSet<i64> = (1..13).map(|y| y * y % 13).collect();
        assert_eq!(squares, [1, 3, 4, 9, 10, 12].into_iter().collect());
        for k in 1..13 {
            assert_eq!(chi(k) == 1, squares.contains(&k));
        }
    }

    #[test]
    fn character_needs_odd_field() {
        let ctx = make_field(2, 1, 2).unwrap();
        assert_eq!(quadratic_character(&ctx, Fe::ONE, Level::Q), Err(Error::EvenCharacteristic));
    }

    #[test]
    fn character_rejects_outside_level() {
        let ctx = make_field(3, 1, 2).unwrap();
        let g = ctx.generator();
        assert_eq!(quadratic_character(&ctx, g, Level::Q0), Err(Error::NotInSubfield));
    }

    #[test]
    fn trace_of_subfield_constant() {
        let ctx = make_field(3, 1, 3).unwrap();
        let pair = LevelPair::new(Level::Q, Level::Q0);
        for c in ctx.level_elements(Level::Q0).unwrap() {
            let three_c = ctx.add(ctx.add(c, c), c);
            assert_eq!(trace(&ctx, c, pair).unwrap(), three_c);
        }
        assert_eq!(trace(&ctx, Fe::ZERO, pair).unwrap(), Fe::ZERO);
        assert_eq!(norm(&ctx, Fe::ONE, pair).unwrap(), Fe::ONE);
    }

    #[test]
    fn trace_f8_to_f2() {
        let ctx = FieldContext::new(2, 1, 3, Arena::Base, &Caps::default()).unwrap();
        let g = ctx.generator();
        let g2 = ctx.mul(g, g);
        let g4 = ctx.mul(g2, g2);
        let expected = ctx.add(ctx.add(g, g2), g4);
        assert_eq!(trace(&ctx, g, LevelPair::new(Level::Q, Level::Fp)).unwrap(), expected);
    }

    #[test]
    fn linear_trace_matches_orbit_sum() {
        for (p, m, s) in [(2, 2, 3), (3, 1, 2), (5, 1, 2), (2, 1, 4)] {
            let ctx = make_field(p, m, s).unwrap();
            for pair in [LevelPair::new(Level::Q, Level::Q0), LevelPair::new(Level::Q2, Level::Q)] {
                let lt = LinearTrace::new(&ctx, pair).unwrap();
                for x in ctx.elements().step_by(7) {
                    assert_eq!(lt.eval(&ctx, x), trace(&ctx, x, pair).unwrap());
                }
            }
        }
    }

    #[test]
    fn bad_level_pair() {
        let ctx = make_field(2, 2, 3).unwrap();
        // F_{q²} is not contained in F_q
        let pair = LevelPair::new(Level::Q, Level::Q2);
        assert!(trace(&ctx, Fe::ONE, pair).is_err());
    }
}
