//! Explicit weight-3 codewords.

use crate::charsum::find_nonsquare_quartic_pair;
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::gf::Fe;

use super::mindist::{min_distance_exhaustive, MinDistance};
use super::{Codeword, Variant, ZetterbergCode};

/// Even q0 ≥ 4, s odd: the word `a·θ^i + b·θ^j + 1 = 0` on positions
/// `0, i(q+1)/(q0+1), j(q+1)/(q0+1)`, with θ = ξ^{(q+1)/(q0+1)} of order q0+1,
/// `a = θ^i(θ^j+1)²/(θ^i+θ^j)²` and `b = θ^j(θ^i+1)²/(θ^i+θ^j)²`.
pub fn weight3_witness_even(code: &ZetterbergCode) -> Result<Codeword> {
    weight3_witness_even_at(code, 1, 2)
}

/// As [`weight3_witness_even`] with explicit exponents `1 ≤ i < j ≤ q0`.
pub fn weight3_witness_even_at(code: &ZetterbergCode, i: u64, j: u64) -> Result<Codeword> {
    let ctx = code.ctx();
    let q0 = ctx.q0();
    if !ctx.is_even() || q0 < 4 || code.s() % 2 == 0 || code.variant() != Variant::Full {
        return Err(Error::PreconditionViolated(
            "even witness needs the full code with even q0 ≥ 4 and odd s".into(),
        ));
    }
    if !(1 <= i && i < j && j <= q0) {
        return Err(Error::PreconditionViolated("need 1 ≤ i < j ≤ q0".into()));
    }
    let step = (code.q() + 1) / (q0 + 1);
    let theta = ctx.pow(code.xi(), step);
    let ti = ctx.pow(theta, i);
    let tj = ctx.pow(theta, j);
    let denom = {
        let d = ctx.add(ti, tj);
        ctx.mul(d, d)
    };
    let sq = |x: Fe| ctx.mul(x, x);
    let a = ctx.div(ctx.mul(ti, sq(ctx.add(tj, Fe::ONE))), denom)?;
    let b = ctx.div(ctx.mul(tj, sq(ctx.add(ti, Fe::ONE))), denom)?;
    let mut word = Codeword::zero(code.length());
    word.coeffs[0] = Fe::ONE;
    word.coeffs[(i * step) as usize] = a;
    word.coeffs[(j * step) as usize] = b;
    verify_weight3(code, &word)?;
    Ok(word)
}

/// Odd q0 ≥ 5, s odd, half code: with δ the quartic of a pair `(c1, c2)` and
/// `ζ1 = (c2²-c1²-1+√δ)/(2c1)`, `ζ2 = (c1²-c2²-1-√δ)/(2c2)`, the relation
/// `c1ζ1 + c2ζ2 + 1 = 0` holds with ζ1, ζ2 ∈ H. Signs `ε` move `εζ` into the
/// first half of H. If the three positions collide the word is found by direct search.
pub fn weight3_witness_half_odd(code: &ZetterbergCode) -> Result<Codeword> {
    let ctx = code.ctx();
    let q0 = ctx.q0();
    if ctx.is_even() || q0 < 5 || code.s() % 2 == 0 || code.variant() != Variant::Half {
        return Err(Error::PreconditionViolated(
            "half witness needs the half code with odd q0 ≥ 5 and odd s".into(),
        ));
    }
    let (c1, c2) = find_nonsquare_quartic_pair(ctx)?;
    let delta = crate::charsum::quartic(ctx, c1, c2);
    let root = ctx
        .sqrt(delta)
        .ok_or_else(|| Error::FormulaMismatch("δ has no square root in F_{q²}".into()))?;
    let two = ctx.from_int(2);
    let (s1, s2) = (ctx.mul(c1, c1), ctx.mul(c2, c2));
    let zeta1 = ctx.div(
        ctx.add(ctx.sub(ctx.sub(s2, s1), Fe::ONE), root),
        ctx.mul(two, c1),
    )?;
    let zeta2 = ctx.div(
        ctx.sub(ctx.sub(ctx.sub(s1, s2), Fe::ONE), root),
        ctx.mul(two, c2),
    )?;
    let placed = [(c1, zeta1), (c2, zeta2)]
        .into_iter()
        .map(|(c, z)| {
            code.locate(z).map(|(k, negate)| (k, if negate { ctx.neg(c) } else { c }))
        })
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::FormulaMismatch("ζ does not lie in H".into()))?;
    let (k1, k2) = (placed[0].0, placed[1].0);
    if k1 != 0 && k2 != 0 && k1 != k2 {
        let mut word = Codeword::zero(code.length());
        word.coeffs[0] = Fe::ONE;
        word.coeffs[k1] = placed[0].1;
        word.coeffs[k2] = placed[1].1;
        verify_weight3(code, &word)?;
        return Ok(word);
    }
    match min_distance_exhaustive(code, 3, &Caps::default())? {
        MinDistance::Exact { d: 3, witness } => Ok(witness),
        _ => Err(Error::NotFound("no weight-3 word in the half code".into())),
    }
}

fn verify_weight3(code: &ZetterbergCode, word: &Codeword) -> Result<()> {
    if word.weight() != 3 || !code.contains(word)? {
        return Err(Error::FormulaMismatch("witness is not a weight-3 codeword".into()));
    }
    Ok(())
}
