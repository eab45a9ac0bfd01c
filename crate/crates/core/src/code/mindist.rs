//! Minimum distance: closed form and exhaustive search.

use serde::Serialize;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::gf::{Fe, Level};
use crate::tower::in_scaled_h;

use super::{code_parameters, Codeword, Variant, ZetterbergCode};

/// Closed-form minimum distance. The zero code (half code with q0 = 3, s = 1)
/// has none and is rejected.
pub fn min_distance_formula(q0: u64, s: u32, variant: Variant) -> Result<u32> {
    let (_, dim) = code_parameters(q0, s, variant)?;
    if dim == 0 {
        return Err(Error::InvalidParameter(format!(
            "the code with q0 = {q0}, s = {s}, variant {variant} is the zero code"
        )));
    }
    let even_s = s % 2 == 0;
    Ok(match variant {
        Variant::Full if q0 == 2 => {
            if even_s {
                5
            } else {
                3
            }
        }
        Variant::Full if q0 % 2 == 0 => {
            if even_s {
                4
            } else {
                3
            }
        }
        Variant::Full => 2,
        Variant::Half if q0 == 3 => 5,
        Variant::Half => {
            if even_s {
                4
            } else {
                3
            }
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MinDistance {
    /// Least weight of a nonzero codeword, with a codeword attaining it.
    Exact {
        d: u32,
        #[serde(skip)]
        witness: Codeword,
    },
    /// No nonzero codeword of weight at most the given bound.
    GreaterThan { bound: u32 },
}

impl MinDistance {
    pub fn value(&self) -> Option<u32> {
        match self {
            MinDistance::Exact { d, .. } => Some(*d),
            MinDistance::GreaterThan { .. } => None,
        }
    }
}

/// Least weight of a nonzero codeword, searched by increasing weight up to `max_weight`.
///
/// The code is invariant under the cyclic (full) or negacyclic (half) shift and
/// under F_{q0}^* scaling, so a minimum-weight word may be taken with coefficient
/// 1 at position 0. For weight w the last term is completed through the membership
/// test `-z ∈ F_{q0}·H`, where `z` is the partial sum; a partial sum landing there
/// means a word of weight at most w, and exactly w once lighter weights are excluded.
pub fn min_distance_exhaustive(code: &ZetterbergCode, max_weight: u32, caps: &Caps) -> Result<MinDistance> {
    let ctx = code.ctx();
    let n = code.length();
    let q0 = ctx.q0();
    if code.q() > caps.weight3_q_cap && max_weight >= 3 {
        return Err(Error::SizeCapExceeded {
            what: "weight-3 scan (q)",
            needed: code.q() as u128,
            cap: caps.weight3_q_cap as u128,
        });
    }
    if max_weight >= 4 && n > caps.exhaustive_len_cap {
        return Err(Error::SizeCapExceeded {
            what: "exhaustive search length",
            needed: n as u128,
            cap: caps.exhaustive_len_cap as u128,
        });
    }
    let units: Vec<Fe> = ctx.level_elements(Level::Q0)?.into_iter().skip(1).collect();
    for w in 2..=max_weight.min(n as u32) {
        let free = (w - 2) as u64;
        let cost = binomial((n - 1) as u64, free).saturating_mul((q0 - 1).saturating_pow(free as u32));
        if cost > caps.scan_cap {
            return Err(Error::SizeCapExceeded {
                what: "exhaustive search cost",
                needed: cost as u128,
                cap: caps.scan_cap as u128,
            });
        }
        let mut chosen: Vec<(usize, Fe)> = Vec::with_capacity(w as usize);
        if let Some(word) = search(code, &units, w as usize - 2, 1, Fe::ONE, &mut chosen)? {
            return Ok(MinDistance::Exact { d: w, witness: word });
        }
    }
    Ok(MinDistance::GreaterThan { bound: max_weight.min(n as u32) })
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

// Chooses `remaining` more positions after `start`, then completes the word.
fn search(
    code: &ZetterbergCode,
    units: &[Fe],
    remaining: usize,
    start: usize,
    partial: Fe,
    chosen: &mut Vec<(usize, Fe)>,
) -> Result<Option<Codeword>> {
    let ctx = code.ctx();
    if remaining == 0 {
        if partial.is_zero() {
            return Ok(None);
        }
        let target = ctx.neg(partial);
        if !in_scaled_h(ctx, target) {
            return Ok(None);
        }
        return complete(code, target, chosen);
    }
    for i in start..code.length() {
        let x = code.positions()[i];
        for &c in units {
            let next = ctx.add(partial, ctx.mul(c, x));
            chosen.push((i, c));
            let found = search(code, units, remaining - 1, i + 1, next, chosen)?;
            chosen.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
    }
    Ok(None)
}

// Writes `target = c·ξ^k` with k a fresh position and assembles
// 1·ξ^0 + chosen terms + c·ξ^k.
fn complete(code: &ZetterbergCode, target: Fe, chosen: &[(usize, Fe)]) -> Result<Option<Codeword>> {
    let ctx = code.ctx();
    for (k, &x) in code.positions().iter().enumerate() {
        if k == 0 || chosen.iter().any(|&(i, _)| i == k) {
            continue;
        }
        let c = ctx.div(target, x)?;
        if !ctx.in_level(c, Level::Q0)? {
            continue;
        }
        let mut word = Codeword::zero(code.length());
        word.coeffs[0] = Fe::ONE;
        for &(i, ci) in chosen {
            word.coeffs[i] = ci;
        }
        word.coeffs[k] = c;
        if !code.contains(&word)? {
            return Err(Error::FormulaMismatch("completed word is not a codeword".into()));
        }
        return Ok(Some(word));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_values() {
        assert_eq!(min_distance_formula(4, 2, Variant::Full).unwrap(), 4);
        assert_eq!(min_distance_formula(4, 3, Variant::Full).unwrap(), 3);
        assert_eq!(min_distance_formula(7, 2, Variant::Half).unwrap(), 4);
        assert_eq!(min_distance_formula(2, 2, Variant::Full).unwrap(), 5);
        assert_eq!(min_distance_formula(3, 4, Variant::Half).unwrap(), 5);
        assert_eq!(min_distance_formula(9, 3, Variant::Full).unwrap(), 2);
        assert!(min_distance_formula(3, 1, Variant::Half).is_err());
    }

    #[test]
    fn small_exhaustive() {
        let caps = Caps::default();
        let code = ZetterbergCode::for_params(3, 2, Variant::Full, &caps).unwrap();
        let r = min_distance_exhaustive(&code, 5, &caps).unwrap();
        assert_eq!(r.value(), Some(2));
        let code = ZetterbergCode::for_params(4, 2, Variant::Full, &caps).unwrap();
        let r = min_distance_exhaustive(&code, 5, &caps).unwrap();
        assert_eq!(r.value(), Some(4));
        if let MinDistance::Exact { witness, .. } = r {
            assert_eq!(witness.weight(), 4);
            assert!(code.contains(&witness).unwrap());
        }
    }

    #[test]
    fn bounded_search_reports_lower_bound() {
        let caps = Caps::default();
        let code = ZetterbergCode::for_params(2, 2, Variant::Full, &caps).unwrap();
        assert_eq!(
            min_distance_exhaustive(&code, 4, &caps).unwrap(),
            MinDistance::GreaterThan { bound: 4 }
        );
    }
}
