//! Breadth-first layering of the syndrome space F_{q²}.
//!
//! Layer k holds the syndromes whose coset leaders have weight k. A layer is
//! expanded forward from the frontier or, once the unvisited remainder is the
//! smaller side, by checking each unvisited element against the visited set.

use crate::code::{Variant, ZetterbergCode};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::gf::{Fe, FieldContext, Level};

pub const UNVISITED: u8 = u8::MAX;

/// Layer index of every element of F_{q²}, indexed by encoding.
#[derive(Debug, Clone)]
pub struct Layers {
    pub layer: Vec<u8>,
    pub sizes: Vec<u64>,
}

impl Layers {
    /// Index of the last nonempty layer.
    pub fn rho(&self) -> u8 {
        (self.sizes.len() - 1) as u8
    }

    /// Smallest encoding in the last layer.
    pub fn deepest(&self) -> Fe {
        let r = self.rho();
        let i = self.layer.iter().position(|&l| l == r).unwrap_or(0);
        Fe(i as u32)
    }

    pub fn of(&self, x: Fe) -> u8 {
        self.layer[x.0 as usize]
    }
}

/// The distinct elements `c·x` with `c ∈ F_{q0}^*` and `x` a code position.
pub fn step_set(code: &ZetterbergCode) -> Result<Vec<Fe>> {
    let ctx = code.ctx();
    let units: Vec<Fe> = ctx.level_elements(Level::Q0)?.into_iter().skip(1).collect();
    let mut seen = vec![false; ctx.order() as usize];
    let mut out = Vec::new();
    for &x in code.positions() {
        for &c in &units {
            let y = ctx.mul(c, x);
            if !seen[y.0 as usize] {
                seen[y.0 as usize] = true;
                out.push(y);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

fn check_cap(ctx: &FieldContext, caps: &Caps) -> Result<()> {
    if ctx.order() > caps.oracle_cap {
        return Err(Error::SizeCapExceeded {
            what: "oracle syndrome space (q²)",
            needed: ctx.order() as u128,
            cap: caps.oracle_cap as u128,
        });
    }
    Ok(())
}

/// Layers of F_{q²} under sums of elements of `steps`. `steps` must be closed under negation.
pub fn syndrome_layers(ctx: &FieldContext, steps: &[Fe], caps: &Caps) -> Result<Layers> {
    check_cap(ctx, caps)?;
    let n = ctx.order() as usize;
    let mut layer = vec![UNVISITED; n];
    layer[0] = 0;
    let mut sizes = vec![1u64];
    let mut frontier = vec![Fe::ZERO];
    let mut unvisited = n as u64 - 1;
    let mut k: u8 = 0;
    while unvisited > 0 && !frontier.is_empty() {
        if k == UNVISITED - 1 {
            return Err(Error::Inconsistent("layer count overflow".into()));
        }
        let next = k + 1;
        let mut fresh = Vec::new();
        if (frontier.len() as u64) <= unvisited {
            for &y in &frontier {
                for &x in steps {
                    let z = ctx.add(y, x);
                    if layer[z.0 as usize] == UNVISITED {
                        layer[z.0 as usize] = next;
                        fresh.push(z);
                    }
                }
            }
        } else {
            for i in 0..n {
                if layer[i] != UNVISITED {
                    continue;
                }
                let y = Fe(i as u32);
                if steps.iter().any(|&x| layer[ctx.add(y, x).0 as usize] <= k) {
                    fresh.push(y);
                }
            }
            for &y in &fresh {
                layer[y.0 as usize] = next;
            }
        }
        if fresh.is_empty() {
            break;
        }
        unvisited -= fresh.len() as u64;
        sizes.push(fresh.len() as u64);
        frontier = fresh;
        k = next;
    }
    if unvisited > 0 {
        return Err(Error::Inconsistent(format!(
            "{unvisited} syndromes unreachable; the positions do not span F_{{q²}}"
        )));
    }
    Ok(Layers { layer, sizes })
}

/// Layers for the syndromes of `code`.
pub fn oracle_layers(code: &ZetterbergCode, caps: &Caps) -> Result<Layers> {
    check_cap(code.ctx(), caps)?;
    syndrome_layers(code.ctx(), &step_set(code)?, caps)
}

/// ρ of the full and the half code by two separate walks; true when they agree.
pub fn half_full_radius_equality_check(q0: u64, s: u32, caps: &Caps) -> Result<bool> {
    if q0 % 2 == 0 {
        return Err(Error::HalfVariantNeedsOddQ0);
    }
    let (rf, rh) = half_full_radii(q0, s, caps)?;
    Ok(rf == rh)
}

/// (ρ full, ρ half) from the two walks.
pub fn half_full_radii(q0: u64, s: u32, caps: &Caps) -> Result<(u8, u8)> {
    let q2 = crate::arith::checked_pow(q0, 2 * s).unwrap_or(u64::MAX);
    if q2 > caps.oracle_cap {
        return Err(Error::SizeCapExceeded {
            what: "oracle syndrome space (q²)",
            needed: q2 as u128,
            cap: caps.oracle_cap as u128,
        });
    }
    let full = ZetterbergCode::for_params(q0, s, Variant::Full, caps)?;
    let half = ZetterbergCode::new(full.ctx().clone(), Variant::Half)?;
    Ok((oracle_layers(&full, caps)?.rho(), oracle_layers(&half, caps)?.rho()))
}
