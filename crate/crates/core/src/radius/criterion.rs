//! Character and trace criteria deciding whether ρ(C_s(q0)) is 2 or 3.
//!
//! Both scans run in F_q only; the context may realize F_q alone ([`Arena::Base`])
//! or the full F_{q²}.

use crate::arith::prime_power;
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::gf::{Arena, Fe, FieldContext, Level};
use crate::tower::{squares_q0, LevelPair, LinearTrace, SquareSet};

/// Result of a criterion scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CriterionOutcome {
    pub rho: u8,
    /// The first qualifying element of F_q, in the order of powers of its generator.
    pub witness: Option<Fe>,
    /// Character or trace evaluations performed.
    pub evaluations: u64,
}

/// F_q for `q = q0^s`, realized on its own.
pub fn base_context(q0: u64, s: u32, caps: &Caps) -> Result<FieldContext> {
    base_context_nth(q0, s, 0, caps)
}

/// As [`base_context`] with the k-th irreducible modulus in enumeration order.
pub fn base_context_nth(q0: u64, s: u32, k: usize, caps: &Caps) -> Result<FieldContext> {
    let (p, m) = prime_power(q0).ok_or(Error::NotPrimePower(q0))?;
    FieldContext::with_nth_modulus(p, m, s, Arena::Base, k, caps)
}

fn preconditions(ctx: &FieldContext, even: bool, caps: &Caps) -> Result<u64> {
    if ctx.is_even() != even {
        return Err(Error::PreconditionViolated(format!(
            "criterion needs {} q0",
            if even { "even" } else { "odd" }
        )));
    }
    if ctx.spec().s < 2 {
        return Err(Error::PreconditionViolated("criterion needs s ≥ 2".into()));
    }
    let q = ctx.q();
    if q > caps.scan_cap {
        return Err(Error::SizeCapExceeded {
            what: "criterion scan (q)",
            needed: q as u128,
            cap: caps.scan_cap as u128,
        });
    }
    Ok(q)
}

struct Budget {
    used: u64,
    cap: u64,
}

impl Budget {
    #[inline]
    fn spend(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.cap {
            return Err(Error::SizeCapExceeded {
                what: "criterion evaluations",
                needed: self.used as u128,
                cap: self.cap as u128,
            });
        }
        Ok(())
    }
}

// Walks x = γ^k over F_q^* ∖ □_{q0} and calls `visit(x, χ(x))`; stops when it returns true.
fn scan_odd(
    ctx: &FieldContext,
    caps: &Caps,
    mut visit: impl FnMut(Fe, i8, &mut Budget) -> Result<bool>,
) -> Result<u64> {
    let q = preconditions(ctx, false, caps)?;
    let r = (q - 1) / (ctx.q0() - 1);
    let gamma = ctx.level_generator(Level::Q)?;
    let mut budget = Budget { used: 0, cap: caps.scan_cap };
    let mut x = Fe::ONE;
    for k in 0..q - 1 {
        let in_sq_q0 = k % r == 0 && (k / r) % 2 == 0;
        if !in_sq_q0 {
            let chi = if k % 2 == 0 { 1 } else { -1 };
            if visit(x, chi, &mut budget)? {
                break;
            }
        }
        x = ctx.mul(x, gamma);
    }
    Ok(budget.used)
}

fn odd_condition(ctx: &FieldContext, sq: &SquareSet, betas: &[Fe], x: Fe, chi: i8, budget: &mut Budget) -> Result<bool> {
    for &b in betas {
        budget.spend()?;
        if sq.chi(ctx.sub(x, b)) != chi {
            return Ok(false);
        }
    }
    Ok(true)
}

/// 3 iff some `x ∈ F_q^* ∖ □_{q0}` has `χ(x(x-β)) = 1` for every `β ∈ □_{q0}`.
pub fn rho_criterion_odd(ctx: &FieldContext, caps: &Caps) -> Result<CriterionOutcome> {
    preconditions(ctx, false, caps)?;
    let sq = SquareSet::new(ctx, Level::Q)?;
    let betas = squares_q0(ctx)?;
    let mut witness = None;
    let evaluations = scan_odd(ctx, caps, |x, chi, budget| {
        if odd_condition(ctx, &sq, &betas, x, chi, budget)? {
            witness = Some(x);
            return Ok(true);
        }
        Ok(false)
    })?;
    Ok(CriterionOutcome {
        rho: if witness.is_some() { 3 } else { 2 },
        witness,
        evaluations,
    })
}

/// Number of `x` satisfying the condition of [`rho_criterion_odd`]; needs s odd.
pub fn witness_count_odd(ctx: &FieldContext, caps: &Caps) -> Result<u64> {
    preconditions(ctx, false, caps)?;
    if ctx.spec().s % 2 == 0 {
        return Err(Error::PreconditionViolated("witness count needs odd s".into()));
    }
    let sq = SquareSet::new(ctx, Level::Q)?;
    let betas = squares_q0(ctx)?;
    let mut count = 0u64;
    scan_odd(ctx, caps, |x, chi, budget| {
        if odd_condition(ctx, &sq, &betas, x, chi, budget)? {
            count += 1;
        }
        Ok(false)
    })?;
    Ok(count)
}

/// 3 iff some `α ∈ F_q ∖ F_{q0}` has `Tr(α) = 0` and `Tr(1/(1+bα)) ∈ {0, 1}`
/// for every `b ∈ F_{q0}^*`, traces taken from F_q to F_{q0}.
pub fn rho_criterion_even(ctx: &FieldContext, caps: &Caps) -> Result<CriterionOutcome> {
    let q = preconditions(ctx, true, caps)?;
    let tr = LinearTrace::new(ctx, LevelPair::new(Level::Q, Level::Q0))?;
    let units: Vec<Fe> = ctx.level_elements(Level::Q0)?.into_iter().skip(1).collect();
    let r = (q - 1) / (ctx.q0() - 1);
    let gamma = ctx.level_generator(Level::Q)?;
    let mut budget = Budget { used: 0, cap: caps.scan_cap };
    let mut witness = None;
    let mut alpha = Fe::ONE;
    'scan: for k in 0..q - 1 {
        let a = alpha;
        alpha = ctx.mul(alpha, gamma);
        if k % r == 0 {
            continue;
        }
        budget.spend()?;
        if !tr.eval(ctx, a).is_zero() {
            continue;
        }
        for &b in &units {
            budget.spend()?;
            let t = tr.eval(ctx, ctx.inv(ctx.add(Fe::ONE, ctx.mul(b, a)))?);
            if t != Fe::ZERO && t != Fe::ONE {
                continue 'scan;
            }
        }
        witness = Some(a);
        break;
    }
    Ok(CriterionOutcome {
        rho: if witness.is_some() { 3 } else { 2 },
        witness,
        evaluations: budget.used,
    })
}

/// The criterion matching the parity of q0.
pub fn rho_criterion(ctx: &FieldContext, caps: &Caps) -> Result<CriterionOutcome> {
    if ctx.is_even() {
        rho_criterion_even(ctx, caps)
    } else {
        rho_criterion_odd(ctx, caps)
    }
}
