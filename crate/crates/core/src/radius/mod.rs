//! Covering radius of C_s(q0) by syndrome walk, by criterion and by closed-form rules.

pub mod criterion;
pub mod oracle;
pub mod shortcut;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Serialize, Serializer};

use crate::arith::{checked_pow, prime_power};
use crate::code::{Variant, ZetterbergCode};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::gf::{Arena, Fe, FieldContext};

pub use criterion::{
    base_context, base_context_nth, rho_criterion, rho_criterion_even, rho_criterion_odd, witness_count_odd,
    CriterionOutcome,
};
pub use oracle::{half_full_radius_equality_check, oracle_layers, step_set, syndrome_layers, Layers};
pub use shortcut::{rho_shortcuts, rho_shortcuts_with, Shortcut};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Oracle,
    Criterion,
    Shortcut(&'static str),
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Oracle => f.write_str("oracle"),
            Method::Criterion => f.write_str("criterion"),
            Method::Shortcut(rule) => write!(f, "shortcut({rule})"),
        }
    }
}

impl Serialize for Method {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Auto,
    Oracle,
    Criterion,
    Shortcut,
    /// Every feasible method, required to agree.
    Verify,
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Strategy> {
        Ok(match s {
            "auto" => Strategy::Auto,
            "oracle" => Strategy::Oracle,
            "criterion" => Strategy::Criterion,
            "shortcut" => Strategy::Shortcut,
            "verify" => Strategy::Verify,
            other => return Err(Error::InvalidParameter(format!("unknown method {other:?}"))),
        })
    }
}

/// A field element together with the field it lives in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementJson {
    /// `"F_q"` or `"F_q^2"`.
    pub field: &'static str,
    pub modulus: Vec<u64>,
    pub coeffs: Vec<u64>,
}

impl ElementJson {
    pub fn new(ctx: &FieldContext, x: Fe) -> ElementJson {
        ElementJson {
            field: match ctx.spec().arena {
                Arena::Base => "F_q",
                Arena::Quadratic => "F_q^2",
            },
            modulus: ctx.spec().modulus.clone(),
            coeffs: ctx.coeffs(x),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub method: Method,
    pub rho: u8,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadiusReport {
    pub q0: u64,
    pub s: u32,
    pub rho: u8,
    pub method: Method,
    pub witness: Option<ElementJson>,
    pub cross_checks: Vec<CrossCheck>,
    pub elapsed_ms: Option<f64>,
}

struct Decision {
    rho: u8,
    method: Method,
    witness: Option<ElementJson>,
}

fn validate(q0: u64, s: u32) -> Result<()> {
    prime_power(q0).ok_or(Error::NotPrimePower(q0))?;
    if s == 0 {
        return Err(Error::InvalidParameter("s must be positive".into()));
    }
    Ok(())
}

/// ρ by the syndrome walk on the full code.
pub fn covering_radius_oracle(code: &ZetterbergCode, caps: &Caps) -> Result<RadiusReport> {
    let start = Instant::now();
    let layers = oracle_layers(code, caps)?;
    let rho = layers.rho();
    Ok(RadiusReport {
        q0: code.q0(),
        s: code.s(),
        rho,
        method: Method::Oracle,
        witness: Some(ElementJson::new(code.ctx(), layers.deepest())),
        cross_checks: vec![CrossCheck { method: Method::Oracle, rho }],
        elapsed_ms: Some(start.elapsed().as_secs_f64() * 1e3),
    })
}

fn by_oracle(q0: u64, s: u32, caps: &Caps) -> Result<Decision> {
    let q2 = checked_pow(q0, 2 * s).unwrap_or(u64::MAX);
    if q2 > caps.oracle_cap {
        return Err(Error::SizeCapExceeded {
            what: "oracle syndrome space (q²)",
            needed: q2 as u128,
            cap: caps.oracle_cap as u128,
        });
    }
    let code = ZetterbergCode::for_params(q0, s, Variant::Full, caps)?;
    let layers = oracle_layers(&code, caps)?;
    Ok(Decision {
        rho: layers.rho(),
        method: Method::Oracle,
        witness: Some(ElementJson::new(code.ctx(), layers.deepest())),
    })
}

fn by_criterion(q0: u64, s: u32, caps: &Caps) -> Result<Decision> {
    if s < 2 {
        return Err(Error::PreconditionViolated("criterion needs s ≥ 2".into()));
    }
    let q = checked_pow(q0, s).unwrap_or(u64::MAX);
    if q > caps.scan_cap {
        return Err(Error::SizeCapExceeded {
            what: "criterion scan (q)",
            needed: q as u128,
            cap: caps.scan_cap as u128,
        });
    }
    let ctx = base_context(q0, s, caps)?;
    let out = rho_criterion(&ctx, caps)?;
    Ok(Decision {
        rho: out.rho,
        method: Method::Criterion,
        witness: out.witness.map(|x| ElementJson::new(&ctx, x)),
    })
}

fn by_shortcut(q0: u64, s: u32, caps: &Caps) -> Option<Decision> {
    let mut known = |d: u32| auto(q0, d, caps).ok().map(|r| r.rho);
    rho_shortcuts_with(q0, s, &mut known).map(|r| Decision {
        rho: r.rho,
        method: Method::Shortcut(r.rule),
        witness: None,
    })
}

fn feasible(r: Result<Decision>) -> Result<Option<Decision>> {
    match r {
        Ok(d) => Ok(Some(d)),
        Err(Error::SizeCapExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

fn auto(q0: u64, s: u32, caps: &Caps) -> Result<Decision> {
    if let Some(d) = by_shortcut(q0, s, caps) {
        return Ok(d);
    }
    if s >= 2 {
        if let Some(d) = feasible(by_criterion(q0, s, caps))? {
            return Ok(d);
        }
    }
    feasible(by_oracle(q0, s, caps))?.ok_or(Error::Undecidable { q0, s })
}

/// ρ(C_s(q0)) by the chosen strategy. `Auto` tries the rules, then the criterion,
/// then the syndrome walk; `Verify` runs all feasible methods and demands agreement.
pub fn covering_radius(q0: u64, s: u32, strategy: Strategy, caps: &Caps) -> Result<RadiusReport> {
    validate(q0, s)?;
    let start = Instant::now();
    let decisions = match strategy {
        Strategy::Auto => vec![auto(q0, s, caps)?],
        Strategy::Oracle => vec![by_oracle(q0, s, caps)?],
        Strategy::Criterion => vec![by_criterion(q0, s, caps)?],
        Strategy::Shortcut => vec![by_shortcut(q0, s, caps).ok_or(Error::Undecidable { q0, s })?],
        Strategy::Verify => {
            let mut all = Vec::new();
            all.extend(feasible(by_oracle(q0, s, caps))?);
            if s >= 2 {
                all.extend(feasible(by_criterion(q0, s, caps))?);
            }
            all.extend(by_shortcut(q0, s, caps));
            if all.is_empty() {
                return Err(Error::Undecidable { q0, s });
            }
            all
        }
    };
    let cross_checks: Vec<CrossCheck> = decisions
        .iter()
        .map(|d| CrossCheck { method: d.method, rho: d.rho })
        .collect();
    let rho = decisions[0].rho;
    if cross_checks.iter().any(|c| c.rho != rho) {
        let listed: Vec<String> = cross_checks.iter().map(|c| format!("{}={}", c.method, c.rho)).collect();
        return Err(Error::Inconsistent(format!(
            "methods disagree for q0 = {q0}, s = {s}: {}",
            listed.join(", ")
        )));
    }
    let in_range = if s == 1 { (1..=2).contains(&rho) } else { (2..=3).contains(&rho) };
    if strategy == Strategy::Verify && !in_range {
        return Err(Error::Inconsistent(format!("ρ = {rho} out of range for s = {s}")));
    }
    let primary = decisions.into_iter().next().expect("nonempty");
    Ok(RadiusReport {
        q0,
        s,
        rho,
        method: primary.method,
        witness: primary.witness,
        cross_checks,
        elapsed_ms: Some(start.elapsed().as_secs_f64() * 1e3),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn auto_uses_rules_first() {
        let r = covering_radius(5, 3, Strategy::Auto, &Caps::default()).unwrap();
        assert_eq!(r.rho, 3);
        assert_eq!(r.method, Method::Shortcut("s>=s_*"));
    }

    #[test]
    fn auto_falls_back_to_criterion() {
        let r = covering_radius(13, 3, Strategy::Auto, &Caps::default()).unwrap();
        assert_eq!(r.rho, 3);
        assert_eq!(r.method, Method::Criterion);
        assert!(r.witness.is_some());
    }

    #[test]
    fn verify_collects_all_methods() {
        let r = covering_radius(3, 2, Strategy::Verify, &Caps::default()).unwrap();
        assert_eq!(r.rho, 3);
        assert_eq!(r.cross_checks.len(), 3);
    }

    #[test]
    fn gap_cell_is_undecidable() {
        assert_eq!(
            covering_radius(16, 9, Strategy::Auto, &Caps::default()),
            Err(Error::Undecidable { q0: 16, s: 9 })
        );
    }

    #[test]
    fn method_serializes_as_string() {
        assert_eq!(Method::Shortcut("s=1").to_string(), "shortcut(s=1)");
        assert_eq!("verify".parse::<Strategy>().unwrap(), Strategy::Verify);
    }
}
