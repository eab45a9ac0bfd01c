//! Closed-form rules deciding ρ(C_s(q0)) without any field computation.

use serde::Serialize;

use crate::arith::prime_power;
use crate::thresholds::{s_star_upper_even, s_star_upper_odd};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Shortcut {
    pub rho: u8,
    pub rule: &'static str,
}

fn fire(rho: u8, rule: &'static str) -> Option<Shortcut> {
    Some(Shortcut { rho, rule })
}

/// The first rule that fires, in priority order. The divisor rule only sees
/// divisors decided by these same rules.
pub fn rho_shortcuts(q0: u64, s: u32) -> Option<Shortcut> {
    rho_shortcuts_with(q0, s, &mut |d| rho_shortcuts(q0, d).map(|r| r.rho))
}

/// As [`rho_shortcuts`], with `known(d)` supplying ρ(C_d(q0)) for proper divisors d ≥ 3 of s.
pub fn rho_shortcuts_with(q0: u64, s: u32, known: &mut dyn FnMut(u32) -> Option<u8>) -> Option<Shortcut> {
    prime_power(q0)?;
    if s == 0 {
        return None;
    }
    let even_s = s % 2 == 0;
    if q0 % 2 == 0 {
        if s == 1 {
            return fire(1, "s=1");
        }
        if s == 2 {
            return fire(2, "s=2");
        }
        if even_s {
            return fire(3, "even s>=4");
        }
        if s as u64 <= q0 / 2 {
            return fire(2, "odd s<=q0/2");
        }
        if s >= s_star_upper_even(q0).ok()? {
            return fire(3, "s>=s_*");
        }
    } else {
        if s == 1 {
            return fire(2, "s=1");
        }
        if q0 == 3 {
            return fire(3, "q0=3");
        }
        if even_s {
            return fire(3, "even s>=2");
        }
        let (s128, q128) = (s as u128, q0 as u128);
        if 4 * (s128 - 1) * (s128 - 1) * q128 < (q128 - 1) * (q128 - 1) {
            return fire(2, "odd s<=s^*");
        }
        if s >= s_star_upper_odd(q0).ok()? {
            return fire(3, "s>=s_*");
        }
    }
    (3..s)
        .step_by(2)
        .filter(|d| s % d == 0)
        .any(|d| known(d) == Some(3))
        .then_some(Shortcut { rho: 3, rule: "divisor" })
}
