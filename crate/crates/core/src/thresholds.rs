//! Threshold parameters s^*, s_*, s'_* and the undecided gaps between them.
//!
//! Every inequality has the shape `X - B·√X > C` with `X = q0^s`. For odd s the
//! root is irrational, so the comparison is rewritten as `X - C > B·√X` and
//! decided by squaring with exact integers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::arith::{prime_power, prime_powers_in};
use crate::error::{Error, Result};
use crate::radius::shortcut::rho_shortcuts;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(q0: u64) -> Parity {
        if q0 % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        })
    }
}

impl FromStr for Parity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Parity> {
        match s {
            "odd" => Ok(Parity::Odd),
            "even" => Ok(Parity::Even),
            other => Err(Error::InvalidParameter(format!("unknown parity {other:?}"))),
        }
    }
}

/// Exact truth value of `x - b·√x > c` for `x > 0`.
pub fn exceeds(x: &BigInt, b: &BigInt, c: &BigInt) -> bool {
    let lhs = x - c;
    let rhs_sq = b * b * x;
    if b.is_negative() {
        // right side -|b|√x is negative
        !lhs.is_negative() || &lhs * &lhs < rhs_sq
    } else {
        lhs.is_positive() && &lhs * &lhs > rhs_sq
    }
}

fn check_q0(q0: u64, parity: Parity) -> Result<()> {
    if prime_power(q0).is_none() {
        return Err(Error::NotPrimePower(q0));
    }
    if Parity::of(q0) != parity {
        return Err(Error::PreconditionViolated(format!("q0 = {q0} is not {parity}")));
    }
    Ok(())
}

// Least odd s ≥ 3 with q0^s - B·q0^{s/2} > C. The left side eventually
// dominates, so the loop ends.
fn least_odd_s(q0: u64, b: &BigInt, c: &BigInt) -> u32 {
    let base = BigInt::from(q0);
    let step = &base * &base;
    let mut x = &base * &step;
    let mut s = 3;
    while !exceeds(&x, b, c) {
        x *= &step;
        s += 2;
    }
    s
}

fn pow2(k: u64) -> BigInt {
    BigInt::one() << k
}

/// Largest odd s ≥ 3 with `4(s-1)²q0 < (q0-1)²`, for odd q0.
pub fn s_star_lower_odd(q0: u64) -> Result<Option<u32>> {
    check_q0(q0, Parity::Odd)?;
    Ok(odd_lower_unchecked(q0))
}

fn odd_lower_unchecked(q0: u64) -> Option<u32> {
    let q0 = q0 as u128;
    let holds = |s: u128| 4 * (s - 1) * (s - 1) * q0 < (q0 - 1) * (q0 - 1);
    if !holds(3) {
        return None;
    }
    let mut s = 3;
    while holds(s + 2) {
        s += 2;
    }
    Some(s as u32)
}

/// Least odd s ≥ 3 with `q0^s - q0^{s/2}((m-3)2^{m-1}+2) > 3·2^{m-1} - 1`, m = (q0-1)/2.
pub fn s_star_upper_odd(q0: u64) -> Result<u32> {
    check_q0(q0, Parity::Odd)?;
    let m = (q0 - 1) / 2;
    let b = (BigInt::from(m) - 3) * pow2(m - 1) + 2;
    let c = BigInt::from(3) * pow2(m - 1) - 1;
    Ok(least_odd_s(q0, &b, &c))
}

/// Least odd s ≥ 3 with `q0^s - q0^{s/2}((m-2)2^m+2) > 2^m - 1`; defined for q0 ≥ 5.
pub fn s_prime_star_odd(q0: u64) -> Result<Option<u32>> {
    check_q0(q0, Parity::Odd)?;
    if q0 < 5 {
        return Ok(None);
    }
    let m = (q0 - 1) / 2;
    let b = (BigInt::from(m) - 2) * pow2(m) + 2;
    let c = pow2(m) - 1;
    Ok(Some(least_odd_s(q0, &b, &c)))
}

/// Largest odd s ≥ 3 with s ≤ q0/2, for even q0.
pub fn s_star_lower_even(q0: u64) -> Result<Option<u32>> {
    check_q0(q0, Parity::Even)?;
    let half = q0 / 2;
    if half < 3 {
        return Ok(None);
    }
    Ok(Some(if half % 2 == 1 { half } else { half - 1 } as u32))
}

/// Least odd s ≥ 3 with `q0^s - q0^{s/2}·B > C`, where
/// `B = (q0/2)^{q0-1}(2q0²-7q0+3)` and `C = (q0/2)^{q0-1}(4q0-2) - q0²`.
pub fn s_star_upper_even(q0: u64) -> Result<u32> {
    check_q0(q0, Parity::Even)?;
    let q = BigInt::from(q0);
    let f = num_traits::pow(BigInt::from(q0 / 2), (q0 - 1) as usize);
    let b = &f * (BigInt::from(2) * &q * &q - BigInt::from(7) * &q + 3);
    let c = &f * (BigInt::from(4) * &q - 2) - &q * &q;
    Ok(least_odd_s(q0, &b, &c))
}

/// s^* for either parity.
pub fn s_star_lower(q0: u64) -> Result<Option<u32>> {
    match Parity::of(q0) {
        Parity::Odd => s_star_lower_odd(q0),
        Parity::Even => s_star_lower_even(q0),
    }
}

/// s_* for either parity.
pub fn s_star_upper(q0: u64) -> Result<u32> {
    match Parity::of(q0) {
        Parity::Odd => s_star_upper_odd(q0),
        Parity::Even => s_star_upper_even(q0),
    }
}

/// Odd s strictly between s^* (1 when absent) and s_* that no closed-form rule decides.
pub fn gap_set(q0: u64) -> Result<Vec<u32>> {
    let lower = s_star_lower(q0)?.unwrap_or(1);
    let upper = s_star_upper(q0)?;
    Ok((lower + 2..upper)
        .step_by(2)
        .filter(|&s| rho_shortcuts(q0, s).is_none())
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThresholdReport {
    pub q0: u64,
    pub parity: Parity,
    pub s_star_lower: Option<u32>,
    pub s_star_upper: u32,
    pub s_prime_star: Option<u32>,
    pub gap: Vec<u32>,
}

pub fn threshold_report(q0: u64) -> Result<ThresholdReport> {
    let parity = Parity::of(q0);
    Ok(ThresholdReport {
        q0,
        parity,
        s_star_lower: s_star_lower(q0)?,
        s_star_upper: s_star_upper(q0)?,
        s_prime_star: match parity {
            Parity::Odd => s_prime_star_odd(q0)?,
            Parity::Even => None,
        },
        gap: gap_set(q0)?,
    })
}

/// Reports for every prime power of the given parity in `[2, q0_max]`.
pub fn threshold_table(parity: Parity, q0_max: u64) -> Result<Vec<ThresholdReport>> {
    prime_powers_in(2, q0_max)
        .into_iter()
        .filter(|&q| Parity::of(q) == parity)
        .map(threshold_report)
        .collect()
}

fn cell(v: Option<u32>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// CSV with header; odd tables carry an `s_prime_star` column, gaps are `;`-separated.
pub fn table_csv(parity: Parity, rows: &[ThresholdReport]) -> String {
    let mut out = String::new();
    match parity {
        Parity::Odd => out.push_str("q0,s_star_lower,s_star_upper,s_prime_star,gap\n"),
        Parity::Even => out.push_str("q0,s_star_lower,s_star_upper,gap\n"),
    }
    for r in rows {
        let gap = r.gap.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(";");
        out.push_str(&r.q0.to_string());
        out.push(',');
        out.push_str(&cell(r.s_star_lower));
        out.push(',');
        out.push_str(&r.s_star_upper.to_string());
        out.push(',');
        if parity == Parity::Odd {
            out.push_str(&cell(r.s_prime_star));
            out.push(',');
        }
        out.push_str(&gap);
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaStatus {
    /// q0 < 13 or q0 even.
    NotApplicable,
    Holds,
    Violated,
    /// s_* sits within the guard band of an interval endpoint.
    Ambiguous,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaCheck {
    pub q0: u64,
    pub status: LemmaStatus,
    pub s_star: Option<u32>,
    pub s_prime_star: Option<u32>,
    pub interval: Option<(f64, f64)>,
}

impl LemmaCheck {
    pub fn holds(&self) -> bool {
        self.status == LemmaStatus::Holds
    }
}

const GUARD: f64 = 1e-9;

/// Checks `(q0 ln2 - 5)/ln q0 + 2 < s_* < (q0 ln2 - 5 ln2)/ln q0 + 4` and
/// `s'_* - s_* ∈ {0, 2}` for odd q0 ≥ 13.
pub fn lemma_range_check_odd(q0: u64) -> LemmaCheck {
    let mut out = LemmaCheck {
        q0,
        status: LemmaStatus::NotApplicable,
        s_star: None,
        s_prime_star: None,
        interval: None,
    };
    if q0 < 13 || q0 % 2 == 0 || prime_power(q0).is_none() {
        return out;
    }
    let (Ok(s), Ok(Some(sp))) = (s_star_upper_odd(q0), s_prime_star_odd(q0)) else {
        return out;
    };
    let ln2 = std::f64::consts::LN_2;
    let lq = (q0 as f64).ln();
    let lo = (q0 as f64 * ln2 - 5.0) / lq + 2.0;
    let hi = (q0 as f64 * ln2 - 5.0 * ln2) / lq + 4.0;
    out.s_star = Some(s);
    out.s_prime_star = Some(sp);
    out.interval = Some((lo, hi));
    let sf = s as f64;
    let near = |e: f64| (sf - e).abs() <= GUARD * e.abs().max(1.0);
    let diff_ok = sp >= s && matches!(sp - s, 0 | 2);
    out.status = if !diff_ok {
        LemmaStatus::Violated
    } else if near(lo) || near(hi) {
        LemmaStatus::Ambiguous
    } else if lo < sf && sf < hi {
        LemmaStatus::Holds
    } else {
        LemmaStatus::Violated
    };
    out
}
