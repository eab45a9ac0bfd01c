//! Perfect, quasi-perfect and maximal verdicts from d and ρ.

use serde::Serialize;

use crate::code::{code_parameters, min_distance_formula, Variant};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::radius::{covering_radius, Method, Strategy};
use crate::thresholds::s_star_lower_odd;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationReport {
    pub q0: u64,
    pub s: u32,
    pub variant: Variant,
    pub length: u64,
    pub dimension: u64,
    pub d: u32,
    pub rho: u8,
    pub perfect: bool,
    pub quasi_perfect: bool,
    pub maximal: bool,
    /// The table row whose hypotheses the parameters satisfy.
    pub rule: &'static str,
    pub method: Method,
}

/// Verdicts for the given d and ρ: (perfect, quasi-perfect, maximal).
pub fn verdicts(d: u32, rho: u8) -> (bool, bool, bool) {
    let t = (d - 1) / 2;
    let rho = rho as u32;
    (rho == t, rho == t + 1, rho < d)
}

/// Name of the classification-table row covering `(q0, s, variant)`.
pub fn table_row(q0: u64, s: u32, variant: Variant) -> &'static str {
    let even_s = s % 2 == 0;
    match variant {
        Variant::Full if q0 % 2 == 1 => "odd q0, full code",
        Variant::Full if s == 1 => "even q0, s=1",
        Variant::Full if q0 == 2 && s == 2 => "q0=2, s=2",
        Variant::Full if q0 == 2 && even_s => "q0=2, even s>=4",
        Variant::Full if q0 >= 4 && s == 2 => "q0>=4, s=2",
        Variant::Full if q0 >= 4 && even_s => "q0>=4, even s>=4",
        Variant::Full if q0 >= 4 && s >= 3 && s as u64 <= q0 / 2 => "q0>=4, odd 3<=s<=q0/2",
        Variant::Half if q0 == 3 && s >= 2 => "q0=3, s>=2",
        Variant::Half if q0 >= 5 && s == 1 => "q0>=5, s=1",
        Variant::Half if q0 >= 5 && even_s => "q0>=5, even s>=2",
        Variant::Half
            if q0 >= 5 && s >= 3 && s_star_lower_odd(q0).ok().flatten().is_some_and(|t| s <= t) =>
        {
            "q0>=5, odd 3<=s<=s^*"
        }
        _ => "no table row",
    }
}

/// Classification of one code. ρ is the covering radius of the full code, which
/// the half code shares.
pub fn classify(q0: u64, s: u32, variant: Variant, caps: &Caps) -> Result<ClassificationReport> {
    let (length, dimension) = code_parameters(q0, s, variant)?;
    let d = min_distance_formula(q0, s, variant)?;
    let r = covering_radius(q0, s, Strategy::Auto, caps)?;
    let (perfect, quasi_perfect, maximal) = verdicts(d, r.rho);
    Ok(ClassificationReport {
        q0,
        s,
        variant,
        length,
        dimension,
        d,
        rho: r.rho,
        perfect,
        quasi_perfect,
        maximal,
        rule: table_row(q0, s, variant),
        method: r.method,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SweepCell {
    Decided(ClassificationReport),
    OpenGap { q0: u64, s: u32, variant: Variant, d: u32, rule: &'static str },
    Failed { q0: u64, s: u32, variant: Variant, error: String },
}

impl SweepCell {
    pub fn key(&self) -> (u64, u32) {
        match self {
            SweepCell::Decided(r) => (r.q0, r.s),
            SweepCell::OpenGap { q0, s, .. } | SweepCell::Failed { q0, s, .. } => (*q0, *s),
        }
    }

    pub fn report(&self) -> Option<&ClassificationReport> {
        match self {
            SweepCell::Decided(r) => Some(r),
            _ => None,
        }
    }
}

/// One cell per `(q0, s)`, in order; failures are kept in the grid.
pub fn sweep(q0s: &[u64], s_range: std::ops::RangeInclusive<u32>, variant: Variant, caps: &Caps) -> Vec<SweepCell> {
    let mut out = Vec::new();
    for &q0 in q0s {
        for s in s_range.clone() {
            out.push(match classify(q0, s, variant, caps) {
                Ok(r) => SweepCell::Decided(r),
                Err(Error::Undecidable { .. }) => SweepCell::OpenGap {
                    q0,
                    s,
                    variant,
                    d: min_distance_formula(q0, s, variant).unwrap_or(0),
                    rule: "open gap",
                },
                Err(e) => SweepCell::Failed { q0, s, variant, error: e.to_string() },
            });
        }
    }
    out
}

fn kind(r: &ClassificationReport) -> &'static str {
    if r.perfect {
        "perfect"
    } else if r.quasi_perfect {
        "quasi-perfect"
    } else {
        "-"
    }
}

/// Markdown table with the columns q0, s, d, ρ, perfect/quasi-perfect, maximal, rule.
pub fn sweep_markdown(cells: &[SweepCell]) -> String {
    let mut out = String::from("| q0 | s | d | rho | perfect/quasi-perfect | maximal | rule |\n");
    out.push_str("|---|---|---|---|---|---|---|\n");
    for c in cells {
        let line = match c {
            SweepCell::Decided(r) => format!(
                "| {} | {} | {} | {} | {} | {} | {} |",
                r.q0,
                r.s,
                r.d,
                r.rho,
                kind(r),
                if r.maximal { "yes" } else { "no" },
                r.rule
            ),
            SweepCell::OpenGap { q0, s, d, rule, .. } => {
                format!("| {q0} | {s} | {d} | ? | ? | ? | {rule} |")
            }
            SweepCell::Failed { q0, s, error, .. } => format!("| {q0} | {s} | | | | | error: {error} |"),
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// CSV with the same content as [`sweep_markdown`] plus the code parameters.
pub fn sweep_csv(cells: &[SweepCell]) -> String {
    let mut out = String::from("q0,s,variant,length,dimension,d,rho,perfect,quasi_perfect,maximal,rule\n");
    for c in cells {
        let line = match c {
            SweepCell::Decided(r) => format!(
                "{},{},{},{},{},{},{},{},{},{},{}",
                r.q0, r.s, r.variant, r.length, r.dimension, r.d, r.rho, r.perfect, r.quasi_perfect, r.maximal, r.rule
            ),
            SweepCell::OpenGap { q0, s, variant, d, rule } => {
                let (n, k) = code_parameters(*q0, *s, *variant).unwrap_or((0, 0));
                format!("{q0},{s},{variant},{n},{k},{d},,,,,{rule}")
            }
            SweepCell::Failed { q0, s, variant, error } => {
                format!("{q0},{s},{variant},,,,,,,,\"error: {}\"", error.replace('"', "'"))
            }
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}
