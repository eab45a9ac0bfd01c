use zetterberg::classify::*;
use zetterberg::code::Variant;
use zetterberg::{Caps, Error};

/// (d, ρ, perfect/quasi-perfect, maximal) for each row of the two summary tables.
fn expected(rule: &str) -> Option<(u32, u8, &'static str, bool)> {
    Some(match rule {
        "even q0, s=1" => (3, 1, "perfect", true),
        "q0=2, s=2" => (5, 2, "perfect", true),
        "q0=2, even s>=4" => (5, 3, "quasi-perfect", true),
        "q0>=4, s=2" => (4, 2, "quasi-perfect", true),
        "q0>=4, odd 3<=s<=q0/2" => (3, 2, "quasi-perfect", true),
        "q0>=4, even s>=4" => (4, 3, "-", true),
        "q0=3, s>=2" => (5, 3, "quasi-perfect", true),
        "q0>=5, s=1" => (3, 2, "quasi-perfect", true),
        "q0>=5, even s>=2" => (4, 3, "-", true),
        "q0>=5, odd 3<=s<=s^*" => (3, 2, "quasi-perfect", true),
        _ => return None,
    })
}

fn kind(r: &ClassificationReport) -> &'static str {
    match (r.perfect, r.quasi_perfect) {
        (true, _) => "perfect",
        (_, true) => "quasi-perfect",
        _ => "-",
    }
}

fn check_grid(q0s: &[u64], s_max: u32, variant: Variant) -> Vec<&'static str> {
    let caps = Caps::default();
    let mut rows = Vec::new();
    for &q0 in q0s {
        for s in 1..=s_max {
            if variant == Variant::Half && q0 == 3 && s == 1 {
                continue;
            }
            let rule = table_row(q0, s, variant);
            let Some((d, rho, k, maximal)) = expected(rule) else {
                continue;
            };
            let r = classify(q0, s, variant, &caps).unwrap();
            assert_eq!((r.d, r.rho, kind(&r), r.maximal), (d, rho, k, maximal), "({q0}, {s}, {variant}): {rule}");
            rows.push(rule);
        }
    }
    rows.sort();
    rows.dedup();
    rows
}

#[test]
fn even_table_rows() {
    let rows = check_grid(&[2, 4, 8], 6, Variant::Full);
    assert_eq!(rows.len(), 6, "{rows:?}");
}

#[test]
fn odd_table_rows() {
    let rows = check_grid(&[3, 5, 7], 3, Variant::Half);
    assert_eq!(rows.len(), 3, "{rows:?}");
    // the odd-s row first appears once s^* ≥ 3
    let rows = check_grid(&[19, 23], 3, Variant::Half);
    assert!(rows.contains(&"q0>=5, odd 3<=s<=s^*"), "{rows:?}");
}

#[test]
fn trivial_half_code_is_rejected() {
    assert!(classify(3, 1, Variant::Half, &Caps::default()).is_err());
    assert_eq!(classify(4, 2, Variant::Half, &Caps::default()), Err(Error::HalfVariantNeedsOddQ0));
}

#[test]
fn rows_outside_the_tables_still_get_verdicts() {
    let r = classify(4, 3, Variant::Full, &Caps::default()).unwrap();
    assert_eq!(r.rule, "no table row");
    assert_eq!((r.d, r.rho), (3, 2));
    assert!(r.quasi_perfect && r.maximal);
}

#[test]
fn sweep_outputs() {
    let cells = sweep(&[2, 4], 1..=3, Variant::Full, &Caps::default());
    assert_eq!(cells.len(), 6);
    assert!(cells.iter().all(|c| c.report().is_some()));
    let md = sweep_markdown(&cells);
    assert_eq!(md.lines().count(), 8);
    assert!(md.contains("| 2 | 2 | 5 | 2 | perfect | yes | q0=2, s=2 |"));
    let csv = sweep_csv(&cells);
    assert!(csv.starts_with("q0,s,variant,"));
    assert_eq!(csv.lines().count(), 7);
}

#[test]
fn sweep_marks_open_gaps() {
    let caps = Caps { scan_cap: 1000, ..Caps::default() };
    let cells = sweep(&[13], 3..=3, Variant::Half, &caps);
    assert!(matches!(cells[0], SweepCell::OpenGap { .. } | SweepCell::Failed { .. }), "{:?}", cells[0]);
}
