//! Exhaustive sweep over `p ≡ 1 (mod 4)`, `λ ∈ F_p \ {0, 1}`.

use std::io::{Read, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::CharacterGroup;
use crate::congruence::match_table;
use crate::curves::LegendreCurve;
use crate::error::Result;
use crate::ffhyper::rounding_tolerance;
use crate::field::{is_prime, PrimeField};

/// CSV column order, also printed by `survey --help`.
pub const CSV_COLUMNS: &str = "p,lambda,brute_count,formula_count,trace,hw_trace_mod_p,hw_block_ok,\
pi1_holds,pi2_holds,pi3_holds,formula_residual,pi2_residual";

/// One curve of the sweep. Empty optional fields mean the computation failed
/// for that curve; the failure is reported separately.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurveyRow {
    pub p: u64,
    pub lambda: u64,
    pub brute_count: u64,
    pub formula_count: Option<i64>,
    pub trace: i64,
    pub hw_trace_mod_p: Option<u64>,
    pub hw_block_ok: Option<bool>,
    pub pi1_holds: Option<bool>,
    pub pi2_holds: Option<bool>,
    pub pi3_holds: Option<bool>,
    #[serde(with = "decimal_string")]
    pub formula_residual: Option<f64>,
    #[serde(with = "decimal_string")]
    pub pi2_residual: Option<f64>,
}

/// Reals are written as shortest round-trip decimal strings.
mod decimal_string {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => s.serialize_some(&format!("{x:e}")),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<f64>, D::Error> {
        Option::<String>::deserialize(d)?
            .filter(|s| !s.is_empty())
            .map(|s| s.parse().map_err(serde::de::Error::custom))
            .transpose()
    }
}

#[derive(Debug, Clone, Default)]
pub struct SurveyOptions {
    pub pmax: u64,
    pub max_p: u64,
    /// Absolute rounding tolerance; `None` means `1e-6·p`.
    pub tolerance: Option<f64>,
    pub jobs: Option<usize>,
    /// Corrupts the first row before checking, to exercise the failure path.
    pub inject_fault: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SurveyFailure {
    pub p: u64,
    pub lambda: u64,
    pub reason: String,
}

#[derive(Debug, Clone, Default)]
pub struct SurveyOutcome {
    pub rows: Vec<SurveyRow>,
    pub failures: Vec<SurveyFailure>,
    /// Per-prime notes on `λ ↔ 1-λ` and `λ ↔ 1/λ` count symmetry; informational.
    pub notes: Vec<String>,
}

pub fn survey_primes(pmax: u64) -> Vec<u64> {
    (5..=pmax).filter(|&p| p % 4 == 1 && is_prime(p)).collect()
}

struct PrimeResult {
    rows: Vec<SurveyRow>,
    errors: Vec<SurveyFailure>,
    note: String,
}

pub fn run_survey(opts: &SurveyOptions) -> Result<SurveyOutcome> {
    let primes = survey_primes(opts.pmax);
    // surface field construction errors (size cap) before spawning work
    if let Some(&largest) = primes.last() {
        PrimeField::with_max(largest, opts.max_p)?;
    }
    let compute = || -> Result<Vec<PrimeResult>> {
        primes.par_iter().map(|&p| survey_prime(p, opts)).collect()
    };
    let per_prime = match opts.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(compute)?,
        None => compute()?,
    };

    let mut outcome = SurveyOutcome::default();
    for result in per_prime {
        outcome.rows.extend(result.rows);
        outcome.failures.extend(result.errors);
        outcome.notes.push(result.note);
    }
    if opts.inject_fault {
        if let Some(row) = outcome.rows.first_mut() {
            row.brute_count += 1;
        }
    }
    let mut checked: Vec<SurveyFailure> = outcome.rows.iter().filter_map(check_row).collect();
    checked.append(&mut outcome.failures);
    checked.sort_by_key(|f| (f.p, f.lambda));
    outcome.failures = checked;
    Ok(outcome)
}

fn survey_prime(p: u64, opts: &SurveyOptions) -> Result<PrimeResult> {
    let field = PrimeField::with_max(p, opts.max_p)?;
    let group = CharacterGroup::new(&field);
    let tol = opts.tolerance.unwrap_or_else(|| rounding_tolerance(p));
    let mut rows = Vec::with_capacity(p as usize - 2);
    let mut errors = Vec::new();
    for lambda in 2..p {
        let curve = LegendreCurve::new(&field, field.elem(lambda as i64))?;
        let brute = curve.brute_force_count();
        let mut row = SurveyRow {
            p,
            lambda,
            brute_count: brute,
            formula_count: None,
            trace: curve.trace_frobenius(),
            hw_trace_mod_p: None,
            hw_block_ok: None,
            pi1_holds: None,
            pi2_holds: None,
            pi3_holds: None,
            formula_residual: None,
            pi2_residual: None,
        };
        let mut fail = |reason: String| errors.push(SurveyFailure { p, lambda, reason });
        match curve.formula_count_with_tolerance(&group, tol) {
            Ok(fc) => {
                row.formula_count = Some(fc.count);
                row.formula_residual = Some(fc.residual);
            }
            Err(e) => fail(format!("formula count: {e}")),
        }
        match curve.hasse_witt() {
            Ok(hw) => {
                row.hw_trace_mod_p = Some(hw.trace());
                row.hw_block_ok = Some(hw.is_block_diagonal());
            }
            Err(e) => fail(format!("hasse-witt: {e}")),
        }
        match match_table(&group, &curve, tol) {
            Ok(table) => {
                row.pi1_holds = table[0].holds;
                row.pi2_holds = table[1].holds;
                row.pi3_holds = table[2].holds;
                row.pi2_residual = table[1].rounding_residual;
                if let Some(e) = &table[1].error {
                    fail(format!("pi2 match: {e}"));
                }
            }
            Err(e) => fail(format!("match table: {e}")),
        }
        rows.push(row);
    }
    Ok(PrimeResult {
        note: symmetry_note(p, &field, &rows),
        rows,
        errors,
    })
}

fn symmetry_note(p: u64, field: &PrimeField, rows: &[SurveyRow]) -> String {
    let count = |lambda: u64| rows[(lambda - 2) as usize].brute_count;
    let total = rows.len();
    let reflect = (2..p).filter(|&l| count(l) == count((p + 1 - l) % p)).count();
    let invert = (2..p)
        .filter(|&l| {
            let inv = field.inv(field.elem(l as i64)).expect("λ ≠ 0").value();
            count(l) == count(inv)
        })
        .count();
    format!(
        "p = {p}: #C(λ) = #C(1-λ) for {reflect}/{total} λ, #C(λ) = #C(1/λ) for {invert}/{total} λ"
    )
}

/// Asserted invariants; returns the first violated one.
pub fn check_row(row: &SurveyRow) -> Option<SurveyFailure> {
    let fail = |reason: String| {
        Some(SurveyFailure {
            p: row.p,
            lambda: row.lambda,
            reason,
        })
    };
    let p = row.p;
    if let Some(fc) = row.formula_count {
        if fc != row.brute_count as i64 {
            return fail(format!("formula count {fc} != brute-force count {}", row.brute_count));
        }
    }
    if row.trace != p as i64 + 1 - row.brute_count as i64 {
        return fail(format!("trace {} != p + 1 - #C", row.trace));
    }
    if !LegendreCurve::within_weil_bound(row.trace, p) {
        return fail(format!("trace {} violates the Weil bound", row.trace));
    }
    let expected = (p as i64 + 1 - row.brute_count as i64).rem_euclid(p as i64) as u64;
    if let Some(hw) = row.hw_trace_mod_p {
        if hw != expected {
            return fail(format!("Hasse-Witt trace {hw} != (p + 1 - #C) mod p = {expected}"));
        }
    }
    if row.hw_block_ok == Some(false) {
        return fail("Hasse-Witt matrix has nonzero off-block entries".into());
    }
    if row.pi2_holds == Some(false) {
        return fail("pi2 congruence does not hold".into());
    }
    None
}

pub fn write_csv<W: Write>(rows: &[SurveyRow], out: W) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()
}

pub fn read_csv<R: Read>(input: R) -> csv::Result<Vec<SurveyRow>> {
    csv::Reader::from_reader(input).deserialize().collect()
}

pub fn write_json<W: Write>(rows: &[SurveyRow], mut out: W) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut out, rows)?;
    writeln!(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts(pmax: u64) -> SurveyOptions {
        SurveyOptions {
            pmax,
            max_p: crate::field::DEFAULT_MAX_P,
            ..Default::default()
        }
    }

    #[test]
    fn primes_in_sweep() {
        assert_eq!(survey_primes(29), vec![5, 13, 17, 29]);
        assert!(survey_primes(4).is_empty());
    }

    #[test]
    fn small_sweep_passes() {
        let outcome = run_survey(&opts(29)).unwrap();
        assert_eq!(outcome.rows.len(), 3 + 11 + 15 + 27);
        assert!(outcome.failures.is_empty(), "{:?}", outcome.failures);
        assert_eq!(outcome.notes.len(), 4);
        let order: Vec<_> = outcome.rows.iter().map(|r| (r.p, r.lambda)).collect();
        let mut sorted = order.clone();
        sorted.sort();
        assert_eq!(order, sorted);
    }

    #[test]
    fn injected_fault_is_caught() {
        let outcome = run_survey(&SurveyOptions { inject_fault: true, ..opts(13) }).unwrap();
        assert_eq!(outcome.failures[0].p, 5);
        assert_eq!(outcome.failures[0].lambda, 2);
    }

    #[test]
    fn csv_column_order() {
        let outcome = run_survey(&opts(5)).unwrap();
        let mut buf = Vec::new();
        write_csv(&outcome.rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next().unwrap(), CSV_COLUMNS);
        assert_eq!(read_csv(text.as_bytes()).unwrap(), outcome.rows);
    }

    #[test]
    fn json_round_trip() {
        let outcome = run_survey(&opts(13)).unwrap();
        let mut buf = Vec::new();
        write_json(&outcome.rows, &mut buf).unwrap();
        let back: Vec<SurveyRow> = serde_json::from_slice(&buf).unwrap();
        assert_eq!(back, outcome.rows);
    }

    #[test]
    fn size_cap_applies() {
        let err = run_survey(&SurveyOptions { max_p: 10, ..opts(29) }).unwrap_err();
        assert!(matches!(err, crate::Error::TooLarge { .. }));
    }
}
