//! Congruences between truncated classical `2F1` series and `-p` times
//! finite-field `2F1` values, including the period/point-count matching
//! table for `y^4 = x(x-1)(x-λ)`.

use num_complex::Complex64;
use serde::Serialize;

use crate::characters::{CharacterGroup, ComplexValue, MultChar};
use crate::classical::{period_params, truncated_2f1_mod_p, ClassicalParams};
use crate::curves::LegendreCurve;
use crate::error::{Error, Result};
use crate::ffhyper::{ff_2f1_pointsum, round_to_integer, FF2F1Spec};
use crate::field::{FieldElement, PrimeField};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CongruenceReport {
    pub p: u64,
    pub x: u64,
    /// Truncated classical series mod `p`.
    pub lhs_residue: u64,
    /// `round(-p · 2F1(...)_p) mod p`.
    pub rhs_residue: u64,
    pub holds: bool,
    pub rounding_residual: f64,
}

/// Checks `2F1(m/d, (d-m)/d; 1 | x)_{tr(p)} ≡ -p 2F1(T^{mt}, T̄^{mt}; ε | x)_p`
/// with `t = (p-1)/d`.
pub fn check_thm_congruence(
    group: &CharacterGroup<'_>,
    m: u64,
    d: u64,
    x: FieldElement,
    tol: f64,
) -> Result<CongruenceReport> {
    let field = group.field();
    let p = field.p();
    if !(1 <= m && m < d) {
        return Err(Error::PreconditionViolation(format!("need 1 <= m < d, got m = {m}, d = {d}")));
    }
    if (p - 1) % d != 0 {
        return Err(Error::PreconditionViolation(format!("p = {p} is not 1 mod {d}")));
    }
    if x.is_zero() {
        return Err(Error::PreconditionViolation("x must be nonzero".into()));
    }
    let params = ClassicalParams::from_fractions((m as i64, d as i64), ((d - m) as i64, d as i64), (1, 1))?;
    let lhs = truncated_2f1_mod_p(&params, x, field)?;

    let t = ((p - 1) / d) as i64;
    let a = MultChar::new(field, m as i64 * t);
    let spec = FF2F1Spec::new(a, a.conj(), MultChar::trivial(field), x);
    let value = ff_2f1_pointsum(group, &spec) * -(p as f64);
    let (n, residual) = round_to_integer(value, tol)?;
    let rhs = field.elem(n);
    Ok(CongruenceReport {
        p,
        x: x.value(),
        lhs_residue: lhs.value(),
        rhs_residue: rhs.value(),
        holds: lhs == rhs,
        rounding_residual: residual,
    })
}

/// [`check_thm_congruence`] for every `x ∈ F_p^×`, ascending.
pub fn congruence_sweep(
    group: &CharacterGroup<'_>,
    m: u64,
    d: u64,
    tol: f64,
) -> Result<Vec<CongruenceReport>> {
    group
        .field()
        .units()
        .map(|x| check_thm_congruence(group, m, d, x, tol))
        .collect()
}

/// One period paired with the matching summand of the hypergeometric
/// point count.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatchRow {
    pub period_index: u8,
    pub classical: String,
    /// Exponents `(A, B, C)` of the characters, as powers of `T`.
    pub characters: [u64; 3],
    pub lhs_residue: Option<u64>,
    pub rhs_residue: Option<u64>,
    /// `-p · 2F1(A, B; C | λ)_p` rounded to a Gaussian integer `(re, im)`.
    pub rhs_value: Option<[i64; 2]>,
    pub holds: Option<bool>,
    pub rounding_residual: Option<f64>,
    pub error: Option<String>,
}

/// Character triples paired with `π₁, π₂, π₃`: the `m = 1, 2, 3` summands
/// `(ψ^{-m}, ψ^m; ψ^{2m})`.
pub fn matching_characters(field: &PrimeField) -> Result<[(u8, [MultChar; 3]); 3]> {
    let psi = MultChar::quartic(field)?;
    let triple = |m: i64| [psi.pow(-m), psi.pow(m), psi.pow(2 * m)];
    Ok([(1, triple(1)), (2, triple(2)), (3, triple(3))])
}

/// Compares each truncated period series with `-p` times its matching
/// finite-field value at `λ`.
///
/// Only the `π₂` row is expected to hold. The `π₁` and `π₃` values
/// can be non-real; they are rounded to Gaussian integers `u + v i` and
/// reduced with `i ↦ g^{(p-1)/4} mod p`, the image of `T(g) = ζ_{p-1} ↦ g`.
/// Per-row failures are recorded in [`MatchRow::error`].
pub fn match_table(
    group: &CharacterGroup<'_>,
    curve: &LegendreCurve<'_>,
    tol: f64,
) -> Result<Vec<MatchRow>> {
    let field = curve.field();
    assert_eq!(group.field().p(), field.p(), "character group of a different field");
    let triples = matching_characters(field)?;
    let p = field.p();
    let i_image = field.pow(field.elem(field.generator() as i64), (p - 1) / 4);
    let lambda = curve.lambda();

    let rows = triples
        .iter()
        .map(|&(index, [a, b, c])| {
            let params = period_params(index).expect("index in 1..=3");
            let mut row = MatchRow {
                period_index: index,
                classical: params.to_string(),
                characters: [a.exponent(), b.exponent(), c.exponent()],
                lhs_residue: None,
                rhs_residue: None,
                rhs_value: None,
                holds: None,
                rounding_residual: None,
                error: None,
            };
            let mut errors = Vec::new();
            match truncated_2f1_mod_p(&params, lambda, field) {
                Ok(v) => row.lhs_residue = Some(v.value()),
                Err(e) => errors.push(e.to_string()),
            }
            let value = ff_2f1_pointsum(group, &FF2F1Spec::new(a, b, c, lambda)) * -(p as f64);
            match round_gaussian(value, tol) {
                Ok(([re, im], residual)) => {
                    let rhs = field.add(field.elem(re), field.mul(field.elem(im), i_image));
                    row.rhs_value = Some([re, im]);
                    row.rhs_residue = Some(rhs.value());
                    row.rounding_residual = Some(residual);
                }
                Err(e) => errors.push(e.to_string()),
            }
            if let (Some(l), Some(r)) = (row.lhs_residue, row.rhs_residue) {
                row.holds = Some(l == r);
            }
            if !errors.is_empty() {
                row.error = Some(errors.join("; "));
            }
            row
        })
        .collect();
    Ok(rows)
}

fn round_gaussian(z: ComplexValue, tol: f64) -> Result<([i64; 2], f64)> {
    let (re, im) = (z.re.round(), z.im.round());
    let residual = (z - Complex64::new(re, im)).norm();
    if !(residual < tol) {
        return Err(Error::RoundingFailure {
            value: format!("{z}"),
            residual,
            tolerance: tol,
        });
    }
    Ok(([re as i64, im as i64], residual))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffhyper::rounding_tolerance;

    #[test]
    fn quadratic_and_quartic_cases_in_f13() {
        let f = PrimeField::new(13).unwrap();
        let g = CharacterGroup::new(&f);
        for (m, d) in [(1, 2), (1, 4), (3, 4)] {
            let reports = congruence_sweep(&g, m, d, rounding_tolerance(13)).unwrap();
            assert_eq!(reports.len(), 12);
            assert!(reports.iter().all(|r| r.holds), "(m, d) = ({m}, {d})");
            assert!(reports.iter().all(|r| r.rounding_residual < 1e-6 * 13.0));
        }
    }

    #[test]
    fn preconditions() {
        let f = PrimeField::new(7).unwrap();
        let g = CharacterGroup::new(&f);
        let tol = rounding_tolerance(7);
        assert!(matches!(
            check_thm_congruence(&g, 1, 4, f.elem(2), tol),
            Err(Error::PreconditionViolation(_))
        ));
        assert!(check_thm_congruence(&g, 1, 2, f.elem(2), tol).unwrap().holds);
        assert!(matches!(
            check_thm_congruence(&g, 1, 2, f.zero(), tol),
            Err(Error::PreconditionViolation(_))
        ));
        assert!(matches!(
            check_thm_congruence(&g, 2, 2, f.one(), tol),
            Err(Error::PreconditionViolation(_))
        ));
        assert!(matches!(
            check_thm_congruence(&g, 0, 3, f.one(), tol),
            Err(Error::PreconditionViolation(_))
        ));
    }

    #[test]
    fn match_table_f13() {
        let f = PrimeField::new(13).unwrap();
        let g = CharacterGroup::new(&f);
        let curve = LegendreCurve::new(&f, f.elem(2)).unwrap();
        let rows = match_table(&g, &curve, rounding_tolerance(13)).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[1].characters, [6, 6, 0]);
        assert_eq!(rows[1].holds, Some(true));
        assert_eq!(rows[0].characters, [9, 3, 6]);
        assert_eq!(rows[2].characters, [3, 9, 6]);
        for row in [&rows[0], &rows[2]] {
            assert!(row.lhs_residue.is_some() && row.rhs_residue.is_some());
            assert!(row.error.is_none());
        }
    }

    #[test]
    fn gaussian_values_are_reduced() {
        // at λ = 4 the π₁ summand is non-real over F_13
        let f = PrimeField::new(13).unwrap();
        let g = CharacterGroup::new(&f);
        let curve = LegendreCurve::new(&f, f.elem(4)).unwrap();
        let rows = match_table(&g, &curve, rounding_tolerance(13)).unwrap();
        let [re, im] = rows[0].rhs_value.unwrap();
        assert_ne!(im, 0);
        // g = 2, i ↦ 2^3 = 8
        assert_eq!(rows[0].rhs_residue, Some((re + 8 * im).rem_euclid(13) as u64));
    }

    #[test]
    fn match_table_rejects_p_3_mod_4() {
        let f = PrimeField::new(7).unwrap();
        let g = CharacterGroup::new(&f);
        let curve = LegendreCurve::new(&f, f.elem(3)).unwrap();
        assert_eq!(
            match_table(&g, &curve, 1.0).unwrap_err(),
            Error::BadFieldResidue { p: 7, modulus: 4 }
        );
    }

    #[test]
    fn rounding_failure_is_per_row() {
        let f = PrimeField::new(13).unwrap();
        let g = CharacterGroup::new(&f);
        let curve = LegendreCurve::new(&f, f.elem(4)).unwrap();
        let rows = match_table(&g, &curve, 0.0).unwrap();
        assert!(rows.iter().all(|r| r.holds.is_none() && r.error.is_some()));
        assert!(rows.iter().all(|r| r.lhs_residue.is_some()));
    }
}
