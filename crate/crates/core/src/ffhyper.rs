//! Greene's finite-field `2F1`, in its character-sum and point-sum forms,
//! and the `x -> 1/x` inversion transformation.

use num_complex::Complex64;

use crate::characters::{CharacterGroup, ComplexValue, ExponentHistogram, MultChar};
use crate::error::{Error, Result};
use crate::field::FieldElement;

/// Arguments of `2F1(A, B; C | x)_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FF2F1Spec {
    pub a: MultChar,
    pub b: MultChar,
    pub c: MultChar,
    pub x: FieldElement,
}

impl FF2F1Spec {
    pub fn new(a: MultChar, b: MultChar, c: MultChar, x: FieldElement) -> Self {
        Self { a, b, c, x }
    }
}

/// Default absolute bound on identity residuals: `1e-8` up to `p = 10^4`,
/// growing linearly in `p` beyond that.
pub fn identity_tolerance(p: u64) -> f64 {
    1e-8 * (p as f64 / 1e4).max(1.0)
}

/// Default bound for rounding `p`-scaled character sums to integers.
pub fn rounding_tolerance(p: u64) -> f64 {
    1e-6 * p as f64
}

/// Rounds `z` to the nearest rational integer. Fails when `z` is farther
/// than `tol` from that integer (imaginary part included). Returns the
/// integer and the residual `|z - n|`.
pub fn round_to_integer(z: ComplexValue, tol: f64) -> Result<(i64, f64)> {
    let n = z.re.round();
    let residual = (z - Complex64::new(n, 0.0)).norm();
    if !(residual < tol) {
        return Err(Error::RoundingFailure {
            value: format!("{z}"),
            residual,
            tolerance: tol,
        });
    }
    Ok((n as i64, residual))
}

/// Form summing over characters:
/// `p/(p-1) Σ_χ binom(Aχ; χ) binom(Bχ; Cχ) χ(x)`.
///
/// Needs `2(p-1)` Jacobi sums; pass a group built with
/// [`CharacterGroup::with_jacobi_cache`] when evaluating many specs.
pub fn ff_2f1_charsum(group: &CharacterGroup<'_>, spec: &FF2F1Spec) -> ComplexValue {
    let field = group.field();
    let p = field.p() as f64;
    if spec.x.is_zero() {
        return Complex64::new(0.0, 0.0);
    }
    let mut total = Complex64::new(0.0, 0.0);
    for j in 0..field.group_order() as i64 {
        let chi = MultChar::new(field, j);
        let chi_x = group.eval(chi, spec.x);
        let first = group.norm_binom(spec.a * chi, chi);
        let second = group.norm_binom(spec.b * chi, spec.c * chi);
        total += first * second * chi_x;
    }
    total * (p / (p - 1.0))
}

/// Greene's original point-sum form:
/// `ε(x) BC(-1)/p Σ_y B(y) B̄C(1-y) Ā(1-xy)`. Cost `O(p)`.
pub fn ff_2f1_pointsum(group: &CharacterGroup<'_>, spec: &FF2F1Spec) -> ComplexValue {
    let field = group.field();
    if spec.x.is_zero() {
        return Complex64::new(0.0, 0.0);
    }
    let n = field.group_order();
    let b = spec.b;
    let bbar_c = spec.b.conj() * spec.c;
    let abar = spec.a.conj();
    let mut hist = ExponentHistogram::new(n);
    for y in field.units() {
        let one_minus_y = field.sub(field.one(), y);
        let one_minus_xy = field.sub(field.one(), field.mul(spec.x, y));
        let (Some(e1), Some(e2), Some(e3)) = (
            group.eval_exponent(b, y),
            group.eval_exponent(bbar_c, one_minus_y),
            group.eval_exponent(abar, one_minus_xy),
        ) else {
            continue;
        };
        hist.push((e1 + e2 + e3) % n);
    }
    let sign = group.sign(spec.b * spec.c);
    hist.total(group.roots()) * (sign / field.p() as f64)
}

/// `|LHS - RHS|` for the inversion identity
/// `2F1(A,B;C|x) = ABC(-1) Ā(x) 2F1(A, AC̄; AB̄ | 1/x)`, both sides by point sums.
pub fn inversion_transform_residual(group: &CharacterGroup<'_>, spec: &FF2F1Spec) -> Result<f64> {
    let (lhs, rhs) = inversion_transform_sides(group, spec)?;
    Ok((lhs - rhs).norm())
}

/// Both sides of the inversion identity, for reporting.
pub fn inversion_transform_sides(
    group: &CharacterGroup<'_>,
    spec: &FF2F1Spec,
) -> Result<(ComplexValue, ComplexValue)> {
    if spec.x.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let field = group.field();
    let inv_x = field.inv(spec.x)?;
    let (a, b, c) = (spec.a, spec.b, spec.c);
    let lhs = ff_2f1_pointsum(group, spec);
    let transformed = FF2F1Spec::new(a, a * c.conj(), a * b.conj(), inv_x);
    let prefactor = group.eval(a.conj(), spec.x) * group.sign(a * b * c);
    let rhs = prefactor * ff_2f1_pointsum(group, &transformed);
    Ok((lhs, rhs))
}
