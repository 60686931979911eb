//! The genus-3 curve `C_λ : y^4 = x(x-1)(x-λ)` over `F_p`: point counts by
//! enumeration and by finite-field `2F1` values, the trace of Frobenius,
//! and the Hasse-Witt matrix from Cartier coefficient extraction.

use serde::Serialize;

use crate::characters::{CharacterGroup, MultChar};
use crate::error::{Error, Result};
use crate::ffhyper::{ff_2f1_pointsum, round_to_integer, rounding_tolerance, FF2F1Spec};
use crate::field::{FieldElement, PrimeField};

pub const GENUS: u64 = 3;

#[derive(Debug, Clone, Copy)]
pub struct LegendreCurve<'f> {
    field: &'f PrimeField,
    lambda: FieldElement,
}

/// Result of the hypergeometric point count with its rounding residual.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FormulaCount {
    pub count: i64,
    pub residual: f64,
}

impl<'f> LegendreCurve<'f> {
    /// Fails with [`Error::SingularCurve`] for `λ ∈ {0, 1}`.
    pub fn new(field: &'f PrimeField, lambda: FieldElement) -> Result<Self> {
        if lambda.value() == 0 || lambda.value() == 1 {
            return Err(Error::SingularCurve { lambda: lambda.value() });
        }
        Ok(Self { field, lambda })
    }

    pub fn field(&self) -> &'f PrimeField {
        self.field
    }

    pub fn lambda(&self) -> FieldElement {
        self.lambda
    }

    /// `f(x) = x(x-1)(x-λ)` at a field element.
    pub fn rhs(&self, x: FieldElement) -> FieldElement {
        let f = self.field;
        f.mul(f.mul(x, f.sub(x, f.one())), f.sub(x, self.lambda))
    }

    /// `1 + Σ_x #{y : y^4 = f(x)}`; the `1` is the single point at infinity.
    pub fn brute_force_count(&self) -> u64 {
        let f = self.field;
        let mut fourth_roots = vec![0u64; f.p() as usize];
        for y in f.elements() {
            fourth_roots[f.pow(y, 4).value() as usize] += 1;
        }
        1 + f
            .elements()
            .map(|x| fourth_roots[self.rhs(x).value() as usize])
            .sum::<u64>()
    }

    /// `p + 1 - #C(F_p)`.
    pub fn trace_frobenius(&self) -> i64 {
        self.field.p() as i64 + 1 - self.brute_force_count() as i64
    }

    /// `|a_p| ≤ 2g√p`.
    pub fn within_weil_bound(trace: i64, p: u64) -> bool {
        (trace as f64).abs() <= 2.0 * GENUS as f64 * (p as f64).sqrt()
    }

    /// `p + 1 + p Σ_{m=1}^{3} ψ^m(-1) 2F1(ψ^{-m}, ψ^m; ψ^{2m} | λ)_p` with
    /// the default rounding tolerance `1e-6·p`.
    pub fn formula_count(&self, group: &CharacterGroup<'_>) -> Result<FormulaCount> {
        self.formula_count_with_tolerance(group, rounding_tolerance(self.field.p()))
    }

    pub fn formula_count_with_tolerance(
        &self,
        group: &CharacterGroup<'_>,
        tol: f64,
    ) -> Result<FormulaCount> {
        let f = self.field;
        assert_eq!(group.field().p(), f.p(), "character group of a different field");
        let psi = MultChar::quartic(f)?;
        let p = f.p() as f64;
        // ε(λ) = 1 since λ ≠ 0
        let sum: num_complex::Complex64 = (1..=3i64)
            .map(|m| {
                let spec = FF2F1Spec::new(psi.pow(-m), psi.pow(m), psi.pow(2 * m), self.lambda);
                ff_2f1_pointsum(group, &spec) * group.sign(psi.pow(m))
            })
            .sum();
        let (scaled, residual) = round_to_integer(sum * p, tol)?;
        Ok(FormulaCount {
            count: f.p() as i64 + 1 + scaled,
            residual,
        })
    }

    /// Cartier-operator matrix on the basis `ω₁ = x dx/y³, ω₂ = dx/y², ω₃ = dx/y³`.
    ///
    /// Writing `ω = x^{a-1} dx / y^b`, the image of `ω` has coefficient on
    /// `x^{a'-1} dx / y^b` equal to the coefficient of `x^{pa' - a}` in
    /// `f^{b(p-1)/4}`. Requires `p ≡ 1 (mod 4)`.
    pub fn hasse_witt(&self) -> Result<HasseWittMatrix> {
        let field = self.field;
        let p = field.p();
        if p % 4 != 1 {
            return Err(Error::BadFieldResidue { p, modulus: 4 });
        }
        let q = ((p - 1) / 4) as usize;
        let lam = self.lambda.value();
        // x^3 - (1+λ) x^2 + λ x
        let cubic = vec![0, lam, (2 * p - 1 - lam) % p, 1];
        let quarter = poly_pow_mod(&cubic, q, p);
        let half = poly_mul_mod(&quarter, &quarter, p);
        let three_quarter = poly_mul_mod(&half, &quarter, p);
        let coeff = |poly: &[u64], k: usize| poly.get(k).copied().unwrap_or(0);

        let mut entries = [[0u64; 3]; 3];
        entries[1][1] = coeff(&half, (p - 1) as usize);
        // ω₁ ↔ a = 2 (index 0), ω₃ ↔ a = 1 (index 2)
        let index = |a: u64| if a == 2 { 0 } else { 2 };
        for a in 1..=2u64 {
            for a_target in 1..=2u64 {
                entries[index(a)][index(a_target)] =
                    coeff(&three_quarter, (p * a_target - a) as usize);
            }
        }
        Ok(HasseWittMatrix { p, entries })
    }
}

/// 3×3 matrix over `F_p`; row = source differential, column = target, both
/// in the order `(ω₁, ω₂, ω₃)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HasseWittMatrix {
    pub p: u64,
    pub entries: [[u64; 3]; 3],
}

impl HasseWittMatrix {
    pub fn trace(&self) -> u64 {
        (0..3).map(|i| self.entries[i][i]).sum::<u64>() % self.p
    }

    /// Entries coupling `ω₂` to `ω₁` or `ω₃` are zero.
    pub fn is_block_diagonal(&self) -> bool {
        [(1, 0), (1, 2), (0, 1), (2, 1)]
            .iter()
            .all(|&(i, j)| self.entries[i][j] == 0)
    }
}

impl std::fmt::Display for HasseWittMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let width = self.p.to_string().len();
        for row in &self.entries {
            writeln!(
                f,
                "[ {:>w$} {:>w$} {:>w$} ]",
                row[0],
                row[1],
                row[2],
                w = width
            )?;
        }
        Ok(())
    }
}

/// Dense product of coefficient vectors mod `p` (index = degree).
pub fn poly_mul_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // accumulate in u128 and reduce once per output coefficient
    let mut acc = vec![0u128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            acc[i + j] += x as u128 * y as u128;
        }
    }
    acc.into_iter().map(|c| (c % p as u128) as u64).collect()
}

pub fn poly_pow_mod(base: &[u64], mut e: usize, p: u64) -> Vec<u64> {
    let mut result = vec![1 % p];
    let mut square = base.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            result = poly_mul_mod(&result, &square, p);
        }
        e >>= 1;
        if e > 0 {
            square = poly_mul_mod(&square, &square, p);
        }
    }
    result
}
