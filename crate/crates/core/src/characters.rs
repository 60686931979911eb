//! Multiplicative characters of `F_p^×`, Jacobi sums and the normalized
//! binomial coefficient.
//!
//! A character is stored as an exponent `k` mod `p - 1`, meaning `T^k` where
//! `T(g) = exp(2πi / (p - 1))` for the field's primitive root `g`. Sums are
//! accumulated as integer histograms over exponents and only turned into
//! floating-point values at the end, so every root of unity is rounded once.

use std::collections::HashMap;
use std::ops::Mul;
use std::sync::RwLock;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};

/// Values of characters and character sums.
pub type ComplexValue = Complex64;

/// The character `T^k` of `F_p^×`, extended by `χ(0) = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MultChar {
    exp: u64,
    modulus: u64,
}

impl MultChar {
    /// `T^k`, with `k` reduced mod `p - 1`. Negative `k` gives inverse powers.
    pub fn new(field: &PrimeField, k: i64) -> Self {
        let modulus = field.group_order();
        Self {
            exp: k.rem_euclid(modulus as i64) as u64,
            modulus,
        }
    }

    pub fn trivial(field: &PrimeField) -> Self {
        Self::new(field, 0)
    }

    /// The generator `T`.
    pub fn generator(field: &PrimeField) -> Self {
        Self::new(field, 1)
    }

    /// `φ = T^{(p-1)/2}`.
    pub fn quadratic(field: &PrimeField) -> Self {
        Self::new(field, (field.group_order() / 2) as i64)
    }

    /// `ψ = T^{(p-1)/4}`; requires `p ≡ 1 (mod 4)`.
    pub fn quartic(field: &PrimeField) -> Result<Self> {
        Self::of_order_power(field, 4, 1)
    }

    /// `(T^{(p-1)/d})^a`, the `a`-th power of the canonical character of order `d`.
    pub fn of_order_power(field: &PrimeField, d: u64, a: i64) -> Result<Self> {
        let n = field.group_order();
        if d == 0 || n % d != 0 {
            return Err(Error::BadFieldResidue { p: field.p(), modulus: d });
        }
        let t = (n / d) as i64;
        Ok(Self::new(field, t * a.rem_euclid(d as i64)))
    }

    #[inline]
    pub fn exponent(self) -> u64 {
        self.exp
    }

    #[inline]
    pub fn is_trivial(self) -> bool {
        self.exp == 0
    }

    /// Order of the character, `(p - 1) / gcd(k, p - 1)`.
    pub fn order(self) -> u64 {
        self.modulus / num_integer::gcd(self.exp, self.modulus)
    }

    /// The complex conjugate (equivalently inverse) character.
    pub fn conj(self) -> Self {
        Self {
            exp: (self.modulus - self.exp) % self.modulus,
            modulus: self.modulus,
        }
    }

    pub fn pow(self, e: i64) -> Self {
        let m = self.modulus as i128;
        let k = (self.exp as i128 * e as i128).rem_euclid(m);
        Self {
            exp: k as u64,
            modulus: self.modulus,
        }
    }

    fn check_field(self, field: &PrimeField) {
        assert_eq!(
            self.modulus,
            field.group_order(),
            "character belongs to a different field"
        );
    }
}

impl Mul for MultChar {
    type Output = MultChar;

    fn mul(self, rhs: MultChar) -> MultChar {
        assert_eq!(self.modulus, rhs.modulus, "characters of different fields");
        MultChar {
            exp: (self.exp + rhs.exp) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl std::fmt::Display for MultChar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "T^{}", self.exp)
    }
}

/// Counts of roots of unity `ζ^e`, `ζ = exp(2πi/n)`, accumulated exactly.
#[derive(Debug, Clone)]
pub(crate) struct ExponentHistogram {
    counts: Vec<u64>,
}

impl ExponentHistogram {
    pub(crate) fn new(n: u64) -> Self {
        Self {
            counts: vec![0; n as usize],
        }
    }

    #[inline]
    pub(crate) fn push(&mut self, e: u64) {
        self.counts[e as usize] += 1;
    }

    pub(crate) fn total(&self, roots: &[ComplexValue]) -> ComplexValue {
        self.counts
            .iter()
            .zip(roots)
            .filter(|(&c, _)| c != 0)
            .map(|(&c, &z)| z * c as f64)
            .sum()
    }
}

/// The character group of a prime field: evaluation, Jacobi sums and
/// normalized binomials, with an optional Jacobi-sum cache.
pub struct CharacterGroup<'f> {
    field: &'f PrimeField,
    roots: Vec<ComplexValue>,
    jacobi_cache: Option<RwLock<HashMap<(u64, u64), ComplexValue>>>,
}

impl<'f> CharacterGroup<'f> {
    pub fn new(field: &'f PrimeField) -> Self {
        let n = field.group_order();
        let roots = (0..n)
            .map(|e| {
                let theta = std::f64::consts::TAU * e as f64 / n as f64;
                Complex64::new(theta.cos(), theta.sin())
            })
            .collect();
        Self {
            field,
            roots,
            jacobi_cache: None,
        }
    }

    /// Same as [`CharacterGroup::new`] but memoizes `J(T^a, T^b)` by `(a, b)`.
    /// Safe to share across threads; readers only ever see completed entries.
    pub fn with_jacobi_cache(field: &'f PrimeField) -> Self {
        Self {
            jacobi_cache: Some(RwLock::new(HashMap::new())),
            ..Self::new(field)
        }
    }

    #[inline]
    pub fn field(&self) -> &'f PrimeField {
        self.field
    }

    /// `ζ^e` with `ζ = exp(2πi/(p-1))`.
    #[inline]
    pub fn root(&self, e: u64) -> ComplexValue {
        self.roots[(e % self.field.group_order()) as usize]
    }

    pub(crate) fn roots(&self) -> &[ComplexValue] {
        &self.roots
    }

    /// Exponent of `χ(x)` as a power of `ζ`, or `None` when `x = 0`.
    #[inline]
    pub fn eval_exponent(&self, chi: MultChar, x: FieldElement) -> Option<u64> {
        self.field
            .dlog(x)
            .map(|l| crate::field::mul_mod(chi.exp, l, chi.modulus))
    }

    pub fn eval(&self, chi: MultChar, x: FieldElement) -> ComplexValue {
        chi.check_field(self.field);
        match self.eval_exponent(chi, x) {
            Some(e) => self.roots[e as usize],
            None => Complex64::new(0.0, 0.0),
        }
    }

    /// `χ(-1)`, always `±1`.
    pub fn sign(&self, chi: MultChar) -> f64 {
        // dlog(-1) = (p-1)/2, so χ(-1) = (-1)^k
        if chi.exp % 2 == 0 {
            1.0
        } else {
            -1.0
        }
    }

    /// `J(A, B) = Σ_x A(x) B(1 - x)`.
    pub fn jacobi_sum(&self, a: MultChar, b: MultChar) -> ComplexValue {
        a.check_field(self.field);
        b.check_field(self.field);
        let key = (a.exp, b.exp);
        if let Some(cache) = &self.jacobi_cache {
            if let Some(v) = cache.read().expect("jacobi cache poisoned").get(&key) {
                return *v;
            }
            let v = self.jacobi_sum_direct(a, b);
            cache.write().expect("jacobi cache poisoned").insert(key, v);
            v
        } else {
            self.jacobi_sum_direct(a, b)
        }
    }

    fn jacobi_sum_direct(&self, a: MultChar, b: MultChar) -> ComplexValue {
        let f = self.field;
        let n = f.group_order();
        let mut hist = ExponentHistogram::new(n);
        // x = 0 and x = 1 contribute 0
        for x in 2..f.p() {
            let x = f.elem(x as i64);
            let ea = self.eval_exponent(a, x).expect("x nonzero");
            let eb = self
                .eval_exponent(b, f.sub(f.one(), x))
                .expect("1 - x nonzero");
            hist.push((ea + eb) % n);
        }
        hist.total(&self.roots)
    }

    /// Greene's normalized binomial `binom(A; B) = B(-1)/p · J(A, B̄)`.
    pub fn norm_binom(&self, a: MultChar, b: MultChar) -> ComplexValue {
        self.jacobi_sum(a, b.conj()) * (self.sign(b) / self.field.p() as f64)
    }
}
