//! Classical `2F1` series over exact rationals: Pochhammer symbols, partial
//! sums, truncated series reduced mod `p`, and the hypergeometric operators
//! satisfied by the three periods of `y^4 = x(x-1)(x-λ)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};

pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"n"` or `"n/d"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("not a rational: {s:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("not a rational: {s:?}")))?;
    if den.is_zero() {
        return Err(Error::InvalidParameter(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Reduces `u/v` to `u · v^{-1} mod p`. Fails when `p | v`.
pub fn reduce_mod_p(r: &Rational, field: &PrimeField) -> Result<FieldElement> {
    let p = BigInt::from(field.p());
    let residue = |n: &BigInt| -> i64 {
        let r = ((n % &p) + &p) % &p;
        i64::try_from(r).expect("residue fits in i64")
    };
    let den = field.elem(residue(r.denom()));
    let inv = field.inv(den).map_err(|_| {
        Error::PreconditionViolation(format!("p = {} divides the denominator of {r}", field.p()))
    })?;
    Ok(field.mul(field.elem(residue(r.numer())), inv))
}

/// Rising factorial `(α)_k = α(α+1)...(α+k-1)`, with `(α)_0 = 1`.
pub fn pochhammer(alpha: &Rational, k: u64) -> Rational {
    let mut acc = Rational::one();
    let mut factor = alpha.clone();
    for _ in 0..k {
        acc *= &factor;
        factor += Rational::one();
    }
    acc
}

/// Parameters `(a, b; c)` of a classical `2F1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalParams {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl ClassicalParams {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        if c.is_integer() && !c.is_positive() {
            return Err(Error::InvalidParameter(format!(
                "lower parameter c = {c} is a nonpositive integer"
            )));
        }
        Ok(Self { a, b, c })
    }

    /// Shorthand for small fractions: `from_fractions((1,4), (3,4), (1,2))`.
    pub fn from_fractions(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> Result<Self> {
        Self::new(rational(a.0, a.1), rational(b.0, b.1), rational(c.0, c.1))
    }
}

impl std::fmt::Display for ClassicalParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}; {})", self.a, self.b, self.c)
    }
}

/// Coefficients `t_k = (a)_k (b)_k / ((c)_k k!)` for `k = 0..=N`.
#[derive(Debug, Clone)]
pub struct SeriesTermTable {
    params: ClassicalParams,
    coeffs: Vec<Rational>,
}

impl SeriesTermTable {
    /// Builds the table from running Pochhammer products, not from the
    /// term-ratio recurrence, so [`SeriesTermTable::satisfies_recurrence`]
    /// is a genuine check.
    pub fn new(params: &ClassicalParams, n: usize) -> Self {
        let one = Rational::one();
        let (mut pa, mut pb, mut pc, mut fact) = (one.clone(), one.clone(), one.clone(), one);
        let mut coeffs = Vec::with_capacity(n + 1);
        for k in 0..=n {
            if k > 0 {
                let j = Rational::from_integer(BigInt::from(k - 1));
                pa *= &params.a + &j;
                pb *= &params.b + &j;
                pc *= &params.c + &j;
                fact *= Rational::from_integer(BigInt::from(k));
            }
            coeffs.push(&pa * &pb / (&pc * &fact));
        }
        Self {
            params: params.clone(),
            coeffs,
        }
    }

    pub fn params(&self) -> &ClassicalParams {
        &self.params
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Overwrites one coefficient; used to build negative controls.
    pub fn set_coeff(&mut self, k: usize, value: Rational) {
        self.coeffs[k] = value;
    }

    /// `t_0 = 1` and `(k+1)(c+k) t_{k+1} = (a+k)(b+k) t_k` for every `k < N`.
    /// This is the hypergeometric ODE applied to the power series term by term.
    pub fn satisfies_recurrence(&self) -> bool {
        let ClassicalParams { a, b, c } = &self.params;
        self.coeffs.first().is_some_and(|t0| t0.is_one())
            && self.coeffs.windows(2).enumerate().all(|(k, w)| {
                let k = Rational::from_integer(BigInt::from(k));
                let left = (&k + Rational::one()) * (c + &k) * &w[1];
                let right = (a + &k) * (b + &k) * &w[0];
                left == right
            })
    }

    /// `Σ_{k=0}^{N} t_k x^k`.
    pub fn evaluate(&self, x: &Rational) -> Rational {
        // Horner
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, t| acc * x + t)
    }
}

/// Exact partial sum `Σ_{k=0}^{N} t_k x^k`.
pub fn classical_2f1_partial(params: &ClassicalParams, x: &Rational, n: usize) -> Rational {
    SeriesTermTable::new(params, n).evaluate(x)
}

/// Residues of the first `m` coefficients `t_0, ..., t_{m-1}` mod `p`.
///
/// Walking the index `j = 0, 1, ...`, the numerator factors `(a+j)(b+j)` are
/// checked first: once one vanishes mod `p` every later coefficient is zero.
/// A vanishing denominator factor `(c+j)(1+j)` reached before that is an error.
pub fn truncated_coeffs_mod(
    params: &ClassicalParams,
    field: &PrimeField,
    m: usize,
) -> Result<Vec<FieldElement>> {
    let a = reduce_mod_p(&params.a, field)?;
    let b = reduce_mod_p(&params.b, field)?;
    let c = reduce_mod_p(&params.c, field)?;
    let mut coeffs = vec![field.zero(); m];
    if m == 0 {
        return Ok(coeffs);
    }
    let mut term = field.one();
    coeffs[0] = term;
    for j in 0..m - 1 {
        let jj = field.elem(j as i64);
        let num = field.mul(field.add(a, jj), field.add(b, jj));
        if num.is_zero() {
            break;
        }
        let den = field.mul(field.add(c, jj), field.add(field.one(), jj));
        if den.is_zero() {
            return Err(Error::DenominatorVanishes {
                p: field.p(),
                index: j as u64,
            });
        }
        term = field.mul(term, field.div(num, den)?);
        coeffs[j + 1] = term;
    }
    Ok(coeffs)
}

/// `2F1(a, b; c | x)_{tr(m)} mod p`: the first `m` terms reduced mod `p`.
pub fn truncated_2f1_mod(
    params: &ClassicalParams,
    x: FieldElement,
    field: &PrimeField,
    m: usize,
) -> Result<FieldElement> {
    let coeffs = truncated_coeffs_mod(params, field, m)?;
    Ok(eval_poly_mod(&coeffs, x, field))
}

/// [`truncated_2f1_mod`] at the default truncation `tr(p)`.
pub fn truncated_2f1_mod_p(
    params: &ClassicalParams,
    x: FieldElement,
    field: &PrimeField,
) -> Result<FieldElement> {
    truncated_2f1_mod(params, x, field, field.p() as usize)
}

pub(crate) fn eval_poly_mod(coeffs: &[FieldElement], x: FieldElement, field: &PrimeField) -> FieldElement {
    coeffs
        .iter()
        .rev()
        .fold(field.zero(), |acc, &t| field.add(field.mul(acc, x), t))
}

/// Parameters of the period `π_i`, `i ∈ {1, 2, 3}`.
pub fn period_params(i: u8) -> Result<ClassicalParams> {
    match i {
        1 => ClassicalParams::from_fractions((1, 4), (3, 4), (1, 2)),
        2 => ClassicalParams::from_fractions((1, 2), (1, 2), (1, 1)),
        3 => ClassicalParams::from_fractions((3, 4), (5, 4), (3, 2)),
        _ => Err(Error::InvalidParameter(format!("period index {i} not in 1..=3"))),
    }
}

/// A second-order operator
/// `κ + (α - βλ) d/dλ + λ(1-λ) d²/dλ²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypergeometricOperator {
    pub constant: Rational,
    pub d1_constant: Rational,
    pub d1_linear: Rational,
}

impl HypergeometricOperator {
    /// The operator annihilating `2F1(a, b; c | λ)`:
    /// `κ = -ab`, `α = c`, `β = a + b + 1`.
    pub fn for_params(params: &ClassicalParams) -> Self {
        Self {
            constant: -(&params.a * &params.b),
            d1_constant: params.c.clone(),
            d1_linear: &params.a + &params.b + Rational::one(),
        }
    }

    /// Solves `ab = -κ`, `a + b = β - 1`, `c = α` for rational `a ≤ b`.
    /// Fails when the roots are irrational.
    pub fn solve_params(&self) -> Result<ClassicalParams> {
        let sum = &self.d1_linear - Rational::one();
        let prod = -self.constant.clone();
        let disc = &sum * &sum - Rational::from_integer(BigInt::from(4)) * prod;
        let root = rational_sqrt(&disc).ok_or_else(|| {
            Error::InvalidParameter(format!("discriminant {disc} is not a rational square"))
        })?;
        let two = Rational::from_integer(BigInt::from(2));
        let a = (&sum - &root) / &two;
        let b = (&sum + &root) / &two;
        ClassicalParams::new(a, b, self.d1_constant.clone())
    }
}

/// The operators `F_1, F_2, F_3` annihilating the periods `π_1, π_2, π_3`.
pub fn period_operator(i: u8) -> Result<HypergeometricOperator> {
    let op = |k: (i64, i64), a: (i64, i64), b: i64| HypergeometricOperator {
        constant: rational(k.0, k.1),
        d1_constant: rational(a.0, a.1),
        d1_linear: rational(b, 1),
    };
    match i {
        1 => Ok(op((-3, 16), (1, 2), 2)),
        2 => Ok(op((-1, 4), (1, 1), 2)),
        3 => Ok(op((-15, 16), (3, 2), 3)),
        _ => Err(Error::InvalidParameter(format!("period index {i} not in 1..=3"))),
    }
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let exact = |n: &BigInt| {
        let s = n.sqrt();
        (&s * &s == *n).then_some(s)
    };
    Some(Rational::new(exact(r.numer())?, exact(r.denom())?))
}

/// True iff the term table of `params` satisfies the hypergeometric
/// recurrence exactly up to index `n`.
pub fn ode_recurrence_check(params: &ClassicalParams, n: usize) -> bool {
    SeriesTermTable::new(params, n).satisfies_recurrence()
}
