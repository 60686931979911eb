//! Prime-field arithmetic with a primitive root and a dense discrete-log table.
//!
//! Every character evaluation in the crate goes through [`PrimeField::dlog`],
//! so the table is built once per prime and then shared read-only.

use crate::error::{Error, Result};

/// Largest prime accepted by [`PrimeField::new`].
pub const DEFAULT_MAX_P: u64 = 100_003;

/// A residue class in `[0, p)`. The owning field is passed as context to
/// every operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(u64);

impl FieldElement {
    #[inline]
    pub fn value(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl std::fmt::Display for FieldElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    /// Inverse of the first operand; the second is ignored.
    Inv,
    /// First operand raised to the integer value of the second.
    Pow,
}

/// The field `F_p` for an odd prime `p`, together with its smallest
/// primitive root `g` and the table `dlog[g^e mod p] = e`.
#[derive(Debug, Clone)]
pub struct PrimeField {
    p: u64,
    generator: u64,
    // dlog[0] is unused and set to u32::MAX.
    dlog: Vec<u32>,
}

impl PrimeField {
    /// Builds `F_p` with the default size cap [`DEFAULT_MAX_P`].
    pub fn new(p: u64) -> Result<Self> {
        Self::with_max(p, DEFAULT_MAX_P)
    }

    pub fn with_max(p: u64, max: u64) -> Result<Self> {
        // dlog entries are stored as u32
        if p > max || p > u32::MAX as u64 {
            return Err(Error::TooLarge { p, max });
        }
        if p < 3 || !is_prime(p) {
            return Err(Error::NotPrime { p });
        }
        let generator = smallest_primitive_root(p);
        let mut dlog = vec![u32::MAX; p as usize];
        let mut power = 1u64;
        for e in 0..(p - 1) {
            dlog[power as usize] = e as u32;
            power = mul_mod(power, generator, p);
        }
        debug_assert_eq!(power, 1);
        Ok(Self { p, generator, dlog })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Order of the multiplicative group, `p - 1`.
    #[inline]
    pub fn group_order(&self) -> u64 {
        self.p - 1
    }

    #[inline]
    pub fn generator(&self) -> u64 {
        self.generator
    }

    /// Discrete log of a nonzero element with respect to the generator.
    /// Returns `None` for zero.
    #[inline]
    pub fn dlog(&self, x: FieldElement) -> Option<u64> {
        if x.0 == 0 {
            None
        } else {
            Some(self.dlog[x.0 as usize] as u64)
        }
    }

    /// Reduces an arbitrary integer into the field.
    #[inline]
    pub fn elem(&self, v: i64) -> FieldElement {
        FieldElement(v.rem_euclid(self.p as i64) as u64)
    }

    #[inline]
    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    #[inline]
    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// All elements `0, 1, ..., p-1` in order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.p).map(FieldElement)
    }

    /// All nonzero elements `1, ..., p-1` in order.
    pub fn units(&self) -> impl Iterator<Item = FieldElement> {
        (1..self.p).map(FieldElement)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let s = a.0 + b.0;
        FieldElement(if s >= self.p { s - self.p } else { s })
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(if a.0 >= b.0 { a.0 - b.0 } else { a.0 + self.p - b.0 })
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.sub(FieldElement(0), a)
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(mul_mod(a.0, b.0, self.p))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        FieldElement(pow_mod(a.0, e, self.p))
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero { p: self.p });
        }
        Ok(FieldElement(inv_mod(a.0, self.p).expect("nonzero residue mod a prime is a unit")))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Single entry point over [`FieldOp`]; see the individual methods.
    pub fn arith(&self, a: FieldElement, b: FieldElement, op: FieldOp) -> Result<FieldElement> {
        Ok(match op {
            FieldOp::Add => self.add(a, b),
            FieldOp::Sub => self.sub(a, b),
            FieldOp::Mul => self.mul(a, b),
            FieldOp::Inv => self.inv(a)?,
            FieldOp::Pow => self.pow(a, b.0),
        })
    }
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
pub(crate) fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors of `n`, ascending.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn smallest_primitive_root(p: u64) -> u64 {
    let order = p - 1;
    let factors = prime_factors(order);
    (2..p)
        .find(|&g| factors.iter().all(|&l| pow_mod(g, order / l, p) != 1))
        .expect("prime field has a primitive root")
}
