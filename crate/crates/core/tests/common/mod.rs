//! Naive reference implementations used as oracles. They share nothing with
//! the library beyond the choice of generator: discrete logs come from
//! enumerating powers, roots of unity from `cos`/`sin` per term, and sums
//! are accumulated term by term.
#![allow(dead_code)]

use num_complex::Complex64;

pub struct NaiveField {
    pub p: u64,
    pub g: u64,
    log: Vec<Option<u64>>,
}

impl NaiveField {
    /// `g` must be the generator the library chose, so characters agree.
    pub fn new(p: u64, g: u64) -> Self {
        let mut log = vec![None; p as usize];
        let mut x = 1u64;
        for e in 0..p - 1 {
            log[x as usize] = Some(e);
            x = x * g % p;
        }
        Self { p, g, log }
    }

    fn red(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    /// `T^k(x)` with `T(g) = exp(2πi/(p-1))`.
    pub fn chi(&self, k: i64, x: i64) -> Complex64 {
        match self.log[self.red(x) as usize] {
            None => Complex64::new(0.0, 0.0),
            Some(l) => {
                let n = (self.p - 1) as f64;
                let theta = std::f64::consts::TAU * (k as f64) * (l as f64) / n;
                Complex64::new(theta.cos(), theta.sin())
            }
        }
    }

    pub fn jacobi(&self, a: i64, b: i64) -> Complex64 {
        (0..self.p as i64).map(|x| self.chi(a, x) * self.chi(b, 1 - x)).sum()
    }

    /// Greene's point-sum `2F1(T^a, T^b; T^c | x)`, written out literally.
    pub fn ff_2f1(&self, a: i64, b: i64, c: i64, x: i64) -> Complex64 {
        if self.red(x) == 0 {
            return Complex64::new(0.0, 0.0);
        }
        let s: Complex64 = (0..self.p as i64)
            .map(|y| self.chi(b, y) * self.chi(c - b, 1 - y) * self.chi(-a, 1 - x * y))
            .sum();
        self.chi(b + c, -1) * s / self.p as f64
    }
}

/// `#{(x, y) : y^4 = x(x-1)(x-λ)} + 1` by double enumeration.
pub fn naive_quartic_count(p: u64, lambda: u64) -> u64 {
    let mut n = 1;
    for x in 0..p {
        let f = x * ((x + p - 1) % p) % p * ((x + p - lambda) % p) % p;
        n += (0..p).filter(|&y| y * y % p * y % p * y % p == f).count() as u64;
    }
    n
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    (3..=n).filter(|&k| (2..k).take_while(|d| d * d <= k).all(|d| k % d != 0)).collect()
}
