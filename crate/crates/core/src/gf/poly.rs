//! Monic polynomials over small fields and primitivity testing.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::int::{factor_distinct, is_prime, smallest_primitive_root};
use crate::{Error, Result};

/// Default bound on `p^e` for [`find_primitive_poly`].
pub const PRIMITIVE_SEARCH_BOUND: u64 = 1 << 20;

/// Coefficient arithmetic used by the polynomial routines. Elements are
/// integer-encoded symbols `0..order`.
pub(crate) trait Scalars {
    fn add(&self, a: u32, b: u32) -> u32;
    fn sub(&self, a: u32, b: u32) -> u32;
    fn mul(&self, a: u32, b: u32) -> u32;
}

pub(crate) struct PrimeScalars(pub u64);

impl Scalars for PrimeScalars {
    fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.0) as u32
    }
    fn sub(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.0 - b as u64) % self.0) as u32
    }
    fn mul(&self, a: u32, b: u32) -> u32 {
        (a as u64 * b as u64 % self.0) as u32
    }
}

/// `a * b mod f` for `f` monic of degree `d = f.len() - 1`; `a`, `b` have
/// length `d`.
fn mul_mod<S: Scalars>(s: &S, a: &[u32], b: &[u32], f: &[u32]) -> Vec<u32> {
    let d = f.len() - 1;
    let mut prod = vec![0u32; 2 * d];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = s.add(prod[i + j], s.mul(x, y));
        }
    }
    for top in (d..2 * d).rev() {
        let c = prod[top];
        if c != 0 {
            for k in 0..d {
                prod[top - d + k] = s.sub(prod[top - d + k], s.mul(c, f[k]));
            }
            prod[top] = 0;
        }
    }
    prod.truncate(d);
    prod
}

/// `x^k mod f`.
pub(crate) fn x_pow_mod<S: Scalars>(s: &S, f: &[u32], mut k: u64) -> Vec<u32> {
    let d = f.len() - 1;
    let mut acc = vec![0u32; d];
    acc[0] = 1;
    let mut base = vec![0u32; d];
    if d == 1 {
        // x ≡ -f_0
        base[0] = s.sub(0, f[0]);
    } else {
        base[1] = 1;
    }
    while k > 0 {
        if k & 1 == 1 {
            acc = mul_mod(s, &acc, &base, f);
        }
        base = mul_mod(s, &base, &base, f);
        k >>= 1;
    }
    acc
}

/// Whether `x` has multiplicative order exactly `n` modulo `f`, where
/// `prime_factors` are the distinct primes dividing `n`.
pub(crate) fn x_has_order<S: Scalars>(s: &S, f: &[u32], n: u64, prime_factors: &[u64]) -> bool {
    if f[0] == 0 {
        return false;
    }
    let is_one = |v: &[u32]| v[0] == 1 && v[1..].iter().all(|&c| c == 0);
    if !is_one(&x_pow_mod(s, f, n)) {
        return false;
    }
    prime_factors
        .iter()
        .all(|&r| !is_one(&x_pow_mod(s, f, n / r)))
}

/// A monic polynomial over `GF(p)`, coefficients stored low degree first
/// (the last entry is the leading 1).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimePoly {
    p: u32,
    coeffs: Vec<u32>,
}

impl PrimePoly {
    /// Validates shape only (monic, residues in range, degree >= 1).
    pub fn new(p: u32, coeffs: Vec<u32>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if coeffs.len() < 2 {
            return Err(Error::MalformedPolynomial(format!(
                "degree must be at least 1, got {} coefficient(s)",
                coeffs.len()
            )));
        }
        if *coeffs.last().unwrap() != 1 {
            return Err(Error::MalformedPolynomial(
                "leading coefficient must be 1".into(),
            ));
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= p) {
            return Err(Error::MalformedPolynomial(format!(
                "coefficient {c} is not a residue mod {p}"
            )));
        }
        Ok(Self { p, coeffs })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }

    /// Coefficients, low degree first, including the leading 1.
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Primitivity: the class of `x` has order `p^e - 1` in `GF(p)[x]/(f)`.
    pub fn is_primitive(&self) -> bool {
        let n = (self.p as u64).pow(self.degree()) - 1;
        if n == 1 {
            // GF(2), f = x + 1
            return self.coeffs[0] == 1;
        }
        x_has_order(
            &PrimeScalars(self.p as u64),
            &self.coeffs,
            n,
            &factor_distinct(n),
        )
    }
}

impl fmt::Display for PrimePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (deg, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (deg, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, c) => write!(f, "{c}x")?,
                (d, 1) => write!(f, "x^{d}")?,
                (d, c) => write!(f, "{c}x^{d}")?,
            }
        }
        Ok(())
    }
}

/// The canonical primitive polynomial of degree `e` over `GF(p)`, with the
/// default bound `p^e <= 2^20`.
///
/// Degree 1 returns `x - g` for the smallest primitive root `g`. Higher
/// degrees return the lexicographically smallest monic primitive polynomial,
/// coefficients compared from `c_0` upward.
pub fn find_primitive_poly(p: u32, e: u32) -> Result<PrimePoly> {
    find_primitive_poly_bounded(p, e, PRIMITIVE_SEARCH_BOUND)
}

pub fn find_primitive_poly_bounded(p: u32, e: u32, bound: u64) -> Result<PrimePoly> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if e == 0 {
        return Err(Error::ZeroDegree);
    }
    let size = (p as u64).checked_pow(e).filter(|&s| s <= bound);
    let Some(size) = size else {
        return Err(Error::FieldTooLarge {
            size: (p as u64).saturating_pow(e),
            bound,
        });
    };
    if e == 1 {
        let g = smallest_primitive_root(p as u64) as u32;
        return PrimePoly::new(p, vec![(p - g) % p, 1]);
    }
    let n = size - 1;
    let primes = factor_distinct(n);
    let scalars = PrimeScalars(p as u64);
    let mut coeffs = vec![0u32; e as usize + 1];
    coeffs[e as usize] = 1;
    for idx in 0..size {
        let mut rest = idx;
        for slot in coeffs[..e as usize].iter_mut().rev() {
            *slot = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        if x_has_order(&scalars, &coeffs, n, &primes) {
            return PrimePoly::new(p, coeffs);
        }
    }
    unreachable!("primitive polynomials exist in every degree")
}
