//! `GF(q)` for `q = p^e <= 256` with full operation tables.
//!
//! Elements are symbols `0..q`: the class of `sum a_i y^i` in
//! `GF(p)[y]/(g)` is the integer `sum a_i p^i`. For `e = 1` this is the
//! residue itself. The symbol is also the covering-array alphabet value.

use alloc::vec;
use alloc::vec::Vec;

use super::poly::{find_primitive_poly, PrimePoly, Scalars};
use crate::{Error, Result};

/// Largest base field order with table-backed arithmetic.
pub const MAX_BASE_ORDER: u32 = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseField {
    p: u32,
    e: u32,
    q: u32,
    poly: PrimePoly,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    exp: Vec<u8>,
    log: Vec<u32>,
}

impl BaseField {
    /// `GF(p^e)` defined by the canonical primitive polynomial.
    pub fn new(p: u32, e: u32) -> Result<Self> {
        Self::check_order(p, e)?;
        Self::with_poly(find_primitive_poly(p, e)?)
    }

    /// `GF(p^e)` defined by an explicit primitive polynomial of degree `e`.
    pub fn with_poly(poly: PrimePoly) -> Result<Self> {
        let (p, e) = (poly.p(), poly.degree());
        Self::check_order(p, e)?;
        if !poly.is_primitive() {
            return Err(Error::NotPrimitive(alloc::format!("{poly} over GF({p})")));
        }
        let q = p.pow(e);
        let qs = q as usize;

        // y^k as digit vectors, starting from 1.
        let mut exp = vec![0u8; qs - 1];
        let mut log = vec![u32::MAX; qs];
        let g = poly.coeffs();
        let mut cur = vec![0u32; e as usize];
        cur[0] = 1;
        let ps = PrimeScalarsU(p);
        for (k, slot) in exp.iter_mut().enumerate() {
            let sym = encode(&cur, p);
            *slot = sym as u8;
            log[sym as usize] = k as u32;
            if e == 1 {
                // multiply by the root -g_0
                cur[0] = ps.mul(cur[0], ps.sub(0, g[0]));
            } else {
                let top = cur[e as usize - 1];
                for i in (1..e as usize).rev() {
                    cur[i] = ps.sub(cur[i - 1], ps.mul(top, g[i]));
                }
                cur[0] = ps.sub(0, ps.mul(top, g[0]));
            }
        }

        let mut add = vec![0u8; qs * qs];
        let mut mul = vec![0u8; qs * qs];
        for a in 0..q {
            for b in 0..q {
                add[(a * q + b) as usize] = add_digits(a, b, p) as u8;
                if a != 0 && b != 0 {
                    let k = (log[a as usize] + log[b as usize]) % (q - 1);
                    mul[(a * q + b) as usize] = exp[k as usize];
                }
            }
        }
        let mut neg = vec![0u8; qs];
        let mut inv = vec![0u8; qs];
        for a in 0..q {
            neg[a as usize] = (0..q).find(|&b| add[(a * q + b) as usize] == 0).unwrap() as u8;
            if a != 0 {
                let k = (q - 1 - log[a as usize]) % (q - 1);
                inv[a as usize] = exp[k as usize];
            }
        }
        Ok(Self {
            p,
            e,
            q,
            poly,
            add,
            mul,
            neg,
            inv,
            exp,
            log,
        })
    }

    fn check_order(p: u32, e: u32) -> Result<()> {
        if !super::is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if e == 0 {
            return Err(Error::ZeroDegree);
        }
        match p.checked_pow(e) {
            Some(q) if q <= MAX_BASE_ORDER => Ok(()),
            _ => Err(Error::FieldTooLarge {
                size: (p as u64).saturating_pow(e),
                bound: MAX_BASE_ORDER as u64,
            }),
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn poly(&self) -> &PrimePoly {
        &self.poly
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u8) -> Option<u8> {
        (a != 0).then(|| self.inv[a as usize])
    }

    /// The defining primitive element (the class of `y`, or the primitive
    /// root for prime fields).
    pub fn generator(&self) -> u8 {
        self.exp[1 % self.exp.len()]
    }

    /// `generator^k`.
    pub fn exp(&self, k: u64) -> u8 {
        self.exp[(k % (self.q as u64 - 1)) as usize]
    }

    /// Discrete log base [`generator`](Self::generator); `None` for zero.
    pub fn log(&self, a: u8) -> Option<u32> {
        let l = self.log[a as usize];
        (l != u32::MAX).then_some(l)
    }

    /// The image of the integer `n` under `Z -> GF(q)`.
    pub fn from_int(&self, n: u64) -> u8 {
        (n % self.p as u64) as u8
    }
}

impl Scalars for BaseField {
    fn add(&self, a: u32, b: u32) -> u32 {
        BaseField::add(self, a as u8, b as u8) as u32
    }
    fn sub(&self, a: u32, b: u32) -> u32 {
        BaseField::sub(self, a as u8, b as u8) as u32
    }
    fn mul(&self, a: u32, b: u32) -> u32 {
        BaseField::mul(self, a as u8, b as u8) as u32
    }
}

struct PrimeScalarsU(u32);

impl PrimeScalarsU {
    fn mul(&self, a: u32, b: u32) -> u32 {
        a * b % self.0
    }
    fn sub(&self, a: u32, b: u32) -> u32 {
        (a + self.0 - b) % self.0
    }
}

fn encode(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn add_digits(mut a: u32, mut b: u32, p: u32) -> u32 {
    let (mut out, mut scale) = (0, 1);
    while a > 0 || b > 0 {
        out += (a % p + b % p) % p * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    out
}
