//! The extension `GF(q^m)`, `m in {3, 4}`, as `GF(q)[x]/(f)` with `f`
//! primitive. `alpha` is the class of `x`; every nonzero element is stored by
//! its discrete log.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::base::BaseField;
use super::int::factor_distinct;
use super::poly::x_has_order;
use crate::{Error, Result};

/// Largest `q^m` for which a tower is tabulated.
pub const MAX_TOWER_ORDER: u64 = 1 << 24;

/// A nonzero element by its exponent base `alpha`, or zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: Self = Self(u32::MAX);

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    /// Discrete log base `alpha`, `None` for zero.
    pub fn log(self) -> Option<u32> {
        (!self.is_zero()).then_some(self.0)
    }
}

/// Coordinates `(c_0, ..., c_{m-1})` over `GF(q)` in the basis
/// `1, alpha, ..., alpha^{m-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoordinateVector {
    coords: [u8; 4],
    m: u8,
}

impl CoordinateVector {
    pub fn new(coords: &[u8]) -> Self {
        assert!(coords.len() <= 4, "at most four coordinates");
        let mut c = [0u8; 4];
        c[..coords.len()].copy_from_slice(coords);
        Self {
            coords: c,
            m: coords.len() as u8,
        }
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.coords[..self.m as usize]
    }

    pub fn len(&self) -> usize {
        self.m as usize
    }

    pub fn is_empty(&self) -> bool {
        self.m == 0
    }

    pub fn is_zero(&self) -> bool {
        self.as_slice().iter().all(|&c| c == 0)
    }
}

#[derive(Debug, Clone)]
pub struct FieldTower {
    base: BaseField,
    m: u32,
    /// Monic, low degree first, `m + 1` symbols.
    poly: Vec<u8>,
    /// `q^m - 1`.
    n: u64,
    /// exponent -> packed coordinates `sum c_i q^i`.
    exp: Vec<u32>,
    /// packed coordinates -> exponent (`u32::MAX` at zero).
    log: Vec<u32>,
}

impl FieldTower {
    /// Builds `GF((p^e)^m)` with canonical polynomials, or with the given
    /// tower polynomial (monic, low degree first, GF(q) symbols).
    pub fn build(p: u32, e: u32, m: u32, tower_poly: Option<&[u8]>) -> Result<Self> {
        Self::over(BaseField::new(p, e)?, m, tower_poly)
    }

    pub fn over(base: BaseField, m: u32, tower_poly: Option<&[u8]>) -> Result<Self> {
        if m != 3 && m != 4 {
            return Err(Error::UnsupportedTowerDegree(m));
        }
        let q = base.order() as u64;
        let size = q.pow(m);
        if size > MAX_TOWER_ORDER {
            return Err(Error::FieldTooLarge {
                size,
                bound: MAX_TOWER_ORDER,
            });
        }
        let n = size - 1;
        let primes = factor_distinct(n);
        let poly = match tower_poly {
            Some(f) => {
                validate_shape(f, m, base.order())?;
                let wide: Vec<u32> = f.iter().map(|&c| c as u32).collect();
                if !x_has_order(&base, &wide, n, &primes) {
                    return Err(Error::NotPrimitive(format!(
                        "x does not have order {n} modulo the tower polynomial {f:?}"
                    )));
                }
                f.to_vec()
            }
            None => find_tower_poly(&base, m, n, &primes),
        };
        let (exp, log) = tabulate(&base, &poly, n);
        Ok(Self {
            base,
            m,
            poly,
            n,
            exp,
            log,
        })
    }

    pub fn base(&self) -> &BaseField {
        &self.base
    }

    pub fn q(&self) -> u32 {
        self.base.order()
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Tower polynomial, low degree first, including the leading 1.
    pub fn poly(&self) -> &[u8] {
        &self.poly
    }

    /// `q^m - 1`, the order of `alpha`.
    pub fn group_order(&self) -> u64 {
        self.n
    }

    /// `(q^m - 1)/(q - 1)`, the number of points of `PG(m-1, q)`.
    pub fn projective_points(&self) -> u64 {
        self.n / (self.q() as u64 - 1)
    }

    pub fn alpha_pow(&self, j: u64) -> FieldElement {
        FieldElement((j % self.n) as u32)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        FieldElement(((a.0 as u64 + b.0 as u64) % self.n) as u32)
    }

    pub fn pow(&self, a: FieldElement, k: u64) -> FieldElement {
        if a.is_zero() {
            return if k == 0 {
                self.one()
            } else {
                FieldElement::ZERO
            };
        }
        FieldElement(((a.0 as u128 * k as u128) % self.n as u128) as u32)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (x, y) = (self.coords(a), self.coords(b));
        let mut out = [0u8; 4];
        for i in 0..self.m as usize {
            out[i] = self.base.add(x.coords[i], y.coords[i]);
        }
        self.element(&CoordinateVector {
            coords: out,
            m: self.m as u8,
        })
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let x = self.coords(a);
        let mut out = [0u8; 4];
        for i in 0..self.m as usize {
            out[i] = self.base.neg(x.coords[i]);
        }
        self.element(&CoordinateVector {
            coords: out,
            m: self.m as u8,
        })
    }

    /// `a^q`.
    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.q() as u64)
    }

    /// The embedding `GF(q) -> GF(q^m)`.
    pub fn from_base(&self, s: u8) -> FieldElement {
        self.element(&CoordinateVector::new(&[s, 0, 0, 0][..self.m as usize]))
    }

    /// The `GF(q)` symbol of `a` if `a` lies in the subfield.
    pub fn to_base(&self, a: FieldElement) -> Option<u8> {
        let c = self.coords(a);
        c.as_slice()[1..]
            .iter()
            .all(|&x| x == 0)
            .then_some(c.coords[0])
    }

    /// `Tr(a) = a + a^q + ... + a^{q^{m-1}}`, as a `GF(q)` symbol.
    pub fn trace(&self, a: FieldElement) -> u8 {
        let mut acc = FieldElement::ZERO;
        let mut conj = a;
        for _ in 0..self.m {
            acc = self.add(acc, conj);
            conj = self.frobenius(conj);
        }
        self.to_base(acc).expect("trace lands in the base field")
    }

    /// `L(alpha^j)`: coordinates of `alpha^j` in the basis `1, alpha, ...`.
    pub fn decompose(&self, j: u64) -> CoordinateVector {
        self.coords(self.alpha_pow(j))
    }

    pub fn coords(&self, a: FieldElement) -> CoordinateVector {
        let mut out = CoordinateVector {
            coords: [0; 4],
            m: self.m as u8,
        };
        if a.is_zero() {
            return out;
        }
        let mut packed = self.exp[a.0 as usize];
        let q = self.q();
        for slot in out.coords[..self.m as usize].iter_mut() {
            *slot = (packed % q) as u8;
            packed /= q;
        }
        out
    }

    /// Inverse of [`coords`](Self::coords).
    pub fn element(&self, v: &CoordinateVector) -> FieldElement {
        let q = self.q();
        let packed = v
            .as_slice()
            .iter()
            .rev()
            .fold(0u32, |acc, &c| acc * q + c as u32);
        FieldElement(self.log[packed as usize])
    }

    /// `alpha^((q^m - 1)/(q - 1))` as a `GF(q)` symbol; it generates `GF(q)*`.
    pub fn subfield_primitive(&self) -> u8 {
        let e = self.alpha_pow(self.projective_points());
        self.to_base(e).expect("norm-type power lies in GF(q)")
    }

    /// Tower polynomial coefficients `b_1..b_m` of `x^m + sum b_j x^{m-j}`.
    fn recurrence_coeffs(&self) -> Vec<u8> {
        (1..=self.m as usize)
            .map(|j| self.poly[self.m as usize - j])
            .collect()
    }

    /// Linear recurrence `g_n = -sum_{j=1..m} b_j g_{n-j}` from the tower
    /// polynomial, seeded with `seeds` (length `m`), run to `len` terms.
    pub fn lfsr_sequence(&self, seeds: &[u8], len: usize) -> Vec<u8> {
        assert_eq!(seeds.len(), self.m as usize, "one seed per tower degree");
        let b = self.recurrence_coeffs();
        let mut out = Vec::with_capacity(len.max(seeds.len()));
        out.extend_from_slice(seeds);
        while out.len() < len {
            let n = out.len();
            let mut acc = 0u8;
            for (j, &bj) in b.iter().enumerate() {
                acc = self.base.add(acc, self.base.mul(bj, out[n - 1 - j]));
            }
            out.push(self.base.neg(acc));
        }
        out.truncate(len);
        out
    }

    /// `Tr(beta * alpha^i)` for `i < len`, evaluated directly.
    pub fn trace_sequence(&self, beta: FieldElement, len: usize) -> Vec<u8> {
        (0..len)
            .map(|i| self.trace(self.mul(beta, self.alpha_pow(i as u64))))
            .collect()
    }
}

fn validate_shape(f: &[u8], m: u32, q: u32) -> Result<()> {
    if f.len() != m as usize + 1 {
        return Err(Error::MalformedPolynomial(format!(
            "tower polynomial needs {} coefficients, got {}",
            m + 1,
            f.len()
        )));
    }
    if f[m as usize] != 1 {
        return Err(Error::MalformedPolynomial(
            "tower polynomial must be monic".into(),
        ));
    }
    if let Some(&c) = f.iter().find(|&&c| c as u32 >= q) {
        return Err(Error::MalformedPolynomial(format!(
            "coefficient {c} is not a GF({q}) symbol"
        )));
    }
    Ok(())
}

/// Lexicographically smallest monic primitive polynomial of degree `m` over
/// the base field, `c_0` most significant.
fn find_tower_poly(base: &BaseField, m: u32, n: u64, primes: &[u64]) -> Vec<u8> {
    let q = base.order() as u64;
    let mut f = vec![0u32; m as usize + 1];
    f[m as usize] = 1;
    for idx in q.pow(m - 1)..q.pow(m) {
        let mut rest = idx;
        for slot in f[..m as usize].iter_mut().rev() {
            *slot = (rest % q) as u32;
            rest /= q;
        }
        if x_has_order(base, &f, n, primes) {
            return f.iter().map(|&c| c as u8).collect();
        }
    }
    unreachable!("primitive polynomials exist over every finite field")
}

fn tabulate(base: &BaseField, poly: &[u8], n: u64) -> (Vec<u32>, Vec<u32>) {
    let m = poly.len() - 1;
    let q = base.order();
    let mut exp = vec![0u32; n as usize];
    let mut log = vec![u32::MAX; n as usize + 1];
    let mut cur = [0u8; 4];
    cur[0] = 1;
    for (k, slot) in exp.iter_mut().enumerate() {
        let packed = cur[..m]
            .iter()
            .rev()
            .fold(0u32, |acc, &c| acc * q + c as u32);
        debug_assert_eq!(log[packed as usize], u32::MAX, "alpha is primitive");
        *slot = packed;
        log[packed as usize] = k as u32;
        let top = cur[m - 1];
        for i in (1..m).rev() {
            cur[i] = base.sub(cur[i - 1], base.mul(top, poly[i]));
        }
        cur[0] = base.neg(base.mul(top, poly[0]));
    }
    (exp, log)
}
