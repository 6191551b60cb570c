use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::matrix::SymbolMatrix;
use crate::gf::FieldTower;
use crate::{Error, Result};

/// Where an array came from: construction name, field and ingredient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Provenance {
    pub construction: String,
    pub q: u32,
    /// See [`Provenance::poly_token`].
    pub poly: String,
    pub ingredient: Option<String>,
}

impl Provenance {
    pub fn new(construction: &str, tower: &FieldTower, ingredient: Option<String>) -> Self {
        Self {
            construction: construction.into(),
            q: tower.q(),
            poly: Self::poly_token(tower),
            ingredient,
        }
    }

    /// Tower polynomial coefficients low degree first, comma separated; for
    /// `e > 1` the base polynomial follows after `/`.
    pub fn poly_token(tower: &FieldTower) -> String {
        let mut s = join(tower.poly().iter().map(|&c| c as u32));
        if tower.base().e() > 1 {
            s.push('/');
            s.push_str(&join(tower.base().poly().coeffs().iter().copied()));
        }
        s
    }

    /// Inverse of [`poly_token`](Self::poly_token): `(tower, base)` coefficients.
    pub fn parse_poly_token(token: &str) -> Result<(Vec<u8>, Option<Vec<u32>>)> {
        let (tower, base) = match token.split_once('/') {
            Some((t, b)) => (t, Some(b)),
            None => (token, None),
        };
        let parse = |s: &str| -> Result<Vec<u32>> {
            s.split(',')
                .map(|c| {
                    c.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::MalformedPolynomial(format!("bad coefficient {c:?}")))
                })
                .collect()
        };
        let tower = parse(tower)?
            .into_iter()
            .map(|c| {
                u8::try_from(c)
                    .map_err(|_| Error::MalformedPolynomial(format!("coefficient {c} too large")))
            })
            .collect::<Result<Vec<u8>>>()?;
        let base = base.map(parse).transpose()?;
        Ok((tower, base))
    }
}

fn join(it: impl Iterator<Item = u32>) -> String {
    it.map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

/// An `N x k` array over `0..v` with a claimed strength.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringArray {
    matrix: SymbolMatrix,
    t: u32,
    v: u32,
    provenance: Provenance,
}

impl CoveringArray {
    pub fn new(matrix: SymbolMatrix, t: u32, v: u32, provenance: Provenance) -> Result<Self> {
        if v == 0 || v > 256 {
            return Err(Error::Shape(format!(
                "alphabet size {v} out of range 1..=256"
            )));
        }
        if let Some(&s) = matrix.data().iter().find(|&&s| s as u32 >= v) {
            return Err(Error::Shape(format!("symbol {s} outside alphabet 0..{v}")));
        }
        if t as usize > matrix.cols() {
            return Err(Error::Strength {
                t: t as usize,
                k: matrix.cols(),
            });
        }
        Ok(Self {
            matrix,
            t,
            v,
            provenance,
        })
    }

    /// Number of rows `N`.
    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    /// Number of columns `k`.
    pub fn k(&self) -> usize {
        self.matrix.cols()
    }

    /// Claimed strength.
    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn v(&self) -> u32 {
        self.v
    }

    pub fn matrix(&self) -> &SymbolMatrix {
        &self.matrix
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn into_parts(self) -> (SymbolMatrix, u32, u32, Provenance) {
        (self.matrix, self.t, self.v, self.provenance)
    }
}
