use alloc::vec::Vec;

use super::matrix::SymbolMatrix;
use crate::gf::{BaseField, CoordinateVector, FieldTower};
use crate::{Error, Result};

/// An `m x c` matrix over `GF(q)` stored by columns; column `i` is
/// `L(alpha^{exponents[i]})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    m: usize,
    exponents: Vec<u64>,
    columns: Vec<CoordinateVector>,
}

impl GeneratorMatrix {
    pub fn from_columns(m: usize, exponents: Vec<u64>, columns: Vec<CoordinateVector>) -> Self {
        assert_eq!(exponents.len(), columns.len());
        assert!(
            columns.iter().all(|c| c.len() == m),
            "every column has m entries"
        );
        Self {
            m,
            exponents,
            columns,
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, i: usize) -> &CoordinateVector {
        &self.columns[i]
    }

    pub fn columns(&self) -> &[CoordinateVector] {
        &self.columns
    }

    /// Exponent `j` with column `i` equal to `L(alpha^j)`.
    pub fn exponent(&self, i: usize) -> u64 {
        self.exponents[i]
    }

    pub fn entry(&self, row: usize, col: usize) -> u8 {
        self.columns[col].as_slice()[row]
    }

    /// `[self | other]`.
    pub fn hconcat(&self, other: &GeneratorMatrix) -> Self {
        assert_eq!(self.m, other.m);
        let mut exponents = self.exponents.clone();
        exponents.extend_from_slice(&other.exponents);
        let mut columns = self.columns.clone();
        columns.extend_from_slice(&other.columns);
        Self {
            m: self.m,
            exponents,
            columns,
        }
    }

    /// Row `r` as a vector of symbols.
    pub fn row(&self, r: usize) -> Vec<u8> {
        self.columns.iter().map(|c| c.as_slice()[r]).collect()
    }
}

/// `G^l_c`: column `i` is `L(alpha^{l*i})` for `0 <= i < c`, exponents taken
/// modulo `q^m - 1` (so negative `l` is allowed).
pub fn generator_matrix(tower: &FieldTower, l: i64, c: usize) -> Result<GeneratorMatrix> {
    let max = tower.projective_points() as usize;
    if c == 0 || c > max {
        return Err(Error::ColumnCount { count: c, max });
    }
    let n = tower.group_order() as i128;
    let exponents: Vec<u64> = (0..c as i128)
        .map(|i| (l as i128 * i).rem_euclid(n) as u64)
        .collect();
    let columns = exponents.iter().map(|&j| tower.decompose(j)).collect();
    Ok(GeneratorMatrix {
        m: tower.m() as usize,
        exponents,
        columns,
    })
}

/// `A(G)`: every `u * G` for `u in GF(q)^m`, rows ordered lexicographically
/// by `u` with `u_0` most significant. Row 0 is the zero row.
pub fn span_array(base: &BaseField, g: &GeneratorMatrix) -> SymbolMatrix {
    let q = base.order() as usize;
    let m = g.m();
    let c = g.cols();
    let rows = q.pow(m as u32);
    // Row r = u_0 * G_0 + rest, so build it by prefixing the span of the
    // lower rows.
    let mut data = alloc::vec![0u8; rows * c];
    let mut block = 1usize;
    for level in (0..m).rev() {
        let gen_row = g.row(level);
        // rows [0, block) already hold the span of generator rows level+1..m
        for digit in 1..q {
            let scaled: Vec<u8> = gen_row.iter().map(|&x| base.mul(digit as u8, x)).collect();
            for r in 0..block {
                let dst = (digit * block + r) * c;
                let src = r * c;
                for k in 0..c {
                    data[dst + k] = base.add(data[src + k], scaled[k]);
                }
            }
        }
        block *= q;
    }
    SymbolMatrix::new(rows, c, data)
}
