//! The three constructions and their size formulas.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::array::{CoveringArray, Provenance};
use super::generator::{generator_matrix, span_array, GeneratorMatrix};
use super::matrix::SymbolMatrix;
use crate::gf::FieldTower;
use crate::verify::verify_coverage;
use crate::{Error, Result};

pub const CA3_PROJECTIVE: &str = "ca3";
pub const CA3_RESTRICTED: &str = "ca3-restricted";
pub const CA4_HALF: &str = "ca4-half";
pub const CA4_FULL: &str = "ca4-full";

/// `(N, k) = (2q^3 - 1, q^2 + q + 1)`.
pub fn ca3_projective_size(q: u64) -> (u64, u64) {
    (2 * q.pow(3) - 1, q * q + q + 1)
}

/// `(N, k) = (3q^4 - 2, (q^2 + 1)/2)`.
pub fn ca4_half_size(q: u64) -> (u64, u64) {
    (3 * q.pow(4) - 2, (q * q).div_ceil(2))
}

/// `(N, k) = (3q^4 + N_R (q - 2), q^2 + 1)` for an ingredient with `N_R` rows.
pub fn ca4_full_size(q: u64, ingredient_rows: u64) -> (u64, u64) {
    (3 * q.pow(4) + ingredient_rows * (q - 2), q * q + 1)
}

fn require_degree(tower: &FieldTower, m: u32) -> Result<()> {
    if tower.m() != m {
        return Err(Error::WrongTowerDegree {
            expected: m,
            actual: tower.m(),
        });
    }
    Ok(())
}

fn require_odd(tower: &FieldTower) -> Result<()> {
    if tower.q().is_multiple_of(2) {
        return Err(Error::EvenCharacteristic(tower.q()));
    }
    Ok(())
}

/// `A(G^1) / A(G^{-1})` with `k = q^2 + q + 1`, one zero row dropped: a
/// `CA(2q^3 - 1; 3, q^2 + q + 1, q)`.
pub fn build_ca3_projective(tower: &FieldTower) -> Result<CoveringArray> {
    require_degree(tower, 3)?;
    let k = tower.projective_points() as usize;
    let base = tower.base();
    let first = span_array(base, &generator_matrix(tower, 1, k)?);
    let second = span_array(base, &generator_matrix(tower, -1, k)?).remove_rows(|r| r == 0);
    let rows = SymbolMatrix::vstack(&[&first, &second]);
    CoveringArray::new(
        rows,
        3,
        tower.q(),
        Provenance::new(CA3_PROJECTIVE, tower, None),
    )
}

/// `G^{q+1}`, `G^{2(q+1)}`, `G^{4(q+1)}` with `(q^2+1)/2` columns.
pub fn half_generators(tower: &FieldTower) -> Result<[GeneratorMatrix; 3]> {
    require_degree(tower, 4)?;
    let q = tower.q() as i64;
    let s = ((q * q + 1) / 2) as usize;
    Ok([
        generator_matrix(tower, q + 1, s)?,
        generator_matrix(tower, 2 * (q + 1), s)?,
        generator_matrix(tower, 4 * (q + 1), s)?,
    ])
}

/// Column generators of the recursive array's first three row blocks:
/// `G^{q+1}_{q^2+1}`, `[G^{2(q+1)} | G^{2(q+1)}]`, `[G^{4(q+1)} | G^{4(q+1)}]`.
pub fn recursive_generators(tower: &FieldTower) -> Result<[GeneratorMatrix; 3]> {
    let [_, g2, g4] = half_generators(tower)?;
    let q = tower.q() as i64;
    let full = generator_matrix(tower, q + 1, (q * q + 1) as usize)?;
    Ok([full, g2.hconcat(&g2), g4.hconcat(&g4)])
}

/// Vertical concatenation of the three half-ovoid span arrays, keeping the
/// first block's zero row and dropping the other two: a
/// `CA(3q^4 - 2; 4, (q^2+1)/2, q)` for odd `q`.
pub fn build_ca4_half(tower: &FieldTower) -> Result<CoveringArray> {
    require_degree(tower, 4)?;
    require_odd(tower)?;
    let base = tower.base();
    let [g1, g2, g4] = half_generators(tower)?;
    let a1 = span_array(base, &g1);
    let a2 = span_array(base, &g2).remove_rows(|r| r == 0);
    let a4 = span_array(base, &g4).remove_rows(|r| r == 0);
    let rows = SymbolMatrix::vstack(&[&a1, &a2, &a4]);
    CoveringArray::new(rows, 4, tower.q(), Provenance::new(CA4_HALF, tower, None))
}

/// The default strength-3 ingredient for [`build_ca4_full`]: the first
/// `(q^2+1)/2` columns of the projective-pair array over the same `GF(q)`.
pub fn default_ingredient(tower: &FieldTower) -> Result<CoveringArray> {
    let tower3 = FieldTower::over(tower.base().clone(), 3, None)?;
    let q = tower.q() as usize;
    let ca3 = build_ca3_projective(&tower3)?;
    let mut restricted = restrict_columns(&ca3, (q * q).div_ceil(2))?;
    let prov = restricted.provenance().clone();
    restricted = CoveringArray::new(
        restricted.matrix().clone(),
        3,
        restricted.v(),
        Provenance {
            construction: CA3_RESTRICTED.into(),
            ..prov
        },
    )?;
    Ok(restricted)
}

/// The recursive `CA(3q^4 + N_R (q - 2); 4, q^2 + 1, q)` from a strength-3
/// ingredient with `(q^2+1)/2` columns. Row blocks, top to bottom:
///
/// ```text
/// A(G^{q+1}_{q^2+1})
/// A_2 | A_2
/// A_4 | A_4 + e^0
/// R   | R + e^r      for r = 1..q-2
/// ```
///
/// with `e = alpha^((q^4-1)/(q-1))` and `+ x` added entrywise in `GF(q)`.
pub fn build_ca4_full(
    tower: &FieldTower,
    ingredient: &CoveringArray,
    ingredient_name: &str,
) -> Result<CoveringArray> {
    require_degree(tower, 4)?;
    require_odd(tower)?;
    let q = tower.q() as usize;
    let s = (q * q).div_ceil(2);
    if ingredient.k() != s || ingredient.v() as usize != q {
        return Err(Error::Ingredient(format!(
            "expected {s} columns over {q} symbols, got {} columns over {}",
            ingredient.k(),
            ingredient.v()
        )));
    }
    let report = verify_coverage(ingredient, 3, 1)?;
    if !report.pass() {
        return Err(Error::Ingredient(format!(
            "not a strength-3 covering array ({} uncovered tuple(s) reported)",
            report.witnesses.len()
        )));
    }

    let base = tower.base();
    let [g1, g2, g4] = recursive_generators(tower)?;
    let a1 = span_array(base, &g1);
    let [_, h2, h4] = half_generators(tower)?;
    let a2 = span_array(base, &h2);
    let a4 = span_array(base, &h4);
    debug_assert_eq!(g2.cols(), 2 * s);
    debug_assert_eq!(g4.cols(), 2 * s);

    let e = tower.subfield_primitive();
    let shift = |m: &SymbolMatrix, x: u8| m.map(|sym| base.add(sym, x));

    let mut blocks: Vec<SymbolMatrix> = Vec::with_capacity(q + 1);
    blocks.push(a1);
    blocks.push(a2.hstack(&a2));
    blocks.push(a4.hstack(&shift(&a4, base.exp(0))));
    let r = ingredient.matrix();
    for power in 1..=(q as u64 - 2) {
        blocks.push(r.hstack(&shift(r, base.exp(power * base.log(e).unwrap() as u64))));
    }
    let refs: Vec<&SymbolMatrix> = blocks.iter().collect();
    let rows = SymbolMatrix::vstack(&refs);
    let name: String = ingredient_name.into();
    CoveringArray::new(
        rows,
        4,
        tower.q(),
        Provenance::new(CA4_FULL, tower, Some(name)),
    )
}

/// The first `count` columns; column deletion keeps the strength claim.
pub fn restrict_columns(ca: &CoveringArray, count: usize) -> Result<CoveringArray> {
    if count == 0 || count > ca.k() {
        return Err(Error::ColumnCount { count, max: ca.k() });
    }
    let cols: Vec<usize> = (0..count).collect();
    let t = ca.t().min(count as u32);
    CoveringArray::new(
        ca.matrix().select_columns(&cols),
        t,
        ca.v(),
        ca.provenance().clone(),
    )
}
