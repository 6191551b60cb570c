use alloc::vec;
use alloc::vec::Vec;
use core::time::Duration;

use crate::combin::{binomial, next_colex};
use crate::construct::{CoveringArray, SymbolMatrix};
use crate::par::{map_range, Stopwatch};
use crate::{Error, Result};

/// Maximum number of witnesses kept in a report.
pub const WITNESS_CAP: usize = 100;
/// Largest `v^t` tuple table allowed per column subset.
pub const COVERAGE_GUARD: u64 = 1 << 28;
/// Above `C(k,t) * N * t` row touches, automatic selection prefers the
/// structural or rank engines.
pub const BRUTE_FORCE_LIMIT: u128 = 10_000_000_000;

/// A column set and a tuple it shows fewer than `lambda_required` times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub columns: Vec<usize>,
    pub tuple: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageReport {
    pub t: usize,
    pub lambda_required: u64,
    /// Smallest multiplicity of any tuple over all column subsets.
    pub lambda_min: u64,
    /// First misses in colex subset order, then tuple order; capped.
    pub witnesses: Vec<Witness>,
    /// Total number of (subset, tuple) misses.
    pub missing: u64,
    pub subsets_checked: u64,
    pub elapsed: Option<Duration>,
}

impl CoverageReport {
    pub fn pass(&self) -> bool {
        self.missing == 0
    }
}

pub fn brute_force_cost(n: usize, k: usize, t: usize) -> u128 {
    binomial(k as u64, t as u64) as u128 * n as u128 * t as u128
}

/// Checks that every `t`-set of columns shows each tuple of `0..v` at least
/// `lambda_required` times.
pub fn verify_coverage(
    ca: &CoveringArray,
    t: usize,
    lambda_required: u64,
) -> Result<CoverageReport> {
    verify_matrix_coverage(ca.matrix(), ca.v(), t, lambda_required)
}

pub fn verify_matrix_coverage(
    matrix: &SymbolMatrix,
    v: u32,
    t: usize,
    lambda_required: u64,
) -> Result<CoverageReport> {
    let k = matrix.cols();
    if t == 0 || t > k {
        return Err(Error::Strength { t, k });
    }
    let cells = (v as u64).checked_pow(t as u32).unwrap_or(u64::MAX);
    if cells > COVERAGE_GUARD {
        return Err(Error::CoverageGuard {
            cells,
            guard: COVERAGE_GUARD,
        });
    }
    let clock = Stopwatch::start();
    let n = matrix.rows();
    let by_column = matrix.transposed_data();
    let weights: Vec<usize> = (0..t)
        .map(|i| (v as usize).pow((t - 1 - i) as u32))
        .collect();

    // One chunk per largest column index; chunks are in colex order.
    let chunks = map_range(k - (t - 1), |offset| {
        let top = offset + t - 1;
        let mut counts = vec![0u32; cells as usize];
        let mut idx: Vec<usize> = (0..t).collect();
        idx[t - 1] = top;
        let mut acc = Chunk {
            lambda_min: u64::MAX,
            missing: 0,
            subsets: 0,
            witnesses: Vec::new(),
        };
        loop {
            counts.iter_mut().for_each(|c| *c = 0);
            let cols: Vec<&[u8]> = idx
                .iter()
                .map(|&c| &by_column[c * n..(c + 1) * n])
                .collect();
            for r in 0..n {
                let mut cell = 0usize;
                for (col, w) in cols.iter().zip(&weights) {
                    cell += col[r] as usize * w;
                }
                counts[cell] += 1;
            }
            for (cell, &count) in counts.iter().enumerate() {
                acc.lambda_min = acc.lambda_min.min(count as u64);
                if (count as u64) < lambda_required {
                    acc.missing += 1;
                    if acc.witnesses.len() < WITNESS_CAP {
                        let tuple = weights
                            .iter()
                            .map(|w| (cell / w % v as usize) as u8)
                            .collect();
                        acc.witnesses.push(Witness {
                            columns: idx.clone(),
                            tuple,
                        });
                    }
                }
            }
            acc.subsets += 1;
            if t == 1 || !next_colex(&mut idx[..t - 1], top) {
                break;
            }
        }
        acc
    });

    let mut report = CoverageReport {
        t,
        lambda_required,
        lambda_min: u64::MAX,
        witnesses: Vec::new(),
        missing: 0,
        subsets_checked: 0,
        elapsed: None,
    };
    for chunk in chunks {
        report.lambda_min = report.lambda_min.min(chunk.lambda_min);
        report.missing += chunk.missing;
        report.subsets_checked += chunk.subsets;
        let room = WITNESS_CAP - report.witnesses.len();
        report
            .witnesses
            .extend(chunk.witnesses.into_iter().take(room));
    }
    report.elapsed = clock.elapsed();
    Ok(report)
}

struct Chunk {
    lambda_min: u64,
    missing: u64,
    subsets: u64,
    witnesses: Vec<Witness>,
}
