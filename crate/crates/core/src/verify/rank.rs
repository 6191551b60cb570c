use alloc::vec::Vec;
use core::time::Duration;

use crate::combin::next_lex;
use crate::construct::GeneratorMatrix;
use crate::gf::{BaseField, CoordinateVector};
use crate::par::{map_range, Stopwatch};
use crate::{Error, Result};

/// Rank over `GF(q)` of a set of at most four coordinate vectors.
pub fn rank_of(base: &BaseField, vectors: &[&CoordinateVector]) -> usize {
    let mut rows: [[u8; 4]; 4] = [[0; 4]; 4];
    let t = vectors.len();
    assert!(t <= 4, "at most four vectors");
    let m = vectors.first().map_or(0, |v| v.len());
    for (row, v) in rows.iter_mut().zip(vectors) {
        row[..m].copy_from_slice(v.as_slice());
    }
    let mut rank = 0;
    for col in 0..m {
        let Some(pivot) = (rank..t).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = base.inv(rows[rank][col]).expect("pivot is nonzero");
        for r in rank + 1..t {
            let factor = base.mul(rows[r][col], inv);
            if factor == 0 {
                continue;
            }
            for c in col..m {
                let sub = base.mul(factor, rows[rank][c]);
                rows[r][c] = base.sub(rows[r][c], sub);
            }
        }
        rank += 1;
        if rank == t {
            break;
        }
    }
    rank
}

/// Column sets on which every generator is rank-deficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankCertificate {
    pub t: usize,
    pub generators: usize,
    pub sets_checked: u64,
    /// Sorted label sets, lexicographic order.
    pub uncovered_sets: Vec<Vec<u32>>,
    pub elapsed: Option<Duration>,
}

impl RankCertificate {
    pub fn pass(&self) -> bool {
        self.uncovered_sets.is_empty()
    }
}

/// For each `t`-set of columns, asks whether some generator has rank `t` on
/// it; if so the concatenated span arrays cover that set. `labels` renames
/// columns in the report (defaults to `0..k`).
pub fn verify_rank_cphf(
    base: &BaseField,
    generators: &[GeneratorMatrix],
    t: usize,
    labels: Option<&[u32]>,
) -> Result<RankCertificate> {
    verify_rank_cphf_where(base, generators, t, labels, |_| true)
}

/// As [`verify_rank_cphf`], restricted to column sets accepted by `filter`.
pub fn verify_rank_cphf_where<F>(
    base: &BaseField,
    generators: &[GeneratorMatrix],
    t: usize,
    labels: Option<&[u32]>,
    filter: F,
) -> Result<RankCertificate>
where
    F: Fn(&[usize]) -> bool + Sync + Send,
{
    let k = generators.first().map_or(0, |g| g.cols());
    if generators.iter().any(|g| g.cols() != k) {
        return Err(Error::Shape("generators differ in width".into()));
    }
    if let Some(g) = generators.iter().find(|g| g.m() < t) {
        return Err(Error::Shape(alloc::format!(
            "generator has {} rows, fewer than t = {t}",
            g.m()
        )));
    }
    if t == 0 || t > k || t > 4 {
        return Err(Error::Strength { t, k });
    }
    if let Some(l) = labels {
        if l.len() != k {
            return Err(Error::Shape(alloc::format!(
                "{} labels for {k} columns",
                l.len()
            )));
        }
    }
    let clock = Stopwatch::start();
    let chunks = map_range(k - t + 1, |first| {
        let mut idx: Vec<usize> = (first..first + t).collect();
        let mut checked = 0u64;
        let mut uncovered = Vec::new();
        loop {
            if filter(&idx) {
                checked += 1;
                let covered = generators.iter().any(|g| {
                    let mut cols = [g.column(0); 4];
                    for (slot, &c) in cols.iter_mut().zip(&idx) {
                        *slot = g.column(c);
                    }
                    rank_of(base, &cols[..t]) == t
                });
                if !covered {
                    uncovered.push(idx.clone());
                }
            }
            // advance the tail only; the first element is fixed per chunk
            if t == 1 || !next_lex(&mut idx[1..], k) || idx[1] <= first {
                break;
            }
        }
        (checked, uncovered)
    });
    let mut cert = RankCertificate {
        t,
        generators: generators.len(),
        sets_checked: 0,
        uncovered_sets: Vec::new(),
        elapsed: None,
    };
    for (checked, uncovered) in chunks {
        cert.sets_checked += checked;
        cert.uncovered_sets.extend(uncovered.into_iter().map(|set| {
            let mut named: Vec<u32> = match labels {
                Some(l) => set.iter().map(|&c| l[c]).collect(),
                None => set.iter().map(|&c| c as u32).collect(),
            };
            named.sort_unstable();
            named
        }));
    }
    cert.elapsed = clock.elapsed();
    Ok(cert)
}
