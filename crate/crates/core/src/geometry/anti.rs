use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::plane::MobiusPlane;
use crate::par::map_range;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntiCocircularReport {
    /// Largest `|c1 ∩ c2 ∩ c3|` over circle triples.
    pub max_intersection: usize,
    /// Circle indices `(Mhalf, M1, M2)` of the first triple reaching the max.
    pub witness: Option<[usize; 3]>,
    pub witness_points: Vec<u32>,
    /// Non-degenerate circle counts of `(Mhalf, M1, M2)`.
    pub circle_counts: [usize; 3],
}

impl AntiCocircularReport {
    pub fn pass(&self) -> bool {
        self.max_intersection <= 3
    }
}

struct Bitsets {
    words: usize,
    data: Vec<u64>,
}

impl Bitsets {
    fn new(plane: &MobiusPlane, slot: &dyn Fn(u32) -> usize, words: usize) -> Self {
        let mut data = vec![0u64; words * plane.circles().len()];
        for (c, circle) in plane.circles().iter().enumerate() {
            for &p in circle {
                let b = slot(p);
                data[c * words + b / 64] |= 1 << (b % 64);
            }
        }
        Bitsets { words, data }
    }

    fn get(&self, c: usize) -> &[u64] {
        &self.data[c * self.words..(c + 1) * self.words]
    }

    fn len(&self) -> usize {
        self.data.len() / self.words
    }
}

/// Exhaustive max of triple intersections, one circle from each plane,
/// looping `Mhalf × M1 × M2` and skipping pairs that cannot beat the current
/// max. Degenerate circles take part in the intersections.
pub fn check_anti_cocircular(
    m1: &MobiusPlane,
    m2: &MobiusPlane,
    mhalf: &MobiusPlane,
) -> Result<AntiCocircularReport> {
    if m1.points() != m2.points() || m1.points() != mhalf.points() {
        return Err(Error::Shape("planes are on different point sets".into()));
    }
    let points = m1.points();
    let slot = |p: u32| {
        points
            .binary_search(&p)
            .expect("circle point outside the point set")
    };
    let words = points.len().div_ceil(64).max(1);
    let a = Bitsets::new(mhalf, &slot, words);
    let b = Bitsets::new(m1, &slot, words);
    let c = Bitsets::new(m2, &slot, words);

    let chunks = map_range(a.len(), |i| {
        let mut best = 0usize;
        let mut witness = None;
        let mut ab = vec![0u64; words];
        let ai = a.get(i);
        for j in 0..b.len() {
            let mut pair = 0;
            for (w, (x, y)) in ab.iter_mut().zip(ai.iter().zip(b.get(j))) {
                *w = x & y;
                pair += w.count_ones() as usize;
            }
            if pair <= best && witness.is_some() {
                continue;
            }
            for k in 0..c.len() {
                let n: usize = ab
                    .iter()
                    .zip(c.get(k))
                    .map(|(x, y)| (x & y).count_ones() as usize)
                    .sum();
                if n > best || witness.is_none() {
                    best = n;
                    witness = Some([i, j, k]);
                    if best == pair {
                        break;
                    }
                }
            }
        }
        (best, witness)
    });
    let (max_intersection, witness) = chunks.into_iter().fold((0, None), |acc, (m, w)| {
        if w.is_some() && (acc.1.is_none() || m > acc.0) {
            (m, w)
        } else {
            acc
        }
    });
    let witness_points = witness
        .map(|[i, j, k]| {
            let (ci, cj, ck) = (&mhalf.circles()[i], &m1.circles()[j], &m2.circles()[k]);
            ci.iter()
                .copied()
                .filter(|p| cj.contains(p) && ck.contains(p))
                .collect()
        })
        .unwrap_or_default();
    let count = |p: &MobiusPlane| {
        (0..p.circles().len())
            .filter(|&c| !p.is_degenerate(c))
            .count()
    };
    let report = AntiCocircularReport {
        max_intersection,
        witness,
        witness_points,
        circle_counts: [count(mhalf), count(m1), count(m2)],
    };
    if report.witness_points.len() != report.max_intersection {
        return Err(Error::Inconsistent(format!(
            "witness has {} points, max is {}",
            report.witness_points.len(),
            report.max_intersection
        )));
    }
    Ok(report)
}
