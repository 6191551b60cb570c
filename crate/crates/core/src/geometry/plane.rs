use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use super::difference::{build_difference_set, DifferenceSet};
use super::require_quartic;
use crate::construct::generator_matrix;
use crate::gf::FieldTower;
use crate::{Error, Result};

/// Largest `q` for which the full plane is also rebuilt from row zeros.
const ROW_CROSS_CHECK_MAX_Q: u32 = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PlaneVariant {
    Full,
    /// Circles meet the even points.
    M1,
    /// Even points of each circle, halved modulo `q^2 + 1`.
    M2,
    /// Points below `(q^2+1)/2` of each circle, doubled.
    Mhalf,
}

impl PlaneVariant {
    pub fn name(self) -> &'static str {
        match self {
            PlaneVariant::Full => "full",
            PlaneVariant::M1 => "M1",
            PlaneVariant::M2 => "M2",
            PlaneVariant::Mhalf => "Mhalf",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        [
            PlaneVariant::Full,
            PlaneVariant::M1,
            PlaneVariant::M2,
            PlaneVariant::Mhalf,
        ]
        .into_iter()
        .find(|v| v.name() == name)
    }
}

impl fmt::Display for PlaneVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Points and circles over `Z_{q^2+1}`. Circles are sorted and deduplicated;
/// the collection is in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MobiusPlane {
    q: u32,
    variant: PlaneVariant,
    points: Vec<u32>,
    circles: Vec<Vec<u32>>,
}

impl MobiusPlane {
    fn from_circles(
        q: u32,
        variant: PlaneVariant,
        points: Vec<u32>,
        circles: BTreeSet<Vec<u32>>,
    ) -> Self {
        MobiusPlane {
            q,
            variant,
            points,
            circles: circles.into_iter().collect(),
        }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn variant(&self) -> PlaneVariant {
        self.variant
    }

    pub fn points(&self) -> &[u32] {
        &self.points
    }

    pub fn circles(&self) -> &[Vec<u32>] {
        &self.circles
    }

    /// Truncated circles with fewer than three points.
    pub fn is_degenerate(&self, circle: usize) -> bool {
        self.circles[circle].len() < 3
    }

    pub fn degenerate_count(&self) -> usize {
        (0..self.circles.len())
            .filter(|&c| self.is_degenerate(c))
            .count()
    }

    /// Circles containing every point of `set`.
    pub fn circles_containing(&self, set: &[u32]) -> usize {
        self.circles
            .iter()
            .filter(|c| set.iter().all(|p| c.binary_search(p).is_ok()))
            .count()
    }
}

/// `C_x = { i : x + (q+1) i in D }` for each `x` in `D`, keyed by `x`.
pub fn circles_through_zero(d: &DifferenceSet) -> Vec<(u64, Vec<u32>)> {
    let q = d.q();
    let n = q * q + 1;
    d.members()
        .iter()
        .map(|&x| {
            let c: Vec<u32> = (0..n)
                .filter(|&i| d.contains(x + (q + 1) * i))
                .map(|i| i as u32)
                .collect();
            (x, c)
        })
        .collect()
}

/// Zero sets of size `q + 1` over the nonzero rows of `A(G^{q+1}_{q^2+1})`.
/// Tangent planes meet the ovoid in one point and are skipped.
pub fn circles_from_rows(tower: &FieldTower) -> Result<Vec<Vec<u32>>> {
    require_quartic(tower)?;
    let q = tower.q() as u64;
    let n = q * q + 1;
    let g = generator_matrix(tower, (q + 1) as i64, n as usize)?;
    let base = tower.base();
    let mut circles = BTreeSet::new();
    let mut u = [0u8; 4];
    for code in 1..q.pow(4) {
        let mut c = code;
        for slot in u.iter_mut() {
            *slot = (c % q) as u8;
            c /= q;
        }
        let zeros: Vec<u32> = (0..n as usize)
            .filter(|&i| {
                let col = g.column(i).as_slice();
                let dot = (0..4).fold(0u8, |acc, r| base.add(acc, base.mul(u[r], col[r])));
                dot == 0
            })
            .map(|i| i as u32)
            .collect();
        if zeros.len() as u64 == q + 1 {
            circles.insert(zeros);
        }
    }
    Ok(circles.into_iter().collect())
}

/// The Möbius plane on `Z_{q^2+1}`, developed from the circles through 0 by
/// translation. For small `q` the result is checked against row zeros.
pub fn build_full_plane(tower: &FieldTower) -> Result<MobiusPlane> {
    require_quartic(tower)?;
    let q = tower.q();
    let n = q as u64 * q as u64 + 1;
    let d = build_difference_set(tower)?;
    let mut circles = BTreeSet::new();
    for (_, c) in circles_through_zero(&d) {
        if c.len() as u32 != q + 1 {
            continue;
        }
        for shift in 0..n {
            let mut moved: Vec<u32> = c.iter().map(|&i| ((i as u64 + shift) % n) as u32).collect();
            moved.sort_unstable();
            circles.insert(moved);
        }
    }
    let plane = MobiusPlane::from_circles(q, PlaneVariant::Full, (0..n as u32).collect(), circles);
    if q <= ROW_CROSS_CHECK_MAX_Q && circles_from_rows(tower)? != plane.circles {
        return Err(Error::Inconsistent(format!(
            "translated circles differ from row zero sets at q = {q}"
        )));
    }
    Ok(plane)
}

/// `(M1, M2, Mhalf)` on the even residues. The three planes are the zero-set
/// families of `G^{2(q+1)}`, `G^{4(q+1)}` and `G^{q+1}` with `(q^2+1)/2`
/// columns, column `i` labelled `2i`.
pub fn build_truncated_planes(
    plane: &MobiusPlane,
) -> Result<(MobiusPlane, MobiusPlane, MobiusPlane)> {
    let q = plane.q;
    if q.is_multiple_of(2) {
        return Err(Error::EvenCharacteristic(q));
    }
    if plane.variant != PlaneVariant::Full {
        return Err(Error::Shape(format!(
            "truncation needs the full plane, got {}",
            plane.variant
        )));
    }
    let n = q * q + 1;
    let s = n / 2;
    let evens: Vec<u32> = (0..n).step_by(2).collect();
    let mut m1 = BTreeSet::new();
    let mut m2 = BTreeSet::new();
    let mut mhalf = BTreeSet::new();
    for c in &plane.circles {
        let even: Vec<u32> = c.iter().copied().filter(|i| i % 2 == 0).collect();
        let mut halved: Vec<u32> = even
            .iter()
            .map(|&i| if i % 4 == 0 { i / 2 } else { (i + n) / 2 })
            .collect();
        halved.sort_unstable();
        let doubled: Vec<u32> = c
            .iter()
            .copied()
            .filter(|&i| i < s)
            .map(|i| 2 * i)
            .collect();
        m1.insert(even);
        m2.insert(halved);
        mhalf.insert(doubled);
    }
    Ok((
        MobiusPlane::from_circles(q, PlaneVariant::M1, evens.clone(), m1),
        MobiusPlane::from_circles(q, PlaneVariant::M2, evens.clone(), m2),
        MobiusPlane::from_circles(q, PlaneVariant::Mhalf, evens, mhalf),
    ))
}
