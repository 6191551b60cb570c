use alloc::vec::Vec;

use super::require_quartic;
use crate::construct::generator_matrix;
use crate::gf::{CoordinateVector, FieldTower};
use crate::verify::rank_of;
use crate::Result;

/// Points `L(alpha^{i(q+1)})`, `i < q^2 + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ovoid {
    points: Vec<CoordinateVector>,
}

impl Ovoid {
    pub fn points(&self) -> &[CoordinateVector] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// First collinear triple, if any (none for an ovoid).
    pub fn find_collinear(&self, tower: &FieldTower) -> Option<[usize; 3]> {
        let n = self.points.len();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let v = [&self.points[a], &self.points[b], &self.points[c]];
                    if rank_of(tower.base(), &v) < 3 {
                        return Some([a, b, c]);
                    }
                }
            }
        }
        None
    }
}

pub fn build_ovoid(tower: &FieldTower) -> Result<Ovoid> {
    require_quartic(tower)?;
    let q = tower.q() as i64;
    let g = generator_matrix(tower, q + 1, (q * q + 1) as usize)?;
    Ok(Ovoid {
        points: g.columns().to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q3_is_a_cap() {
        let t = FieldTower::build(3, 1, 4, None).unwrap();
        let o = build_ovoid(&t).unwrap();
        assert_eq!(o.len(), 10);
        assert_eq!(o.points()[0].as_slice(), &[1, 0, 0, 0]);
        assert_eq!(o.find_collinear(&t), None);
    }
}
