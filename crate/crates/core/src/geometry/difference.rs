use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::require_quartic;
use crate::gf::FieldTower;
use crate::{Error, Result};

/// `D = { j : Tr(alpha^j) = 0 }` in `Z_n`, `n = (q^4 - 1)/(q - 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceSet {
    q: u64,
    modulus: u64,
    members: Vec<u64>,
    lookup: Vec<bool>,
}

impl DifferenceSet {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Sorted residues.
    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn contains(&self, r: u64) -> bool {
        self.lookup[(r % self.modulus) as usize]
    }

    /// `(v, k, lambda)` of the design.
    pub fn parameters(&self) -> (u64, u64, u64) {
        let q = self.q;
        (self.modulus, q * q + q + 1, q + 1)
    }

    /// Number of ordered pairs `(a, b)` of members with `a - b = d`, for each
    /// residue `d`.
    pub fn difference_counts(&self) -> Vec<u64> {
        let n = self.modulus;
        let mut counts = vec![0u64; n as usize];
        for &a in &self.members {
            for &b in &self.members {
                if a != b {
                    counts[((a + n - b) % n) as usize] += 1;
                }
            }
        }
        counts
    }
}

/// Runs the trace recurrence of the tower polynomial, seeded with
/// `Tr(alpha^j)` for `j < 4`, and keeps the zeros. The sequence is checked
/// against direct trace evaluation.
pub fn build_difference_set(tower: &FieldTower) -> Result<DifferenceSet> {
    require_quartic(tower)?;
    let q = tower.q() as u64;
    let modulus = tower.projective_points();
    let len = modulus as usize;
    let seeds: Vec<u8> = (0..4).map(|j| tower.trace(tower.alpha_pow(j))).collect();
    let seq = tower.lfsr_sequence(&seeds, len);
    let direct = tower.trace_sequence(tower.one(), len);
    if let Some(j) = (0..len).find(|&j| seq[j] != direct[j]) {
        return Err(Error::Inconsistent(format!(
            "recurrence and trace disagree at j = {j}: {} vs {}",
            seq[j], direct[j]
        )));
    }
    let mut lookup = vec![false; len];
    let members: Vec<u64> = (0..len)
        .filter(|&j| seq[j] == 0)
        .map(|j| {
            lookup[j] = true;
            j as u64
        })
        .collect();
    Ok(DifferenceSet {
        q,
        modulus,
        members,
        lookup,
    })
}
