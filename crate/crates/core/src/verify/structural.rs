use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::time::Duration;

use super::coverage::verify_coverage;
use super::rank::{rank_of, verify_rank_cphf, verify_rank_cphf_where};
use crate::construct::{half_generators, recursive_generators, CoveringArray};
use crate::gf::FieldTower;
use crate::par::{map_range, Stopwatch};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseReport {
    pub name: &'static str,
    pub pass: bool,
    /// Column sets (or checks) examined.
    pub checked: u64,
    /// A failing column set in the full array's indexing, if any.
    pub witness: Option<Vec<usize>>,
    pub note: String,
}

/// Case analysis for the recursive strength-4 array with `q^2 + 1` columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursiveReport {
    pub q: u32,
    /// Four distinct base indices.
    pub case_distinct: CaseReport,
    /// Exactly three distinct base indices.
    pub case_three: CaseReport,
    /// Two mirrored pairs `{i, i+s, j, j+s}`.
    pub case_mirrored: CaseReport,
    pub elapsed: Option<Duration>,
}

impl RecursiveReport {
    pub fn pass(&self) -> bool {
        self.case_distinct.pass && self.case_three.pass && self.case_mirrored.pass
    }

    pub fn cases(&self) -> [&CaseReport; 3] {
        [&self.case_distinct, &self.case_three, &self.case_mirrored]
    }
}

/// Certifies the array `build_ca4_full(tower, ingredient)` would produce,
/// without materializing its coverage. Column `i` and `i + s` share base
/// index `i mod s`.
pub fn verify_recursive_structure(
    tower: &FieldTower,
    ingredient: &CoveringArray,
) -> Result<RecursiveReport> {
    let q = tower.q() as usize;
    if q.is_multiple_of(2) {
        return Err(Error::EvenCharacteristic(tower.q()));
    }
    let s = (q * q).div_ceil(2);
    if ingredient.k() != s || ingredient.v() as usize != q {
        return Err(Error::Ingredient(format!(
            "expected {s} columns over {q} symbols, got {} columns over {}",
            ingredient.k(),
            ingredient.v()
        )));
    }
    let clock = Stopwatch::start();
    let base = tower.base();
    let gens = recursive_generators(tower)?;

    let distinct = {
        let cert = verify_rank_cphf_where(base, &gens, 4, None, |set| {
            let b: [usize; 4] = [set[0] % s, set[1] % s, set[2] % s, set[3] % s];
            b[0] != b[1]
                && b[0] != b[2]
                && b[0] != b[3]
                && b[1] != b[2]
                && b[1] != b[3]
                && b[2] != b[3]
        })?;
        CaseReport {
            name: "four distinct base indices",
            pass: cert.pass(),
            checked: cert.sets_checked,
            witness: cert
                .uncovered_sets
                .first()
                .map(|w| w.iter().map(|&c| c as usize).collect()),
            note: format!(
                "{} set(s) rank-deficient in all three generators",
                cert.uncovered_sets.len()
            ),
        }
    };

    let three = {
        let mut notes: Vec<String> = Vec::new();
        let mut witness = None;
        let mut checked = 0u64;
        let cover = verify_coverage(ingredient, 3, 1)?;
        checked += cover.subsets_checked;
        if !cover.pass() {
            notes.push(format!("ingredient misses {} tuple(s)", cover.missing));
            witness = cover.witnesses.first().map(|w| w.columns.clone());
        }
        let [_, h2, h4] = half_generators(tower)?;
        for (label, h) in [("G^{2(q+1)}", h2), ("G^{4(q+1)}", h4)] {
            let cert = verify_rank_cphf(base, &[h], 3, None)?;
            checked += cert.sets_checked;
            if !cert.pass() {
                notes.push(format!(
                    "{label} rank-deficient on {} triple(s)",
                    cert.uncovered_sets.len()
                ));
                if witness.is_none() {
                    witness = cert
                        .uncovered_sets
                        .first()
                        .map(|w| w.iter().map(|&c| c as usize).collect());
                }
            }
        }
        // Offsets added to the right half, one per row block after the first.
        let e = tower.subfield_primitive();
        let log_e = base.log(e).expect("subfield primitive is nonzero") as u64;
        let mut offsets: Vec<u8> = Vec::with_capacity(q);
        offsets.push(0);
        offsets.push(base.exp(0));
        offsets.extend((1..=(q as u64).saturating_sub(2)).map(|r| base.exp(r * log_e)));
        let mut sorted = offsets.clone();
        sorted.sort_unstable();
        sorted.dedup();
        checked += 1;
        if sorted.len() != q || offsets.len() != q {
            notes.push(format!("offsets {offsets:?} do not exhaust GF({q})"));
        }
        CaseReport {
            name: "three distinct base indices",
            pass: notes.is_empty(),
            checked,
            witness,
            note: if notes.is_empty() {
                format!("offsets {offsets:?}")
            } else {
                notes.join("; ")
            },
        }
    };

    let mirrored = {
        let full = &gens[0];
        let bad = map_range(s, |i| {
            let mut checked = 0u64;
            let mut first_bad = None;
            for j in i + 1..s {
                checked += 1;
                let cols = [
                    full.column(i),
                    full.column(j),
                    full.column(i + s),
                    full.column(j + s),
                ];
                if rank_of(base, &cols) < 4 && first_bad.is_none() {
                    first_bad = Some(alloc::vec![i, j, i + s, j + s]);
                }
            }
            (checked, first_bad)
        });
        let checked = bad.iter().map(|b| b.0).sum();
        let failures = bad.iter().filter(|b| b.1.is_some()).count();
        let witness = bad.into_iter().find_map(|b| b.1);
        CaseReport {
            name: "two mirrored pairs",
            pass: witness.is_none(),
            checked,
            witness,
            note: format!("{failures} base index(es) with a dependent mirrored set"),
        }
    };

    Ok(RecursiveReport {
        q: tower.q(),
        case_distinct: distinct,
        case_three: three,
        case_mirrored: mirrored,
        elapsed: clock.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build_ca4_full, default_ingredient, SymbolMatrix};
    use crate::verify::verify_coverage;

    #[test]
    fn q3_cases_pass_and_agree_with_brute_force() {
        let tower = FieldTower::build(3, 1, 4, None).unwrap();
        let r = default_ingredient(&tower).unwrap();
        let report = verify_recursive_structure(&tower, &r).unwrap();
        assert!(report.pass(), "{report:?}");
        assert_eq!(report.case_mirrored.checked, 10);
        let ca = build_ca4_full(&tower, &r, "default").unwrap();
        assert!(verify_coverage(&ca, 4, 1).unwrap().pass());
    }

    #[test]
    fn broken_ingredient_fails_case_three() {
        let tower = FieldTower::build(3, 1, 4, None).unwrap();
        let r = default_ingredient(&tower).unwrap();
        let keep = r.n() / 2;
        let cut = r.matrix().remove_rows(|row| row >= keep);
        let broken = CoveringArray::new(
            SymbolMatrix::new(cut.rows(), cut.cols(), cut.data().to_vec()),
            3,
            3,
            r.provenance().clone(),
        )
        .unwrap();
        let report = verify_recursive_structure(&tower, &broken).unwrap();
        assert!(report.case_distinct.pass);
        assert!(!report.case_three.pass);
        assert!(report.case_three.witness.is_some());
        assert!(!report.pass());
    }
}
