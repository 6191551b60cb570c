use alloc::format;
use alloc::string::String;

use super::coverage::{verify_coverage, CoverageReport};
use super::rank::{verify_rank_cphf, RankCertificate};
use super::structural::{verify_recursive_structure, RecursiveReport};
use crate::construct::{
    build_ca3_projective, build_ca4_full, build_ca4_half, default_ingredient, generator_matrix,
    half_generators, restrict_columns, CoveringArray, CA3_PROJECTIVE, CA3_RESTRICTED, CA4_FULL,
    CA4_HALF,
};
use crate::gf::FieldTower;
use crate::{Error, Result};

/// Verdict of the construction-level engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructuralVerdict {
    Rank(RankCertificate),
    Recursive(RecursiveReport),
}

impl StructuralVerdict {
    pub fn pass(&self) -> bool {
        match self {
            StructuralVerdict::Rank(c) => c.pass(),
            StructuralVerdict::Recursive(r) => r.pass(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub coverage: CoverageReport,
    pub structural: StructuralVerdict,
    /// Whether the array is symbol-for-symbol the one its provenance names.
    pub matches_construction: bool,
    pub agree: bool,
    pub explanation: Option<String>,
}

/// Runs brute-force coverage and the construction's own engine on `ca`.
///
/// When the array equals its rebuilt construction the two verdicts must
/// agree; a disagreement there is returned as [`Error::Inconsistent`]. When
/// the array differs from the construction (a corrupted or edited file) the
/// structural verdict still describes the construction, and the report says
/// so.
pub fn cross_check(
    ca: &CoveringArray,
    t: usize,
    tower: &FieldTower,
    ingredient: Option<&CoveringArray>,
) -> Result<CrossCheckReport> {
    if t > ca.t() as usize {
        return Err(Error::Strength { t, k: ca.k() });
    }
    let construction = ca.provenance().construction.as_str();
    let base = tower.base();
    let (rebuilt, structural) = match construction {
        CA3_PROJECTIVE | CA3_RESTRICTED => {
            let full = build_ca3_projective(tower)?;
            let rebuilt = if ca.k() < full.k() {
                restrict_columns(&full, ca.k())?
            } else {
                full
            };
            let gens = [
                generator_matrix(tower, 1, ca.k())?,
                generator_matrix(tower, -1, ca.k())?,
            ];
            (
                rebuilt,
                StructuralVerdict::Rank(verify_rank_cphf(base, &gens, t, None)?),
            )
        }
        CA4_HALF => {
            let gens = half_generators(tower)?;
            (
                build_ca4_half(tower)?,
                StructuralVerdict::Rank(verify_rank_cphf(base, &gens, t, None)?),
            )
        }
        CA4_FULL => {
            let owned;
            let r = match ingredient {
                Some(r) => r,
                None => {
                    owned = default_ingredient(tower)?;
                    &owned
                }
            };
            let name = ca.provenance().ingredient.clone().unwrap_or_default();
            (
                build_ca4_full(tower, r, &name)?,
                StructuralVerdict::Recursive(verify_recursive_structure(tower, r)?),
            )
        }
        other => {
            return Err(Error::Inconsistent(format!(
                "no structural engine for construction {other:?}"
            )))
        }
    };
    let coverage = verify_coverage(ca, t, 1)?;
    let matches_construction = rebuilt.matrix() == ca.matrix();
    let agree = coverage.pass() == structural.pass();
    if matches_construction && !agree {
        return Err(Error::Inconsistent(format!(
            "{construction}: coverage says {}, structural engine says {}",
            verdict_word(coverage.pass()),
            verdict_word(structural.pass())
        )));
    }
    let explanation = (!matches_construction).then(|| {
        String::from(
            "array differs from its named construction; the structural engine certifies the \
             construction, not this file",
        )
    });
    Ok(CrossCheckReport {
        coverage,
        structural,
        matches_construction,
        agree,
        explanation,
    })
}

fn verdict_word(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::SymbolMatrix;

    #[test]
    fn half_q3_agrees() {
        let tower = FieldTower::build(3, 1, 4, None).unwrap();
        let ca = build_ca4_half(&tower).unwrap();
        let rep = cross_check(&ca, 4, &tower, None).unwrap();
        assert!(rep.matches_construction && rep.agree && rep.coverage.pass());
    }

    #[test]
    fn corrupted_symbol_is_flagged() {
        let tower = FieldTower::build(3, 1, 4, None).unwrap();
        let ca = build_ca4_half(&tower).unwrap();
        // flip a symbol in a row that is the unique carrier of some 4-tuple
        let mut data = ca.matrix().data().to_vec();
        let k = ca.k();
        let last = ca.n() - 1;
        data[last * k] = (data[last * k] + 1) % 3;
        let bad = CoveringArray::new(
            SymbolMatrix::new(ca.n(), k, data),
            4,
            3,
            ca.provenance().clone(),
        )
        .unwrap();
        let rep = cross_check(&bad, 4, &tower, None).unwrap();
        assert!(!rep.matches_construction);
        assert!(rep.structural.pass());
        assert!(rep.explanation.is_some());
        if rep.coverage.pass() {
            assert!(rep.agree);
        }
    }

    #[test]
    fn ca3_and_full_agree() {
        let t3 = FieldTower::build(3, 1, 3, None).unwrap();
        let ca = build_ca3_projective(&t3).unwrap();
        let rep = cross_check(&ca, 3, &t3, None).unwrap();
        assert!(rep.agree && rep.coverage.pass());

        let t4 = FieldTower::build(3, 1, 4, None).unwrap();
        let r = default_ingredient(&t4).unwrap();
        let full = build_ca4_full(&t4, &r, "default").unwrap();
        let rep = cross_check(&full, 4, &t4, Some(&r)).unwrap();
        assert!(rep.matches_construction && rep.agree && rep.coverage.pass());
        assert!(cross_check(&full, 5, &t4, Some(&r)).is_err());
    }
}
