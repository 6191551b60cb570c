use covarray_core::gf::{BaseField, FieldTower, PrimePoly};

use crate::{Error, Result};

/// `p e m base_coeffs tower_coeffs`, coefficients low degree first.
pub fn describe_tower(tower: &FieldTower) -> String {
    let base = tower.base();
    let mut words: Vec<String> = vec![
        base.p().to_string(),
        base.e().to_string(),
        tower.m().to_string(),
    ];
    words.extend(base.poly().coeffs().iter().map(|c| c.to_string()));
    words.extend(tower.poly().iter().map(|c| c.to_string()));
    words.join(" ")
}

pub fn parse_tower_descriptor(line: &str) -> Result<FieldTower> {
    let nums: Vec<u32> = line
        .split_whitespace()
        .map(|w| {
            w.parse::<u32>()
                .map_err(|_| Error::parse(1, format!("not a number: {w:?}")))
        })
        .collect::<Result<_>>()?;
    if nums.len() < 3 {
        return Err(Error::parse(1, "expected `p e m` followed by coefficients"));
    }
    let (p, e, m) = (nums[0], nums[1], nums[2]);
    let want = 3 + (e as usize + 1) + (m as usize + 1);
    if nums.len() != want {
        return Err(Error::parse(
            1,
            format!(
                "expected {want} numbers for e = {e}, m = {m}, found {}",
                nums.len()
            ),
        ));
    }
    let base_coeffs = nums[3..4 + e as usize].to_vec();
    let tower_coeffs: Vec<u8> = nums[4 + e as usize..]
        .iter()
        .map(|&c| {
            u8::try_from(c).map_err(|_| Error::parse(1, format!("coefficient {c} too large")))
        })
        .collect::<Result<_>>()?;
    let base = BaseField::with_poly(PrimePoly::new(p, base_coeffs)?)?;
    Ok(FieldTower::over(base, m, Some(&tower_coeffs))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for (p, e, m) in [(3, 1, 4), (3, 2, 3), (7, 1, 4)] {
            let t = FieldTower::build(p, e, m, None).unwrap();
            let line = describe_tower(&t);
            let back = parse_tower_descriptor(&line).unwrap();
            assert_eq!(back.poly(), t.poly());
            assert_eq!(back.base().poly(), t.base().poly());
        }
        let t = FieldTower::build(7, 1, 4, Some(&[3, 4, 5, 0, 1])).unwrap();
        assert_eq!(describe_tower(&t), "7 1 4 4 1 3 4 5 0 1");
        assert!(parse_tower_descriptor("7 1 4 4 1 3 4 5 0").is_err());
        assert!(parse_tower_descriptor("7 1 4 4 1 1 1 1 1 1").is_err());
    }
}
